#include <algorithm>
#include <stdexcept>

#include "chessland/solvers.hpp"

namespace chessland {

namespace {

TrapVerdict auto_trapped() {
    TrapVerdict v;
    v.kind = TrapVerdict::Kind::AutoTrapped;
    return v;
}

TrapVerdict untrappable() {
    TrapVerdict v;
    v.kind = TrapVerdict::Kind::Untrappable;
    return v;
}

TrapVerdict trapped(int count) {
    TrapVerdict v;
    v.kind = TrapVerdict::Kind::Trapped;
    v.count = count;
    return v;
}

ClosedFormTrap as_verdict(TrapVerdict v) {
    ClosedFormTrap out;
    out.kind = ClosedFormTrap::Kind::Verdict;
    out.verdict = std::move(v);
    return out;
}

int knight_degree(int n, Square s) { return attack_set(n, Piece::Knight, s).count(); }

ClosedFormTrap knight_closed_form(int n, Square s) {
    if (n <= 2) return as_verdict(auto_trapped());
    if (n == 3) {
        if (s.file == 2 && s.rank == 2) return as_verdict(auto_trapped());
        return as_verdict(trapped(2));
    }
    // The 4-board keeps its special middle: the four inner squares need
    // three knights even though they only see four squares.
    if (n == 4 && s.file >= 2 && s.file <= 3 && s.rank >= 2 && s.rank <= 3)
        return as_verdict(trapped(3));
    int k = knight_degree(n, s);
    return as_verdict(trapped((k + 1) / 2));
}

ClosedFormTrap king_closed_form(int n, Square s) {
    if (n == 1) return as_verdict(auto_trapped());
    if (n == 2) return as_verdict(untrappable());
    bool f_edge = s.file == 1 || s.file == n;
    bool r_edge = s.rank == 1 || s.rank == n;
    if (f_edge && r_edge) return as_verdict(trapped(2));
    int d = std::min({s.file - 1, s.rank - 1, n - s.file, n - s.rank});
    if (d == 1) return as_verdict(untrappable());
    if (d == 0) {
        bool next_to_corner = (f_edge && (s.rank == 2 || s.rank == n - 1)) ||
                              (r_edge && (s.file == 2 || s.file == n - 1));
        if (next_to_corner) return as_verdict(untrappable());
        return as_verdict(trapped(3));
    }
    return as_verdict(trapped(4));
}

ClosedFormTrap bishop_closed_form(int n, Square s) {
    int main_off = std::abs(s.file - s.rank);
    int anti_off = std::abs(s.file + s.rank - (n + 1));
    bool corner_adjacent =
        (s.file == 1 || s.file == n) ? (s.rank == 2 || s.rank == n - 1)
                                     : ((s.rank == 1 || s.rank == n) && (s.file == 2 || s.file == n - 1));
    if ((main_off <= 1 || anti_off <= 1) && !corner_adjacent) return as_verdict(untrappable());
    int longest = n - std::min(main_off, anti_off);
    return as_verdict(trapped(longest - 1));
}

ClosedFormTrap rook_closed_form(int n, Square s) {
    if (n == 1) return as_verdict(auto_trapped());
    TrapVerdict v = trapped(n - 1);
    // Diagonal of the board left after deleting the enemy's row and column.
    std::vector<int> files, ranks;
    for (int f = 1; f <= n; ++f)
        if (f != s.file) files.push_back(f);
    for (int r = 1; r <= n; ++r)
        if (r != s.rank) ranks.push_back(r);
    for (int i = 0; i < n - 1; ++i) v.witness.set(square_index(n, {files[i], ranks[i]}));
    return as_verdict(v);
}

}  // namespace

ClosedFormTrap closed_form_trap(int n, Piece piece, Square enemy) {
    if (!on_board(n, enemy)) throw std::invalid_argument("enemy square off board");
    switch (piece) {
        case Piece::Knight: return knight_closed_form(n, enemy);
        case Piece::King: return king_closed_form(n, enemy);
        case Piece::Bishop:
            if (n <= 3) return as_verdict(trap_verdict(n, piece, enemy));
            return bishop_closed_form(n, enemy);
        case Piece::Rook: return rook_closed_form(n, enemy);
        case Piece::Queen: {
            int deg = attack_set(n, Piece::Queen, enemy).count();
            if (deg == 0) return as_verdict(auto_trapped());
            ClosedFormTrap out;
            out.kind = ClosedFormTrap::Kind::Bounds;
            out.lower = (deg + 11) / 12;
            out.upper = n - 1;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

PairwiseCover pairwise_cover_max(int n, Piece piece) {
    MoveGraph g = build_move_graph(n, piece);
    PairwiseCover out;
    for (int a = 0; a < g.squares(); ++a) {
        for (int b = a + 1; b < g.squares(); ++b) {
            if (g.adjacent(a, b)) continue;
            out.has_pair = true;
            out.max_common = std::max(out.max_common, (g.adj[a] & g.adj[b]).count());
        }
    }
    return out;
}

namespace {

void queens_dfs(int n, int rank, uint32_t cols, uint64_t diag1, uint64_t diag2,
                const std::optional<Square>& forced, std::vector<int>& placed,
                NQueensResult& out, bool keep) {
    if (rank > n) {
        ++out.count;
        if (keep) {
            SquareSet w;
            for (int r = 1; r <= n; ++r) w.set(square_index(n, {placed[r], r}));
            out.witnesses.push_back(w);
        }
        return;
    }
    for (int f = 1; f <= n; ++f) {
        if (forced && forced->rank == rank && forced->file != f) continue;
        int d1 = f - rank + n;      // 1..2n-1 shifted
        int d2 = f + rank - 2;      // 0..2n-2
        if ((cols >> f & 1) || (diag1 >> d1 & 1) || (diag2 >> d2 & 1)) continue;
        placed[rank] = f;
        queens_dfs(n, rank + 1, cols | (uint32_t{1} << f), diag1 | (uint64_t{1} << d1),
                   diag2 | (uint64_t{1} << d2), forced, placed, out, keep);
    }
}

}  // namespace

NQueensResult n_queens(int n, std::optional<Square> forced, bool keep_witnesses) {
    if (n < 1 || n > kMaxBoard) throw std::invalid_argument("board size out of range");
    if (forced && !on_board(n, *forced)) throw std::invalid_argument("forced square off board");
    NQueensResult out;
    std::vector<int> placed(n + 1, 0);
    queens_dfs(n, 1, 0, 0, 0, forced, placed, out, keep_witnesses);
    return out;
}

}  // namespace chessland
