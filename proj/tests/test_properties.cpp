#include <doctest.h>

#include <tuple>

#include "chessland/sequences.hpp"
#include "chessland/solvers.hpp"

using namespace chessland;

namespace {

// Test-side blocking-aware ray caster, independent of the solver path.
SquareSet ray_attacks(int n, Piece piece, Square from, const SquareSet& occupied) {
    if (piece == Piece::Knight || piece == Piece::King) return attack_set(n, piece, from);
    static const int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                   {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    int lo = (piece == Piece::Bishop) ? 4 : 0;
    int hi = (piece == Piece::Rook) ? 4 : 8;
    SquareSet out;
    for (int d = lo; d < hi; ++d) {
        Square to{from.file + dirs[d][0], from.rank + dirs[d][1]};
        while (on_board(n, to)) {
            int idx = square_index(n, to);
            out.set(idx);
            if (occupied.test(idx)) break;
            to.file += dirs[d][0];
            to.rank += dirs[d][1];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("answer sheets are invariant under the dihedral group") {
    for (auto [piece, n] : {std::pair{Piece::Knight, 6}, {Piece::King, 7}, {Piece::Queen, 5},
                            {Piece::Bishop, 6}, {Piece::Rook, 4}}) {
        AnswerSheet s = answer_sheet(n, piece);
        for (int idx = 0; idx < n * n; ++idx) {
            for (int sym = 0; sym < 8; ++sym) {
                const TrapVerdict& image = s.at(apply_symmetry(n, sym, square_at(n, idx)));
                CHECK(image.kind == s.cells[idx].kind);
                CHECK(image.count == s.cells[idx].count);
            }
        }
    }
}

TEST_CASE("blocking-irrelevance: witnesses cover the same escapes with real rays") {
    for (auto [piece, n] : {std::pair{Piece::Rook, 6}, {Piece::Bishop, 7}, {Piece::Queen, 5},
                            {Piece::Queen, 6}, {Piece::Queen, 7}}) {
        MoveGraph g = build_move_graph(n, piece);
        AnswerSheet s = answer_sheet(n, piece);
        for (int idx = 0; idx < n * n; ++idx) {
            const TrapVerdict& v = s.cells[idx];
            if (v.kind != TrapVerdict::Kind::Trapped) continue;
            SquareSet occupied = v.witness;
            occupied.set(idx);
            SquareSet plain, blocked;
            v.witness.for_each([&](int w) {
                plain |= attack_set(n, piece, square_at(n, w));
                blocked |= ray_attacks(n, piece, square_at(n, w), occupied);
            });
            plain &= g.adj[idx];
            blocked &= g.adj[idx];
            CHECK(plain == blocked);
            // The witness constraints themselves hold under blocking rays.
            v.witness.for_each([&](int w) {
                SquareSet atk = ray_attacks(n, piece, square_at(n, w), occupied);
                CHECK(!atk.test(idx));
                v.witness.for_each([&](int w2) {
                    if (w2 != w) CHECK(!atk.test(w2));
                });
            });
        }
    }
}

TEST_CASE("trapping counts respect the pairwise m-bound") {
    for (auto [piece, n] : {std::pair{Piece::Knight, 6}, {Piece::King, 7}, {Piece::Queen, 5},
                            {Piece::Rook, 5}, {Piece::Bishop, 7}}) {
        PairwiseCover pc = pairwise_cover_max(n, piece);
        if (!pc.has_pair || pc.max_common == 0) continue;
        MoveGraph g = build_move_graph(n, piece);
        AnswerSheet s = answer_sheet(n, piece);
        for (int idx = 0; idx < n * n; ++idx)
            if (s.cells[idx].kind == TrapVerdict::Kind::Trapped)
                CHECK(s.cells[idx].count >=
                      (g.degree[idx] + pc.max_common - 1) / pc.max_common);
    }
}

TEST_CASE("knight trapping equals ceil(deg/2) on boards 5 and 6") {
    for (int n = 5; n <= 6; ++n) {
        MoveGraph g = build_move_graph(n, Piece::Knight);
        AnswerSheet s = answer_sheet(n, Piece::Knight);
        for (int idx = 0; idx < n * n; ++idx) {
            REQUIRE(s.cells[idx].kind == TrapVerdict::Kind::Trapped);
            CHECK(s.cells[idx].count == (g.degree[idx] + 1) / 2);
        }
    }
}

TEST_CASE("king trapping count is (deg+1)/2 on trappable squares, boards 7..9") {
    for (int n = 7; n <= 9; ++n) {
        MoveGraph g = build_move_graph(n, Piece::King);
        AnswerSheet s = answer_sheet(n, Piece::King);
        for (int idx = 0; idx < n * n; ++idx)
            if (s.cells[idx].kind == TrapVerdict::Kind::Trapped)
                CHECK(s.cells[idx].count == (g.degree[idx] + 1) / 2);
    }
}

TEST_CASE("bishop trapped counts lie in [floor(n/2), n-2] for 5 <= n <= 9") {
    for (int n = 5; n <= 9; ++n) {
        AnswerSheet s = answer_sheet(n, Piece::Bishop);
        for (const TrapVerdict& v : s.cells)
            if (v.kind == TrapVerdict::Kind::Trapped) {
                CHECK(v.count >= n / 2);
                CHECK(v.count <= n - 2);
            }
    }
}

TEST_CASE("queen trapped counts respect ceil((n-1)/4) for 5 <= n <= 7") {
    for (int n = 5; n <= 7; ++n) {
        AnswerSheet s = answer_sheet(n, Piece::Queen);
        for (const TrapVerdict& v : s.cells)
            if (v.kind == TrapVerdict::Kind::Trapped) CHECK(v.count >= (n - 1 + 3) / 4);
    }
}

TEST_CASE("queen domination sandwich and non-attacking bound") {
    for (int n : {9, 10}) {
        int gamma = exact_domination(n, Piece::Queen).gamma;
        CHECK(2 * gamma >= n - 1);          // (n-1)/2 <= gamma
        CHECK(gamma <= n - n / 3);          // gamma <= n - floor(n/3)
    }
    // gamma <= alpha, with alpha = n for the queen once n >= 4.
    for (int n = 4; n <= 8; ++n) {
        CHECK(n_queens(n).count > 0);
        CHECK(exact_domination(n, Piece::Queen).gamma <= n);
    }
}

TEST_CASE("sigma is never below gamma on exactly solved pairs") {
    const std::tuple<Piece, int> pairs[] = {{Piece::King, 4},  {Piece::King, 5},
                                            {Piece::Rook, 4},  {Piece::Rook, 5},
                                            {Piece::Knight, 4}, {Piece::Knight, 5},
                                            {Piece::Queen, 5}, {Piece::Queen, 6}};
    for (auto [piece, n] : pairs) {
        SurveyResult s = exact_surveying(n, piece);
        REQUIRE(s.status == SearchStatus::Proven);
        CHECK(s.days >= exact_domination(n, piece).gamma);
    }
}
