#include "chessland/board.hpp"

#include <bit>
#include <stdexcept>

namespace chessland {

const char* piece_name(Piece p) {
    switch (p) {
        case Piece::King: return "king";
        case Piece::Queen: return "queen";
        case Piece::Rook: return "rook";
        case Piece::Bishop: return "bishop";
        case Piece::Knight: return "knight";
    }
    return "?";
}

bool piece_from_name(const std::string& name, Piece& out) {
    if (name == "king") out = Piece::King;
    else if (name == "queen") out = Piece::Queen;
    else if (name == "rook") out = Piece::Rook;
    else if (name == "bishop") out = Piece::Bishop;
    else if (name == "knight") out = Piece::Knight;
    else return false;
    return true;
}

int SquareSet::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool SquareSet::empty() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

int SquareSet::first() const {
    for (int i = 0; i < kSetWords; ++i)
        if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
    return -1;
}

SquareSet& SquareSet::operator|=(const SquareSet& o) {
    for (int i = 0; i < kSetWords; ++i) w_[i] |= o.w_[i];
    return *this;
}

SquareSet& SquareSet::operator&=(const SquareSet& o) {
    for (int i = 0; i < kSetWords; ++i) w_[i] &= o.w_[i];
    return *this;
}

SquareSet& SquareSet::subtract(const SquareSet& o) {
    for (int i = 0; i < kSetWords; ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool SquareSet::is_subset_of(const SquareSet& o) const {
    for (int i = 0; i < kSetWords; ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool SquareSet::intersects(const SquareSet& o) const {
    for (int i = 0; i < kSetWords; ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

std::vector<Square> SquareSet::squares(int n) const {
    std::vector<Square> out;
    for_each([&](int idx) { out.push_back(square_at(n, idx)); });
    return out;
}

namespace {

constexpr int kKnightOffsets[8][2] = {{1, 2},  {2, 1},  {-1, 2}, {-2, 1},
                                      {1, -2}, {2, -1}, {-1, -2}, {-2, -1}};
constexpr int kKingOffsets[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                    {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
constexpr int kRookDirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr int kBishopDirs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

void add_leaper(SquareSet& s, int n, Square from, const int offsets[8][2]) {
    for (int i = 0; i < 8; ++i) {
        Square to{from.file + offsets[i][0], from.rank + offsets[i][1]};
        if (on_board(n, to)) s.set(square_index(n, to));
    }
}

void add_rider(SquareSet& s, int n, Square from, const int dirs[4][2]) {
    for (int i = 0; i < 4; ++i) {
        Square to{from.file + dirs[i][0], from.rank + dirs[i][1]};
        while (on_board(n, to)) {
            s.set(square_index(n, to));
            to.file += dirs[i][0];
            to.rank += dirs[i][1];
        }
    }
}

}  // namespace

SquareSet attack_set(int n, Piece piece, Square from) {
    if (n < 1 || n > kMaxBoard) throw std::invalid_argument("board size out of range");
    if (!on_board(n, from)) throw std::invalid_argument("square off board");
    SquareSet s;
    switch (piece) {
        case Piece::Knight: add_leaper(s, n, from, kKnightOffsets); break;
        case Piece::King: add_leaper(s, n, from, kKingOffsets); break;
        case Piece::Rook: add_rider(s, n, from, kRookDirs); break;
        case Piece::Bishop: add_rider(s, n, from, kBishopDirs); break;
        case Piece::Queen:
            add_rider(s, n, from, kRookDirs);
            add_rider(s, n, from, kBishopDirs);
            break;
    }
    return s;
}

MoveGraph build_move_graph(int n, Piece piece) {
    if (n < 1 || n > kMaxBoard) throw std::invalid_argument("board size out of range");
    MoveGraph g;
    g.n = n;
    g.piece = piece;
    g.adj.resize(n * n);
    g.degree.resize(n * n);
    for (int idx = 0; idx < n * n; ++idx) {
        g.adj[idx] = attack_set(n, piece, square_at(n, idx));
        g.degree[idx] = g.adj[idx].count();
        g.all.set(idx);
    }
    return g;
}

Square apply_symmetry(int n, int sym, Square s) {
    int f = s.file, r = s.rank;
    if (sym & 1) f = n + 1 - f;           // mirror east-west
    if (sym & 2) r = n + 1 - r;           // mirror north-south
    if (sym & 4) std::swap(f, r);         // transpose
    return Square{f, r};
}

std::vector<Square> dihedral_orbit(int n, Square s) {
    if (!on_board(n, s)) throw std::invalid_argument("square off board");
    std::vector<Square> orbit;
    for (int sym = 0; sym < 8; ++sym) {
        Square t = apply_symmetry(n, sym, s);
        bool dup = false;
        for (const Square& u : orbit) dup = dup || u == t;
        if (!dup) orbit.push_back(t);
    }
    std::sort(orbit.begin(), orbit.end(),
              [n](Square a, Square b) { return square_index(n, a) < square_index(n, b); });
    return orbit;
}

SquareSet color_mask(int n, Color c) {
    SquareSet s;
    for (int idx = 0; idx < n * n; ++idx)
        if (square_color(square_at(n, idx)) == c) s.set(idx);
    return s;
}

}  // namespace chessland
