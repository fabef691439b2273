// Board geometry, piece movement, move graphs and dihedral symmetry.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace chessland {

inline constexpr int kMaxBoard = 26;
inline constexpr int kMaxSquares = kMaxBoard * kMaxBoard;
inline constexpr int kSetWords = (kMaxSquares + 63) / 64;

enum class Piece { King, Queen, Rook, Bishop, Knight };
enum class Color { Black, White };

const char* piece_name(Piece p);
bool piece_from_name(const std::string& name, Piece& out);

// 1-based coordinates, (1,1) = south-west corner.
struct Square {
    int file = 0;
    int rank = 0;
    friend bool operator==(const Square&, const Square&) = default;
};

inline bool operator<(const Square& a, const Square& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.file < b.file;
}

// Rank-major index, (1,1) -> 0.
inline int square_index(int n, Square s) { return (s.rank - 1) * n + (s.file - 1); }
inline Square square_at(int n, int idx) { return Square{idx % n + 1, idx / n + 1}; }
inline bool on_board(int n, Square s) {
    return s.file >= 1 && s.file <= n && s.rank >= 1 && s.rank <= n;
}

// Black iff file+rank is even.
inline Color square_color(Square s) {
    return ((s.file + s.rank) & 1) == 0 ? Color::Black : Color::White;
}

// Bitmask over the n*n squares of a board, rank-major.
class SquareSet {
public:
    void set(int idx) { w_[idx >> 6] |= uint64_t{1} << (idx & 63); }
    void reset(int idx) { w_[idx >> 6] &= ~(uint64_t{1} << (idx & 63)); }
    bool test(int idx) const { return (w_[idx >> 6] >> (idx & 63)) & 1; }

    int count() const;
    bool empty() const;
    int first() const;  // lowest set index, -1 when empty

    SquareSet& operator|=(const SquareSet& o);
    SquareSet& operator&=(const SquareSet& o);
    SquareSet& subtract(const SquareSet& o);  // this &= ~o
    friend SquareSet operator|(SquareSet a, const SquareSet& b) { return a |= b; }
    friend SquareSet operator&(SquareSet a, const SquareSet& b) { return a &= b; }
    bool is_subset_of(const SquareSet& o) const;
    bool intersects(const SquareSet& o) const;
    friend bool operator==(const SquareSet&, const SquareSet&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kSetWords; ++w) {
            uint64_t bits = w_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    std::vector<Square> squares(int n) const;
    const std::array<uint64_t, kSetWords>& words() const { return w_; }

private:
    std::array<uint64_t, kSetWords> w_{};
};

// Empty-board adjacency of one piece on an n-by-n board.
struct MoveGraph {
    int n = 0;
    Piece piece = Piece::King;
    std::vector<SquareSet> adj;  // open neighborhoods
    std::vector<int> degree;
    SquareSet all;

    int squares() const { return n * n; }
    bool adjacent(int a, int b) const { return adj[a].test(b); }
    SquareSet closed(int idx) const {
        SquareSet s = adj[idx];
        s.set(idx);
        return s;
    }
};

// Throws std::invalid_argument when n < 1 or n > kMaxBoard.
MoveGraph build_move_graph(int n, Piece piece);

// Equals the open neighborhood of `from`; throws on off-board squares.
SquareSet attack_set(int n, Piece piece, Square from);

// The eight symmetries of the square, sym in 0..7 (identity first).
Square apply_symmetry(int n, int sym, Square s);

// Orbit of a square, deduplicated and sorted by rank-major index; the first
// element is the canonical representative.
std::vector<Square> dihedral_orbit(int n, Square s);

SquareSet color_mask(int n, Color c);

}  // namespace chessland
