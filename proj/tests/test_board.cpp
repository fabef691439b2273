#include <doctest.h>

#include <stdexcept>

#include "chessland/board.hpp"

using namespace chessland;

TEST_CASE("move graph basics") {
    MoveGraph k3 = build_move_graph(3, Piece::Knight);
    CHECK(k3.adj[square_index(3, {2, 2})].empty());  // centered knight is stuck

    MoveGraph king1 = build_move_graph(1, Piece::King);
    CHECK(king1.squares() == 1);
    CHECK(king1.adj[0].empty());

    MoveGraph k8 = build_move_graph(8, Piece::Knight);
    CHECK(k8.adj[square_index(8, {4, 4})].count() == 8);

    CHECK_THROWS_AS(build_move_graph(0, Piece::King), std::invalid_argument);
    CHECK_THROWS_AS(build_move_graph(kMaxBoard + 1, Piece::King), std::invalid_argument);
}

TEST_CASE("attack sets") {
    CHECK(attack_set(6, Piece::Rook, {1, 1}).count() == 10);  // 2n-2
    for (int n : {4, 5, 8, 9}) CHECK(attack_set(n, Piece::Queen, {1, 1}).count() == 3 * n - 3);
    SquareSet b = attack_set(7, Piece::Bishop, {1, 1});
    CHECK(b.count() == 6);
    for (int i = 2; i <= 7; ++i) CHECK(b.test(square_index(7, {i, i})));
    CHECK_THROWS_AS(attack_set(4, Piece::Rook, {5, 1}), std::invalid_argument);
}

TEST_CASE("square colors") {
    CHECK(square_color({1, 1}) == Color::Black);
    CHECK(square_color({1, 2}) == Color::White);
    for (int n : {3, 4, 9, 12}) CHECK(square_color({n, n}) == Color::Black);
}

TEST_CASE("queen center attack count on odd boards") {
    for (int n = 3; n <= 11; n += 2) {
        Square center{(n + 1) / 2, (n + 1) / 2};
        CHECK(attack_set(n, Piece::Queen, center).count() == 4 * n - 4);
    }
}

TEST_CASE("dihedral orbits") {
    auto center = dihedral_orbit(5, {3, 3});
    REQUIRE(center.size() == 1);
    CHECK(center[0] == Square{3, 3});

    auto corners = dihedral_orbit(4, {1, 1});
    REQUIRE(corners.size() == 4);
    CHECK(corners[0] == Square{1, 1});
    CHECK(corners[3] == Square{4, 4});

    // Derived by applying all eight symmetry maps to (2,1) on a 4-board.
    auto generic = dihedral_orbit(4, {2, 1});
    CHECK(generic.size() == 8);

    for (int n = 1; n <= 8; ++n) {
        for (int idx = 0; idx < n * n; ++idx) {
            auto orbit = dihedral_orbit(n, square_at(n, idx));
            CHECK(8 % orbit.size() == 0);
            for (const Square& s : orbit) CHECK(on_board(n, s));
        }
    }
}

TEST_CASE("adjacency symmetry, loops and edge colors up to n=10") {
    for (int n = 1; n <= 10; ++n) {
        for (Piece p : {Piece::King, Piece::Queen, Piece::Rook, Piece::Bishop, Piece::Knight}) {
            MoveGraph g = build_move_graph(n, p);
            for (int a = 0; a < g.squares(); ++a) {
                CHECK(!g.adj[a].test(a));
                g.adj[a].for_each([&](int b) {
                    CHECK(g.adj[b].test(a));
                    if (p == Piece::Knight)
                        CHECK(square_color(square_at(n, a)) != square_color(square_at(n, b)));
                    if (p == Piece::Bishop)
                        CHECK(square_color(square_at(n, a)) == square_color(square_at(n, b)));
                });
            }
        }
    }
}
