#include <doctest.h>

#include <stdexcept>

#include "chessland/solvers.hpp"

using namespace chessland;

TEST_CASE("trap verdict examples") {
    for (Square enemy : {Square{3, 3}, Square{1, 1}, Square{6, 4}}) {
        TrapVerdict v = trap_verdict(6, Piece::Rook, enemy);
        CHECK(v.kind == TrapVerdict::Kind::Trapped);
        CHECK(v.count == 5);
    }
    TrapVerdict knight = trap_verdict(7, Piece::Knight, {3, 4});
    CHECK(knight.kind == TrapVerdict::Kind::Trapped);
    CHECK(knight.count == 4);

    CHECK(trap_verdict(7, Piece::King, {2, 2}).kind == TrapVerdict::Kind::Untrappable);
    CHECK(trap_verdict(3, Piece::Knight, {2, 2}).kind == TrapVerdict::Kind::AutoTrapped);
    CHECK(trap_verdict(3, Piece::Queen, {2, 2}).kind == TrapVerdict::Kind::Untrappable);
    CHECK_THROWS_AS(trap_verdict(4, Piece::King, {5, 5}), std::invalid_argument);
}

TEST_CASE("trap witnesses replay through the independent checker") {
    const std::pair<Piece, int> cases[] = {{Piece::Rook, 6}, {Piece::Knight, 7},
                                           {Piece::Queen, 5}, {Piece::Bishop, 7}};
    for (auto [piece, n] : cases) {
        MoveGraph g = build_move_graph(n, piece);
        for (int idx = 0; idx < n * n; ++idx) {
            TrapVerdict v = trap_verdict(n, piece, square_at(n, idx));
            if (v.kind != TrapVerdict::Kind::Trapped) continue;
            CHECK(replay_trap_witness(g, idx, v.witness));
            CHECK(v.witness.count() == v.count);
        }
    }
}

TEST_CASE("answer sheets") {
    AnswerSheet bishop7 = answer_sheet(7, Piece::Bishop);
    const int top_row[7] = {0, 5, 4, 3, 4, 5, 0};
    for (int f = 1; f <= 7; ++f) {
        const TrapVerdict& v = bishop7.at({f, 7});
        if (top_row[f - 1] == 0) CHECK(v.kind != TrapVerdict::Kind::Trapped);
        else {
            CHECK(v.kind == TrapVerdict::Kind::Trapped);
            CHECK(v.count == top_row[f - 1]);
        }
    }
    AnswerSheet queen5 = answer_sheet(5, Piece::Queen);
    CHECK(queen5.at({3, 3}).kind == TrapVerdict::Kind::Trapped);
    CHECK(queen5.at({3, 3}).count == 4);

    AnswerSheet king9 = answer_sheet(9, Piece::King);
    CHECK(king9.at({1, 1}).kind == TrapVerdict::Kind::Trapped);
    CHECK(king9.at({1, 1}).count == 2);

    // Spot-check: non-canonical cells recomputed directly agree with the
    // propagated sheet.
    for (Square s : {Square{7, 3}, Square{5, 7}, Square{6, 6}, Square{7, 5}}) {
        TrapVerdict direct = trap_verdict(9, Piece::King, s);
        CHECK(direct.kind == king9.at(s).kind);
        CHECK(direct.count == king9.at(s).count);
    }
}

TEST_CASE("queen is trappable on every square of boards 6 and 7") {
    // Ground truth from the solver, frozen here.
    for (int n = 6; n <= 7; ++n) {
        AnswerSheet s = answer_sheet(n, Piece::Queen);
        for (const TrapVerdict& v : s.cells) CHECK(v.kind == TrapVerdict::Kind::Trapped);
    }
}

TEST_CASE("parallel answer sheets match sequential") {
    AnswerSheet seq = answer_sheet(7, Piece::Knight, {}, 1);
    AnswerSheet par = answer_sheet(7, Piece::Knight, {}, 4);
    REQUIRE(seq.cells.size() == par.cells.size());
    for (size_t i = 0; i < seq.cells.size(); ++i) {
        CHECK(seq.cells[i].kind == par.cells[i].kind);
        CHECK(seq.cells[i].count == par.cells[i].count);
        CHECK(seq.cells[i].witness == par.cells[i].witness);
    }
}

TEST_CASE("closed-form trapping") {
    // Knight at least two files and ranks from the border needs four.
    ClosedFormTrap knight = closed_form_trap(7, Piece::Knight, {4, 4});
    REQUIRE(knight.kind == ClosedFormTrap::Kind::Verdict);
    CHECK(knight.verdict.count == 4);

    ClosedFormTrap bishop = closed_form_trap(7, Piece::Bishop, {4, 1});
    REQUIRE(bishop.kind == ClosedFormTrap::Kind::Verdict);
    CHECK(bishop.verdict.kind == TrapVerdict::Kind::Trapped);
    CHECK(bishop.verdict.count == 3);

    for (int n = 2; n <= 7; ++n) {
        MoveGraph g = build_move_graph(n, Piece::Rook);
        for (int idx = 0; idx < n * n; ++idx) {
            ClosedFormTrap rook = closed_form_trap(n, Piece::Rook, square_at(n, idx));
            REQUIRE(rook.kind == ClosedFormTrap::Kind::Verdict);
            CHECK(rook.verdict.count == n - 1);
            CHECK(replay_trap_witness(g, idx, rook.verdict.witness));
        }
    }

    ClosedFormTrap queen = closed_form_trap(8, Piece::Queen, {1, 1});
    REQUIRE(queen.kind == ClosedFormTrap::Kind::Bounds);
    CHECK(queen.lower == 2);  // ceil(21/12)
    CHECK(queen.upper == 7);
}

TEST_CASE("closed forms match the exact solver wherever both are defined") {
    for (int n = 4; n <= 7; ++n) {
        for (Piece p : {Piece::Knight, Piece::King, Piece::Bishop, Piece::Rook}) {
            for (int idx = 0; idx < n * n; ++idx) {
                TrapVerdict exact = trap_verdict(n, p, square_at(n, idx));
                ClosedFormTrap cf = closed_form_trap(n, p, square_at(n, idx));
                REQUIRE(cf.kind == ClosedFormTrap::Kind::Verdict);
                CHECK(exact.kind == cf.verdict.kind);
                if (exact.kind == TrapVerdict::Kind::Trapped)
                    CHECK(exact.count == cf.verdict.count);
            }
        }
        // Queen bounds bracket the exact counts.
        for (int idx = 0; idx < n * n; ++idx) {
            TrapVerdict exact = trap_verdict(n, Piece::Queen, square_at(n, idx));
            ClosedFormTrap cf = closed_form_trap(n, Piece::Queen, square_at(n, idx));
            if (exact.kind == TrapVerdict::Kind::Trapped && cf.kind == ClosedFormTrap::Kind::Bounds) {
                CHECK(exact.count >= cf.lower);
                CHECK(exact.count <= cf.upper);
            }
        }
    }
    // Small-board specials.
    CHECK(closed_form_trap(3, Piece::Knight, {2, 2}).verdict.kind == TrapVerdict::Kind::AutoTrapped);
    CHECK(closed_form_trap(3, Piece::Knight, {1, 2}).verdict.count == 2);
    CHECK(closed_form_trap(1, Piece::Rook, {1, 1}).verdict.kind == TrapVerdict::Kind::AutoTrapped);
}
