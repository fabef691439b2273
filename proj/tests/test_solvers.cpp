#include <doctest.h>

#include "chessland/solvers.hpp"

using namespace chessland;

TEST_CASE("exact surveying small boards") {
    SurveyResult king1 = exact_surveying(1, Piece::King);
    CHECK(king1.status == SearchStatus::Proven);
    CHECK(king1.days == 1);

    SurveyResult king4 = exact_surveying(4, Piece::King);
    CHECK(king4.days == 4);
    CHECK(king4.proven_optimal);

    SurveyResult knight4 = exact_surveying(4, Piece::Knight);
    CHECK(knight4.days == 7);
    CHECK(knight4.proven_optimal);

    for (int n = 2; n <= 5; ++n) {
        SurveyResult rook = exact_surveying(n, Piece::Rook);
        CHECK(rook.days == n);
        CHECK(rook.proven_optimal);
    }

    SurveyResult knight2 = exact_surveying(2, Piece::Knight);
    CHECK(knight2.status == SearchStatus::Infeasible);
    SurveyResult knight3 = exact_surveying(3, Piece::Knight);
    CHECK(knight3.status == SearchStatus::Infeasible);
}

TEST_CASE("exact surveying arbitrates the 5-board knight conflict") {
    SurveyResult r = exact_surveying(5, Piece::Knight);
    REQUIRE(r.status == SearchStatus::Proven);
    CHECK(r.proven_optimal);
    CHECK((r.days == 7 || r.days == 8));
    PlanDiagnostics d = validate_plan(r.witness);
    CHECK(d.legal);
    CHECK(d.uncovered.empty());
}

TEST_CASE("the embedded 6-board knight route is optimal") {
    SurveyResult r = exact_surveying(6, Piece::Knight);
    REQUIRE(r.status == SearchStatus::Proven);
    CHECK(r.days == 8);
}

TEST_CASE("queen 9-board surveying number is five") {
    SurveyResult r = exact_surveying(9, Piece::Queen);
    REQUIRE(r.status == SearchStatus::Proven);
    CHECK(r.days == 5);
    CHECK(r.proven_optimal);
}

TEST_CASE("bishop surveying per color") {
    for (int n = 4; n <= 6; ++n) {
        for (Color c : {Color::Black, Color::White}) {
            SurveyResult r = exact_surveying(n, Piece::Bishop, {}, c);
            REQUIRE(r.status == SearchStatus::Proven);
            CHECK(r.days == n - 2);
        }
    }
    // The full bishop graph is disconnected: no single path covers both colors.
    SurveyResult whole = exact_surveying(4, Piece::Bishop);
    CHECK(whole.status == SearchStatus::Infeasible);
}

TEST_CASE("exact domination") {
    CHECK(exact_domination(6, Piece::Knight).gamma == 8);
    CHECK(exact_domination(9, Piece::King).gamma == 9);
    CHECK(exact_domination(9, Piece::Queen).gamma == 5);
    CHECK(exact_domination(10, Piece::Queen).gamma == 5);
    const int knight_dn[6] = {1, 4, 4, 4, 5, 8};
    for (int n = 1; n <= 6; ++n) CHECK(exact_domination(n, Piece::Knight).gamma == knight_dn[n - 1]);
    for (int n = 3; n <= 7; ++n) {
        int third = (n + 2) / 3;
        CHECK(exact_domination(n, Piece::King).gamma == third * third);
    }
    // Witness covers the board.
    DominationResult r = exact_domination(5, Piece::Rook);
    MoveGraph g = build_move_graph(5, Piece::Rook);
    SquareSet covered;
    r.witness.for_each([&](int s) { covered |= g.closed(s); });
    CHECK(covered == g.all);
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
    SearchBudget tiny;
    tiny.max_states = 50;
    tiny.max_seconds = 120;
    SurveyResult r = exact_surveying(6, Piece::King, tiny);
    if (r.status == SearchStatus::BudgetExhausted) {
        CHECK(!r.proven_optimal);
        CHECK(r.days > 0);  // greedy fallback witness
        PlanDiagnostics d = validate_plan(r.witness);
        CHECK(d.legal);
        CHECK(d.uncovered.empty());
    }
}

TEST_CASE("search witnesses are reproducible") {
    SurveyResult a = exact_surveying(5, Piece::Knight);
    SurveyResult b = exact_surveying(5, Piece::Knight);
    CHECK(a.days == b.days);
    CHECK(a.witness.path == b.witness.path);
    DominationResult da = exact_domination(6, Piece::Knight);
    DominationResult db = exact_domination(6, Piece::Knight);
    CHECK(da.witness == db.witness);
    TrapVerdict ta = trap_verdict(6, Piece::Queen, {3, 3});
    TrapVerdict tb = trap_verdict(6, Piece::Queen, {3, 3});
    CHECK(ta.witness == tb.witness);
}

TEST_CASE("pairwise cover maxima") {
    CHECK(pairwise_cover_max(8, Piece::Queen).max_common == 12);
    CHECK(pairwise_cover_max(8, Piece::Knight).max_common == 2);
    CHECK(pairwise_cover_max(8, Piece::Rook).max_common == 2);
    // Exhaustive pair enumeration oracle (also checks the frozen value 3).
    {
        MoveGraph g = build_move_graph(8, Piece::King);
        int best = 0;
        bool any = false;
        for (int a = 0; a < 64; ++a)
            for (int b = a + 1; b < 64; ++b) {
                if (g.adjacent(a, b)) continue;
                any = true;
                best = std::max(best, (g.adj[a] & g.adj[b]).count());
            }
        PairwiseCover pc = pairwise_cover_max(8, Piece::King);
        CHECK(pc.has_pair == any);
        CHECK(pc.max_common == best);
        CHECK(pc.max_common == 3);
    }
    CHECK(!pairwise_cover_max(1, Piece::Rook).has_pair);
    CHECK(!pairwise_cover_max(2, Piece::Queen).has_pair);  // two queens always clash
}

TEST_CASE("n-queens") {
    CHECK(n_queens(8).count == 92);
    CHECK(n_queens(2).count == 0);
    CHECK(n_queens(3).count == 0);
    NQueensResult r6 = n_queens(6);
    CHECK(r6.count == 4);
    for (const SquareSet& w : r6.witnesses) {
        CHECK(w.count() == 6);
        w.for_each([&](int idx) {
            Square s = square_at(6, idx);
            CHECK(s.file != s.rank);
            CHECK(s.file + s.rank != 7);
        });
    }
    // Forced counts are consistent with filtering the full enumeration.
    NQueensResult all5 = n_queens(5);
    for (int idx = 0; idx < 25; ++idx) {
        long long through = 0;
        for (const SquareSet& w : all5.witnesses) through += w.test(idx) ? 1 : 0;
        CHECK(n_queens(5, square_at(5, idx)).count == through);
    }
}
