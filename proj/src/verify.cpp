#include "chessland/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "chessland/report.hpp"
#include "chessland/sequences.hpp"

namespace chessland {

namespace {

struct Checker {
    bool ok = true;
    bool skipped = false;
    std::string detail;

    void fail(const std::string& msg) {
        if (ok && !skipped) detail = msg;
        ok = false;
    }
    void skip(const std::string& msg) {
        if (ok && !skipped) detail = msg;
        skipped = true;
    }
    template <typename A, typename B>
    void eq(const A& actual, const B& expected, const std::string& what) {
        if (!(actual == static_cast<A>(expected)))
            fail(what + ": got " + std::to_string(actual) + ", expected " +
                 std::to_string(expected));
    }
    void is_true(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

// Ray-cast attack set with other pieces in the way; the independence
// constraints are supposed to make blocking irrelevant, which this verifies.
SquareSet blocking_aware_attacks(int n, Piece piece, Square from, const SquareSet& occupied) {
    if (piece == Piece::Knight || piece == Piece::King) return attack_set(n, piece, from);
    static const int rook_dirs[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    static const int bishop_dirs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    SquareSet out;
    auto cast = [&](const int dirs[4][2]) {
        for (int d = 0; d < 4; ++d) {
            Square to{from.file + dirs[d][0], from.rank + dirs[d][1]};
            while (on_board(n, to)) {
                int idx = square_index(n, to);
                out.set(idx);
                if (occupied.test(idx)) break;
                to.file += dirs[d][0];
                to.rank += dirs[d][1];
            }
        }
    };
    if (piece == Piece::Rook || piece == Piece::Queen) cast(rook_dirs);
    if (piece == Piece::Bishop || piece == Piece::Queen) cast(bishop_dirs);
    return out;
}

bool verdict_matches_code(const TrapVerdict& v, int code) {
    if (code == 0) return v.kind != TrapVerdict::Kind::Trapped;
    return v.kind == TrapVerdict::Kind::Trapped && v.count == code;
}

std::string cell_name(Square s) {
    return "(" + std::to_string(s.file) + "," + std::to_string(s.rank) + ")";
}

void check_sheet_grid(Checker& c, const AnswerSheet& sheet,
                      const std::vector<std::vector<int>>& rows_bottom_up,
                      const std::string& what) {
    for (int r = 1; r <= sheet.n; ++r)
        for (int f = 1; f <= sheet.n; ++f)
            if (!verdict_matches_code(sheet.at({f, r}), rows_bottom_up[r - 1][f - 1]))
                c.fail(what + " cell " + cell_name({f, r}));
}

// --- criteria ------------------------------------------------------------

void criterion_shoelace_formula(Checker& c, const SearchBudget&, int) {
    const long long expected[15] = {-1, 1, 3, 5, 7, 9, 11, 27, 31, 35, 39, 43, 47, 52, 83};
    for (int n = 1; n <= 15; ++n)
        c.eq(shoelace_formula_days(n), expected[n - 1], "SF(" + std::to_string(n) + ")");
}

void criterion_knight_plans(Checker& c, const SearchBudget&, int) {
    auto check = [&](const SurveyPlan& plan, int days, const std::string& what) {
        PlanDiagnostics d = validate_plan(plan);
        c.is_true(d.legal, what + " legal");
        c.is_true(d.uncovered.empty(), what + " covering");
        c.eq(plan.days(), days, what + " days");
    };
    const std::pair<int, int> best[] = {{4, 7}, {5, 8}, {7, 11}, {9, 25}, {11, 36}, {13, 47}, {14, 52}};
    for (auto [n, days] : best)
        check(*knight_plan(n), days, "knight_plan(" + std::to_string(n) + ")");
    check(knight_shoelace_plan(6), 9, "knight_shoelace_plan(6)");
    check(*knight_plan(6), 8, "knight_plan(6) embedded");
    c.is_true(!knight_plan(2).has_value() && !knight_plan(3).has_value(),
              "boards 2 and 3 infeasible");
}

void criterion_shoelace_theorem(Checker& c, const SearchBudget&, int) {
    for (int h = 4; h <= 20; ++h) {
        SurveyPlan strip = shoelace_column_plan(h);
        c.eq(strip.days(), 2 * h - 3, "shoelace h=" + std::to_string(h));
        PlanDiagnostics d = validate_plan(strip);
        c.is_true(d.legal, "shoelace legal h=" + std::to_string(h));
        if (h >= 6) {
            // The 7-wide strip is fully seen from the two active columns.
            SquareSet strip_mask;
            for (int f = 1; f <= 7; ++f)
                for (int r = 1; r <= h; ++r) strip_mask.set(square_index(strip.n, {f, r}));
            c.is_true((d.uncovered & strip_mask).empty(),
                      "shoelace covers strip h=" + std::to_string(h));
        }
    }
}

void criterion_king_straight(Checker& c, const SearchBudget&, int) {
    const long long table2[8] = {1, 1, 1, 4, 7, 10, 15, 20};
    for (int n = 1; n <= 8; ++n) c.eq(king_f(n), table2[n - 1], "f(" + std::to_string(n) + ")");
    for (int n = 3; n <= 60; ++n)
        c.eq(king_f(n + 3), king_f(n) + 2 * n + 3, "f recursion n=" + std::to_string(n));
    for (int n = 3; n <= 15; ++n) {
        SurveyPlan plan = king_straight_plan(n);
        PlanDiagnostics d = validate_plan(plan);
        c.is_true(d.legal && d.uncovered.empty(), "straight plan " + std::to_string(n));
        c.eq(static_cast<long long>(plan.days()), king_f(n),
             "straight days n=" + std::to_string(n));
    }
}

void criterion_king_zigzag(Checker& c, const SearchBudget&, int) {
    const long long table3[15] = {1, 1, 1, 4, 7, 10, 14, 18, 23, 29, 34, 40, 48, 55, 62};
    for (int n = 1; n <= 15; ++n)
        c.eq(king_zigzag_days(n).G, table3[n - 1], "G(" + std::to_string(n) + ")");
    for (int n = 1; n <= 15; ++n) {
        ZigzagPlanResult z = king_zigzag_plan(n);
        PlanDiagnostics d = validate_plan(z.plan);
        c.is_true(d.legal && d.uncovered.empty(), "zigzag plan " + std::to_string(n));
        c.eq(static_cast<long long>(z.plan.days()), king_zigzag_days(n).G,
             "zigzag days n=" + std::to_string(n));
    }
}

struct SigmaRecord {
    Piece piece;
    int n;
    std::optional<Color> color;
    int sigma;
};

// Exact surveying results carried from criterion 6 into criterion 7's
// sigma >= gamma cross-check.
struct SweepState {
    std::vector<SigmaRecord> sigma;
};

void criterion_exact_surveying(Checker& c, const SearchBudget& budget, SweepState& state) {
    state.sigma.clear();
    auto run = [&](Piece p, int n, std::optional<Color> color,
                   std::optional<int> expected) -> std::optional<int> {
        SurveyResult r = exact_surveying(n, p, budget, color);
        std::string what = std::string(piece_name(p)) + " n=" + std::to_string(n);
        if (r.status == SearchStatus::BudgetExhausted) {
            c.skip("budget exhausted on " + what);
            return std::nullopt;
        }
        c.is_true(r.status == SearchStatus::Proven, what + " proven");
        c.is_true(r.proven_optimal, what + " optimality");
        if (expected) c.eq(r.days, *expected, what + " sigma");
        state.sigma.push_back({p, n, color, r.days});
        return r.days;
    };
    const int king_sigma[6] = {1, 1, 1, 4, 7, 10};
    for (int n = 1; n <= 6; ++n) run(Piece::King, n, {}, king_sigma[n - 1]);
    for (int n = 2; n <= 5; ++n) run(Piece::Rook, n, {}, n);
    for (int n = 4; n <= 6; ++n) {
        run(Piece::Bishop, n, Color::Black, n - 2);
        run(Piece::Bishop, n, Color::White, n - 2);
    }
    run(Piece::Knight, 4, {}, 7);
    run(Piece::Queen, 9, {}, 5);
    // Arbitration of the 5-board fastest-time conflict (the two embedded
    // reference tables disagree, 8 vs 7).
    if (auto v = run(Piece::Knight, 5, {}, std::nullopt)) {
        c.is_true(*v == 7 || *v == 8, "knight 5 arbitration in {7,8}");
        c.detail = "knight sigma(5) = " + std::to_string(*v) +
                   " (arbitrates the 7-vs-8 table conflict)";
    }
    SurveyResult inf = exact_surveying(2, Piece::Knight, budget);
    c.is_true(inf.status == SearchStatus::Infeasible, "knight 2 infeasible");
}

void criterion_domination(Checker& c, const SearchBudget& budget, const SweepState& state) {
    auto gamma = [&](Piece p, int n, std::optional<Color> color) -> std::optional<int> {
        DominationResult r = exact_domination(n, p, budget, color);
        if (r.status == SearchStatus::BudgetExhausted) {
            c.skip("budget exhausted on gamma " + std::string(piece_name(p)) + " n=" +
                   std::to_string(n));
            return std::nullopt;
        }
        c.is_true(r.status == SearchStatus::Proven,
                  "gamma proven " + std::string(piece_name(p)) + std::to_string(n));
        return r.gamma;
    };
    const int knight_dn[6] = {1, 4, 4, 4, 5, 8};
    for (int n = 1; n <= 6; ++n) {
        auto g = gamma(Piece::Knight, n, {});
        if (g) c.eq(*g, knight_dn[n - 1], "knight gamma n=" + std::to_string(n));
    }
    for (int n = 3; n <= 7; ++n) {
        auto g = gamma(Piece::King, n, {});
        int expected = ((n + 2) / 3) * ((n + 2) / 3);
        if (g) c.eq(*g, expected, "king gamma n=" + std::to_string(n));
    }
    auto q9 = gamma(Piece::Queen, 9, {});
    if (q9) c.eq(*q9, 5, "queen gamma 9");
    auto q10 = gamma(Piece::Queen, 10, {});
    if (q10) c.eq(*q10, 5, "queen gamma 10");
    // sigma >= gamma on every exactly computed pair.
    for (const SigmaRecord& rec : state.sigma) {
        auto g = gamma(rec.piece, rec.n, rec.color);
        if (g)
            c.is_true(rec.sigma >= *g, "sigma >= gamma for " +
                                           std::string(piece_name(rec.piece)) + " n=" +
                                           std::to_string(rec.n));
    }
}

void criterion_answer_sheets(Checker& c, const SearchBudget& budget, int jobs) {
    // Knight, 7-board: the ceil(deg/2) sheet.
    {
        AnswerSheet s = answer_sheet(7, Piece::Knight, budget, jobs);
        std::vector<std::vector<int>> rows = {
            {1, 2, 2, 2, 2, 2, 1}, {2, 2, 3, 3, 3, 2, 2}, {2, 3, 4, 4, 4, 3, 2},
            {2, 3, 4, 4, 4, 3, 2}, {2, 3, 4, 4, 4, 3, 2}, {2, 2, 3, 3, 3, 2, 2},
            {1, 2, 2, 2, 2, 2, 1}};
        check_sheet_grid(c, s, rows, "knight 7");
    }
    // King, boards 7..9: corners 2, inner ring and corner-adjacent border 0,
    // free border 3, interior 4.
    for (int n = 7; n <= 9; ++n) {
        AnswerSheet s = answer_sheet(n, Piece::King, budget, jobs);
        for (int r = 1; r <= n; ++r) {
            for (int f = 1; f <= n; ++f) {
                bool fe = f == 1 || f == n, re = r == 1 || r == n;
                int d = std::min({f - 1, r - 1, n - f, n - r});
                int code;
                if (fe && re) code = 2;
                else if (d == 1) code = 0;
                else if (d == 0)
                    code = ((fe && (r == 2 || r == n - 1)) || (re && (f == 2 || f == n - 1))) ? 0 : 3;
                else code = 4;
                if (!verdict_matches_code(s.at({f, r}), code))
                    c.fail("king " + std::to_string(n) + " cell " + cell_name({f, r}));
            }
        }
    }
    // Bishop quarter sheets for boards 7 and 8, cell for cell.
    {
        AnswerSheet s7 = answer_sheet(7, Piece::Bishop, budget, jobs);
        const std::vector<std::vector<int>> q7 = {
            {0, 5, 4, 3, 4, 5, 0}, {0, 0, 4, 0, 0}, {0, 0, 0}, {0}};
        for (int i = 0; i < 4; ++i) {
            int r = 7 - i;
            for (size_t k = 0; k < q7[i].size(); ++k) {
                int f = 1 + i + static_cast<int>(k);
                if (!verdict_matches_code(s7.at({f, r}), q7[i][k]))
                    c.fail("bishop 7 quarter cell " + cell_name({f, r}));
            }
        }
        AnswerSheet s8 = answer_sheet(8, Piece::Bishop, budget, jobs);
        const std::vector<std::vector<int>> q8 = {
            {0, 6, 5, 4, 4, 5, 6, 0}, {0, 0, 5, 5, 0, 0}, {0, 0, 0, 0}, {0, 0}};
        for (int i = 0; i < 4; ++i) {
            int r = 8 - i;
            for (size_t k = 0; k < q8[i].size(); ++k) {
                int f = 1 + i + static_cast<int>(k);
                if (!verdict_matches_code(s8.at({f, r}), q8[i][k]))
                    c.fail("bishop 8 quarter cell " + cell_name({f, r}));
            }
        }
    }
    // Queen boards 3, 4, 5.
    {
        AnswerSheet s3 = answer_sheet(3, Piece::Queen, budget, jobs);
        check_sheet_grid(c, s3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, "queen 3");
        AnswerSheet s4 = answer_sheet(4, Piece::Queen, budget, jobs);
        check_sheet_grid(c, s4, {{2, 2, 2, 2}, {2, 0, 0, 2}, {2, 0, 0, 2}, {2, 2, 2, 2}},
                         "queen 4");
        AnswerSheet s5 = answer_sheet(5, Piece::Queen, budget, jobs);
        check_sheet_grid(c, s5,
                         {{3, 2, 2, 2, 3},
                          {2, 2, 3, 2, 2},
                          {2, 3, 4, 3, 2},
                          {2, 2, 3, 2, 2},
                          {3, 2, 2, 2, 3}},
                         "queen 5");
    }
    // Rook: trapped with n-1 soldiers everywhere.
    for (int n = 2; n <= 7; ++n) {
        AnswerSheet s = answer_sheet(n, Piece::Rook, budget, jobs);
        for (const TrapVerdict& v : s.cells)
            if (v.kind != TrapVerdict::Kind::Trapped || v.count != n - 1)
                c.fail("rook " + std::to_string(n) + " sheet");
    }
}

void criterion_pairwise(Checker& c, const SearchBudget& budget, int jobs) {
    c.eq(pairwise_cover_max(8, Piece::Knight).max_common, 2, "pairwise knight 8");
    c.eq(pairwise_cover_max(8, Piece::Rook).max_common, 2, "pairwise rook 8");
    c.eq(pairwise_cover_max(8, Piece::Queen).max_common, 12, "pairwise queen 8");
    // m-bound and the knight ceil(deg/2) rule across boards 5..8.
    for (int n = 5; n <= 8; ++n) {
        MoveGraph g = build_move_graph(n, Piece::Knight);
        int m = pairwise_cover_max(n, Piece::Knight).max_common;
        AnswerSheet s = answer_sheet(n, Piece::Knight, budget, jobs);
        for (int idx = 0; idx < n * n; ++idx) {
            const TrapVerdict& v = s.cells[idx];
            if (v.kind != TrapVerdict::Kind::Trapped) continue;
            int deg = g.degree[idx];
            c.is_true(v.count >= (deg + m - 1) / m, "m-bound knight n=" + std::to_string(n));
            c.eq(v.count, (deg + 1) / 2, "knight ceil(deg/2) n=" + std::to_string(n));
        }
    }
    // m-bound on the other sheets exercised by the acceptance run.
    const std::pair<Piece, int> other[] = {{Piece::Queen, 5}, {Piece::Rook, 6}, {Piece::King, 8},
                                           {Piece::Bishop, 7}};
    for (auto [p, n] : other) {
        MoveGraph g = build_move_graph(n, p);
        PairwiseCover pc = pairwise_cover_max(n, p);
        if (!pc.has_pair || pc.max_common == 0) continue;
        AnswerSheet s = answer_sheet(n, p, budget, jobs);
        for (int idx = 0; idx < n * n; ++idx) {
            const TrapVerdict& v = s.cells[idx];
            if (v.kind != TrapVerdict::Kind::Trapped) continue;
            c.is_true(v.count >= (g.degree[idx] + pc.max_common - 1) / pc.max_common,
                      "m-bound " + std::string(piece_name(p)) + " n=" + std::to_string(n));
        }
    }
}

void criterion_nqueens(Checker& c, const SearchBudget&, int) {
    NQueensResult r8 = n_queens(8);
    c.eq(r8.count, 92LL, "n-queens count 8");
    SquareSet hit;
    for (const SquareSet& w : r8.witnesses) hit |= w;
    c.eq(hit.count(), 64, "every square of the 8-board admits a solution");
    NQueensResult r6 = n_queens(6);
    for (const SquareSet& w : r6.witnesses)
        w.for_each([&](int idx) {
            Square s = square_at(6, idx);
            if (s.file == s.rank || s.file + s.rank == 7)
                c.fail("6-board solution touches a main diagonal");
        });
}

void criterion_sequences(Checker& c, const SearchBudget& budget, int) {
    const int ensum[10] = {1, 1, 2, 2, 2, 2, 3, 3, 4, 4};
    for (int n = 1; n <= 10; ++n)
        c.eq(midpoint_free_even_sum_max(n), ensum[n - 1], "E_" + std::to_string(n));
    const long long draw[10] = {0, 1, 1, 2, 3, 4, 4, 5, 5, 6};
    for (int n = 1; n <= 10; ++n)
        c.eq(diagonal_domination(n, /*raw_formula=*/true), draw[n - 1],
             "raw d_" + std::to_string(n));
    c.eq(diagonal_domination(1), 1LL, "d_1 override");
    for (int n = 2; n <= 8; ++n)
        c.eq(static_cast<long long>(diagonal_domination_bruteforce(n)), diagonal_domination(n),
             "diagonal domination oracle n=" + std::to_string(n));
    DominationResult q9 = exact_domination(9, Piece::Queen, budget);
    DominationResult q10 = exact_domination(10, Piece::Queen, budget);
    if (q9.status == SearchStatus::Proven && q10.status == SearchStatus::Proven) {
        c.is_true(diagonal_domination(9) == 5 && q9.gamma == 5, "d_9 = gamma(queen,9) = 5");
        c.is_true(diagonal_domination(10) == 6 && q10.gamma == 5, "d_10 = 6 > gamma(queen,10) = 5");
    } else {
        c.skip("queen domination budget exhausted");
    }
}

void criterion_properties(Checker& c, const SearchBudget& budget, int jobs) {
    // Validator determinism.
    SurveyPlan plan = *knight_plan(7);
    PlanDiagnostics a = validate_plan(plan), b = validate_plan(plan);
    c.is_true(a.legal == b.legal && a.uncovered == b.uncovered && a.days == b.days,
              "validator determinism");
    // Sheet symmetry, witness replay and blocking-irrelevance.
    const std::pair<Piece, int> sheets[] = {{Piece::Knight, 6}, {Piece::King, 7},
                                            {Piece::Rook, 5},   {Piece::Bishop, 7},
                                            {Piece::Queen, 5},  {Piece::Queen, 6}};
    for (auto [p, n] : sheets) {
        AnswerSheet s = answer_sheet(n, p, budget, jobs);
        MoveGraph g = build_move_graph(n, p);
        for (int idx = 0; idx < n * n; ++idx) {
            Square sq = square_at(n, idx);
            for (int sym = 0; sym < 8; ++sym) {
                const TrapVerdict& u = s.at(apply_symmetry(n, sym, sq));
                const TrapVerdict& v = s.cells[idx];
                if (u.kind != v.kind || u.count != v.count)
                    c.fail("sheet symmetry " + std::string(piece_name(p)) + std::to_string(n));
            }
            const TrapVerdict& v = s.cells[idx];
            if (v.kind != TrapVerdict::Kind::Trapped) continue;
            c.is_true(replay_trap_witness(g, idx, v.witness),
                      "witness replay " + std::string(piece_name(p)) + std::to_string(n));
            // Blocking-aware recomputation covers the same escape squares.
            SquareSet occupied = v.witness;
            occupied.set(idx);
            SquareSet covered_empty, covered_blocking;
            v.witness.for_each([&](int w) {
                covered_empty |= attack_set(n, p, square_at(n, w));
                covered_blocking |= blocking_aware_attacks(n, p, square_at(n, w), occupied);
            });
            covered_empty &= g.adj[idx];
            covered_blocking &= g.adj[idx];
            c.is_true(covered_empty == covered_blocking,
                      "blocking irrelevance " + std::string(piece_name(p)) + std::to_string(n));
        }
        Json j = sheet_to_json(s);
        c.is_true(sheet_to_json(sheet_from_json(j)) == j,
                  "sheet json round-trip " + std::string(piece_name(p)) + std::to_string(n));
    }
    const SurveyPlan plans[] = {*knight_plan(9), rook_plan(5), bishop_plan(7, Color::White),
                                queen_plan9(), king_zigzag_plan(12).plan};
    for (const SurveyPlan& pl : plans) {
        Json j = plan_to_json(pl);
        c.is_true(plan_to_json(plan_from_json(j)) == j, "plan json round-trip");
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SearchBudget& budget, int jobs) {
    using CheckFn = std::function<void(Checker&, const SearchBudget&, int)>;
    SweepState state;
    const std::pair<std::string, CheckFn> criteria[] = {
        {"shoelace formula row", criterion_shoelace_formula},
        {"knight plan validity", criterion_knight_plans},
        {"shoelace theorem", criterion_shoelace_theorem},
        {"king straight spiral", criterion_king_straight},
        {"king zig-zag spiral", criterion_king_zigzag},
        {"exact surveying oracle",
         [&state](Checker& c, const SearchBudget& b, int) {
             criterion_exact_surveying(c, b, state);
         }},
        {"domination cross-checks",
         [&state](Checker& c, const SearchBudget& b, int) {
             criterion_domination(c, b, state);
         }},
        {"trapping answer sheets", criterion_answer_sheets},
        {"pairwise-coverage bounds", criterion_pairwise},
        {"n-queens", criterion_nqueens},
        {"sequences", criterion_sequences},
        {"property suites", criterion_properties},
    };
    std::vector<CriterionResult> results;
    int id = 1;
    for (const auto& [name, fn] : criteria) {
        CriterionResult res;
        res.id = id++;
        res.name = name;
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(checker, budget, jobs);
        } catch (const BudgetExhaustedError& e) {
            checker.skip(e.what());
        } catch (const std::exception& e) {
            checker.fail(std::string("exception: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.status = !checker.ok      ? CriterionResult::Status::Fail
                     : checker.skipped ? CriterionResult::Status::Skipped
                                       : CriterionResult::Status::Pass;
        res.detail = checker.detail;
        results.push_back(std::move(res));
    }
    return results;
}

std::string format_acceptance_report(const std::vector<CriterionResult>& results,
                                      bool include_timing) {
    std::ostringstream out;
    for (const CriterionResult& r : results) {
        const char* status = r.status == CriterionResult::Status::Pass      ? "PASS"
                             : r.status == CriterionResult::Status::Skipped ? "SKIP"
                                                                            : "FAIL";
        out << status << "  " << r.id << ". " << r.name;
        if (include_timing) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
            out << buf;
        }
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace chessland
