// Constructive surveying plans and their closed-form day counts, plus the
// plan validator that arbitrates every constructive claim.
#pragma once

#include <optional>
#include <vector>

#include "chessland/board.hpp"

namespace chessland {

struct SurveyPlan {
    Piece piece = Piece::King;
    int n = 0;
    std::vector<Square> path;
    int days() const { return static_cast<int>(path.size()); }
};

struct PlanDiagnostics {
    bool legal = false;
    SquareSet uncovered;
    std::optional<int> first_bad_step;  // index of the first illegal move
    int days = 0;
    bool covering() const { return legal && uncovered.empty(); }
};

// Covered set is the union of closed neighborhoods of the path squares.
PlanDiagnostics validate_plan(const SurveyPlan& plan);

// --- Knight -----------------------------------------------------------

// Days for the shoelace decomposition n = 7k - r, k = ceil(n/7):
// 14k^2 - (2r+1)k - min(r, k-1) - 2.
long long shoelace_formula_days(long long n);

// A single shoelace in a 7-wide strip of height h takes 2h-3 days.
int shoelace_column_days(int h);  // throws when h < 4

// The 2h-3 square shoelace path in a 7-by-h strip with active columns 3/5.
// Always a legal knight path; covers the whole strip when h >= 6.
SurveyPlan shoelace_column_plan(int h);

// Generated multi-shoelace plan, n >= 6; days equal shoelace_formula_days(n).
SurveyPlan knight_shoelace_plan(int n);

// Best-known plan: literal plans for n in {1,4,5,6,9,11}, generated shoelaces
// otherwise; absent for n in {2,3} where no full survey exists.
std::optional<SurveyPlan> knight_plan(int n);
bool knight_plan_is_embedded(int n);

// Embedded fastest-time reference values for boards 1..15. The two
// reference tables disagree at sizes 5 and 15; both readings are kept.
struct KnightTimeRef {
    bool feasible = true;
    std::optional<int> summary_table;     // first reference table
    std::optional<int> conclusion_table;  // second reference table
};
KnightTimeRef knight_fastest_time_ref(int n);

// --- Rook / Bishop / Queen --------------------------------------------

// (1,1),(2,1),...,(n,1); n days.
SurveyPlan rook_plan(int n);

// n - 2 days for n >= 4 (diagonal sweep on even boards, hockey stick on odd
// boards); a small-case table handles n <= 3. Covers the start color class.
SurveyPlan bishop_plan(int n, Color start_color);

// Missing-beads queen plan for the 9-by-9 board: 5 days.
SurveyPlan queen_plan9();

// --- King --------------------------------------------------------------

// Straight spiral days: 1 for n <= 2, floor((n^2+2)/3) - 2 otherwise.
long long king_f(long long n);
SurveyPlan king_straight_plan(int n);

// Zig-zag spiral: g(n) = 4k^2 + (2r+2)k + r - 2 with n = 4k + r, and
// G(n) = g(n) + s(n mod 8) with G(1) = 1 and G(n) = g(n) for n in 3..6.
struct KingZigzagDays {
    long long g = 0;
    long long G = 0;
};
KingZigzagDays king_zigzag_days(long long n);
int spiral_t(long long n);  // n mod 4 == 3 -> 1
int spiral_s(long long n);  // n mod 8 in {2,3,5,6,7} -> 1

struct ZigzagPlanResult {
    SurveyPlan plan;
    long long expected_days = 0;        // G(n)
    bool days_match_formula = false;    // guaranteed for n <= 15
};
ZigzagPlanResult king_zigzag_plan(int n);

}  // namespace chessland
