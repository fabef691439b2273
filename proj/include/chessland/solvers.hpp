// Exact optimization: shortest dominating paths, domination numbers,
// trapping verdicts and answer sheets, pairwise coverage, n-queens.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chessland/board.hpp"
#include "chessland/plans.hpp"

namespace chessland {

// Raised by solvers whose result type has no budget field (trapping).
struct BudgetExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    long long max_states = 400'000'000;
    double max_seconds = 120.0;
    std::optional<int> known_upper_bound;
};

enum class SearchStatus { Proven, BudgetExhausted, Infeasible };

struct SurveyResult {
    SearchStatus status = SearchStatus::Infeasible;
    int days = 0;
    SurveyPlan witness;
    bool proven_optimal = false;
    long long expanded = 0;
};

// Shortest covering move path. For Bishop pass the color class to solve;
// without one the bishop graph is disconnected and the result is Infeasible
// for n > 1. Witnesses are replayed through validate_plan before returning.
SurveyResult exact_surveying(int n, Piece piece, const SearchBudget& budget = {},
                             std::optional<Color> bishop_color = std::nullopt);

struct DominationResult {
    SearchStatus status = SearchStatus::Proven;
    int gamma = 0;
    SquareSet witness;
    int lower_bound = 0, upper_bound = 0;
};

// Minimum set cover by closed neighborhoods (color class for Bishop when a
// color is given; otherwise the whole board).
DominationResult exact_domination(int n, Piece piece, const SearchBudget& budget = {},
                                  std::optional<Color> bishop_color = std::nullopt);

struct TrapVerdict {
    enum class Kind { AutoTrapped, Untrappable, Trapped } kind = Kind::Untrappable;
    int count = 0;
    SquareSet witness;
};

TrapVerdict trap_verdict(int n, Piece piece, Square enemy, const SearchBudget& budget = {});

struct AnswerSheet {
    int n = 0;
    Piece piece = Piece::King;
    std::vector<TrapVerdict> cells;  // rank-major
    const TrapVerdict& at(Square s) const { return cells[square_index(n, s)]; }
};

// Solves one canonical cell per dihedral orbit and propagates the verdict
// (with transformed witness) to the whole orbit.
AnswerSheet answer_sheet(int n, Piece piece, const SearchBudget& budget = {}, int jobs = 1);

// Closed-form trapping rules. The queen has no closed form; it reports the
// interval [ceil(deg/12), n-1] instead of a verdict.
struct ClosedFormTrap {
    enum class Kind { Verdict, Bounds } kind = Kind::Verdict;
    TrapVerdict verdict;
    int lower = 0, upper = 0;
};
ClosedFormTrap closed_form_trap(int n, Piece piece, Square enemy);

struct PairwiseCover {
    bool has_pair = false;
    int max_common = 0;
};

// Maximum number of squares attacked jointly by two non-attacking pieces.
PairwiseCover pairwise_cover_max(int n, Piece piece);

struct NQueensResult {
    long long count = 0;
    std::vector<SquareSet> witnesses;
};

NQueensResult n_queens(int n, std::optional<Square> forced = std::nullopt,
                       bool keep_witnesses = true);

// Independent re-check of a trapping witness from raw attack sets.
bool replay_trap_witness(const MoveGraph& g, int enemy_idx, const SquareSet& witness);

}  // namespace chessland
