// The full verification sweep: every reproduction target with its pinned
// expected values, one result line per criterion.
#pragma once

#include <string>
#include <vector>

#include "chessland/solvers.hpp"

namespace chessland {

struct CriterionResult {
    int id = 0;
    std::string name;
    enum class Status { Pass, Fail, Skipped } status = Status::Fail;
    std::string detail;  // first failure, or notes worth surfacing
    double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const SearchBudget& budget, int jobs);

// Timings are optional so that two consecutive sweeps print byte-identical
// reports.
std::string format_acceptance_report(const std::vector<CriterionResult>& results,
                                     bool include_timing = true);

}  // namespace chessland
