// Acceptance suite: runs every verification criterion and prints one
// pass/fail line each. Exits nonzero unless everything passed.
#include <cstdio>
#include <cstdlib>

#include "chessland/verify.hpp"

int main() {
    chessland::SearchBudget budget;
    budget.max_seconds = 240.0;
    if (const char* env = std::getenv("CHESSLAND_BUDGET_SECONDS")) {
        double s = std::atof(env);
        if (s > 0) budget.max_seconds = s;
    }
    auto results = chessland::run_acceptance(budget, 4);
    std::fputs(chessland::format_acceptance_report(results).c_str(), stdout);
    int not_passed = 0;
    for (const auto& r : results)
        if (r.status != chessland::CriterionResult::Status::Pass) ++not_passed;
    if (not_passed) std::printf("%d criterion(s) did not pass\n", not_passed);
    else std::printf("all %zu criteria passed\n", results.size());
    return not_passed;
}
