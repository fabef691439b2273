// AP-free subsets, midpoint-free even-sum sets, the diagonal domination
// number, and embedded reference sequence tables.
#pragma once

#include <string>
#include <vector>

namespace chessland {

struct ApFreeResult {
    int size = 0;
    std::vector<int> witness;
};

// Largest subset of 1..n without a 3-term arithmetic progression.
// Exhaustive search, n <= 30.
ApFreeResult max_no_3term_ap(int n);

// E_n: the largest midpoint-free even-sum subset of 1..n, via the reduction
// E_n = A003002(floor((n+1)/2)). n <= 60.
int midpoint_free_even_sum_max(int n);

// Direct subset search over 1..n (all-even or all-odd, midpoint-free);
// oracle for the reduction, practical for n <= 24.
int midpoint_free_even_sum_bruteforce(int n);

// d_n = n - E_n for n > 1; d_1 = 1 unless raw_formula, which returns the
// unoverridden value 0 printed in the source list.
long long diagonal_domination(long long n, bool raw_formula = false);

// Minimum number of queens on the main diagonal whose closed attack
// neighborhoods cover the whole board; exhaustive, n <= 14.
int diagonal_domination_bruteforce(int n);

// Does the diagonal placement K (values in 1..n, one per (i,i)) dominate?
bool diagonal_placement_dominates(int n, const std::vector<int>& k);

struct SequenceTable {
    std::string id;
    int offset = 1;  // index of values.front()
    std::vector<long long> values;
    enum class Provenance { Paper, Derived } provenance = Provenance::Paper;
};

// Embedded tables: A006075, A075561, A071408, A003002, A358062, A075458.
// Throws std::invalid_argument for unknown ids.
const SequenceTable& reference_table(const std::string& id);
std::vector<std::string> reference_table_ids();

struct SequenceDiff {
    bool match = true;
    int first_mismatch_index = -1;  // sequence index, not vector position
    long long expected = 0, actual = 0;
    int overlap = 0;
};

// Element-wise comparison of `computed` (starting at computed_offset)
// against the embedded table, over the overlapping index range.
SequenceDiff compare_reference(const std::string& id, const std::vector<long long>& computed,
                               int computed_offset);

}  // namespace chessland
