#include "chessland/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace chessland {

namespace {

// Depth-first search over candidates in increasing order. `chosen` stays
// AP-free; adding x is legal iff no pair (a,b) in chosen has b - a == x - b.
void ap_free_dfs(int n, int next, std::vector<int>& chosen, ApFreeResult& best) {
    if (static_cast<int>(chosen.size()) > best.size) {
        best.size = static_cast<int>(chosen.size());
        best.witness = chosen;
    }
    if (static_cast<int>(chosen.size()) + (n - next + 1) <= best.size) return;
    for (int x = next; x <= n; ++x) {
        bool ok = true;
        for (size_t i = 0; ok && i < chosen.size(); ++i)
            for (size_t j = i + 1; ok && j < chosen.size(); ++j)
                if (chosen[i] + x == 2 * chosen[j]) ok = false;
        if (!ok) continue;
        chosen.push_back(x);
        ap_free_dfs(n, x + 1, chosen, best);
        chosen.pop_back();
    }
}

}  // namespace

ApFreeResult max_no_3term_ap(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("max_no_3term_ap: n in 1..30");
    ApFreeResult best;
    std::vector<int> chosen;
    ap_free_dfs(n, 1, chosen, best);
    return best;
}

int midpoint_free_even_sum_max(int n) {
    if (n < 1 || n > 60) throw std::invalid_argument("midpoint_free_even_sum_max: n in 1..60");
    return max_no_3term_ap((n + 1) / 2).size;
}

int midpoint_free_even_sum_bruteforce(int n) {
    if (n < 1 || n > 24) throw std::invalid_argument("bruteforce limit");
    // All-even or all-odd subsets; midpoint-free means no a+b == 2c within.
    int best = 0;
    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<int> values;
        for (int v = 1; v <= n; ++v)
            if (v % 2 == parity) values.push_back(v);
        int m = static_cast<int>(values.size());
        for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
            std::vector<int> sel;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) sel.push_back(values[i]);
            bool ok = true;
            for (size_t i = 0; ok && i < sel.size(); ++i)
                for (size_t j = i; ok && j < sel.size(); ++j)
                    for (size_t c = 0; ok && c < sel.size(); ++c)
                        if (i != c && j != c && sel[i] + sel[j] == 2 * sel[c]) ok = false;
            if (ok) best = std::max(best, static_cast<int>(sel.size()));
        }
    }
    return best;
}

long long diagonal_domination(long long n, bool raw_formula) {
    if (n < 1) throw std::invalid_argument("board size");
    long long raw = n - midpoint_free_even_sum_max(static_cast<int>(n));
    if (n == 1) return raw_formula ? raw : 1;
    return raw;
}

bool diagonal_placement_dominates(int n, const std::vector<int>& k) {
    // A queen at (q,q) covers row q, column q, the main diagonal f == r and
    // the antidiagonal f + r == 2q.
    for (int f = 1; f <= n; ++f) {
        for (int r = 1; r <= n; ++r) {
            bool hit = false;
            for (size_t i = 0; !hit && i < k.size(); ++i) {
                int q = k[i];
                hit = (f == q || r == q || f == r || f + r == 2 * q);
            }
            if (!hit) return false;
        }
    }
    return true;
}

int diagonal_domination_bruteforce(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("bruteforce limit");
    int best = n + 1;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        std::vector<int> k;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) k.push_back(i + 1);
        if (diagonal_placement_dominates(n, k)) best = size;
    }
    return best;
}

namespace {

std::vector<SequenceTable> make_tables() {
    using P = SequenceTable::Provenance;
    std::vector<SequenceTable> t;
    // Knight domination numbers for boards 1..15.
    t.push_back({"A006075", 1, {1, 4, 4, 4, 5, 8, 10, 12, 14, 16, 21, 24, 28, 32, 36}, P::Paper});
    // King domination ceil(n/3)^2, boards 1..15.
    {
        SequenceTable s{"A075561", 1, {}, P::Paper};
        for (long long n = 1; n <= 15; ++n) {
            long long c = (n + 2) / 3;
            s.values.push_back(c * c);
        }
        t.push_back(std::move(s));
    }
    // King straight-spiral days from board size 3 on.
    {
        SequenceTable s{"A071408", 3, {}, P::Paper};
        for (long long n = 3; n <= 20; ++n) s.values.push_back((n * n + 2) / 3 - 2);
        t.push_back(std::move(s));
    }
    // Largest AP-free subset sizes, derived by the exhaustive search.
    {
        SequenceTable s{"A003002", 1, {}, P::Derived};
        for (int n = 1; n <= 30; ++n) s.values.push_back(max_no_3term_ap(n).size);
        t.push_back(std::move(s));
    }
    // Diagonal domination numbers as printed (no d_1 override).
    t.push_back({"A358062", 1, {0, 1, 1, 2, 3, 4, 4, 5, 5, 6}, P::Paper});
    // Queen domination numbers for the two cross-checked boards.
    t.push_back({"A075458", 9, {5, 5}, P::Paper});
    return t;
}

const std::vector<SequenceTable>& tables() {
    static const std::vector<SequenceTable> t = make_tables();
    return t;
}

}  // namespace

const SequenceTable& reference_table(const std::string& id) {
    for (const SequenceTable& t : tables())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown sequence id: " + id);
}

std::vector<std::string> reference_table_ids() {
    std::vector<std::string> ids;
    for (const SequenceTable& t : tables()) ids.push_back(t.id);
    return ids;
}

SequenceDiff compare_reference(const std::string& id, const std::vector<long long>& computed,
                               int computed_offset) {
    const SequenceTable& table = reference_table(id);
    SequenceDiff diff;
    int lo = std::max(table.offset, computed_offset);
    int hi = std::min(table.offset + static_cast<int>(table.values.size()),
                      computed_offset + static_cast<int>(computed.size()));
    for (int i = lo; i < hi; ++i) {
        ++diff.overlap;
        long long expected = table.values[i - table.offset];
        long long actual = computed[i - computed_offset];
        if (expected != actual && diff.match) {
            diff.match = false;
            diff.first_mismatch_index = i;
            diff.expected = expected;
            diff.actual = actual;
        }
    }
    return diff;
}

}  // namespace chessland
