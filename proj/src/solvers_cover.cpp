#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "chessland/solvers.hpp"
#include "mask_ops.hpp"

namespace chessland {
namespace detail {

struct BudgetClock;  // defined in solvers_survey.cpp

namespace {

struct CoverOutcome {
    bool feasible = false;
    bool proven = true;
    int size = 0;
    std::vector<int> chosen;
    int lower_bound = 0;
};

// Branch and bound for minimum covers: pick the uncovered target with the
// fewest usable covering candidates and branch on each of them. In
// independent mode a chosen candidate knocks its whole neighborhood out of
// the candidate pool, which is what trapping requires.
template <int W>
class CoverSearch {
public:
    CoverSearch(const MoveGraph& g, const SquareSet& universe, const SquareSet& candidates,
                bool independent, bool closed_coverage, const SearchBudget& budget)
        : g_(g),
          independent_(independent),
          nsq_(g.squares()),
          max_states_(budget.max_states),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds))) {
        universe_ = to_mask<W>(universe);
        candidates_ = to_mask<W>(candidates);
        cover_.resize(nsq_);
        adj_.resize(nsq_);
        for (int i = 0; i < nsq_; ++i) {
            cover_[i] = to_mask<W>(closed_coverage ? g.closed(i) : g.adj[i]) & universe_;
            adj_[i] = to_mask<W>(g.adj[i]);
        }
        cmax_ = 1;
        candidates_.for_each([&](int c) { cmax_ = std::max(cmax_, cover_[c].count()); });
    }

    CoverOutcome solve() {
        CoverOutcome out;
        out.lower_bound = packing_bound(universe_, candidates_);
        best_ = nsq_ + 1;
        seed_greedy();
        std::vector<int> chosen;
        branch(universe_, candidates_, chosen);
        out.proven = !exhausted_;
        out.feasible = !best_chosen_.empty() || universe_.empty();
        out.size = universe_.empty() ? 0 : best_;
        out.chosen = best_chosen_;
        if (!out.feasible) out.size = 0;
        return out;
    }

    long long states() const { return states_; }
    bool exhausted() const { return exhausted_; }

private:
    bool tick() {
        if (exhausted_) return false;
        if (++states_ > max_states_ ||
            ((states_ & 16383) == 0 && std::chrono::steady_clock::now() > deadline_))
            exhausted_ = true;
        return !exhausted_;
    }

    // Greedy incumbent so the branch and bound starts with a tight best_.
    void seed_greedy() {
        Mask<W> unc = universe_, cands = candidates_;
        std::vector<int> chosen;
        while (!unc.empty()) {
            int best = -1, best_gain = 0;
            cands.for_each([&](int c) {
                int gain = (cover_[c] & unc).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            });
            if (best < 0) return;  // greedy stuck; the exact search decides
            chosen.push_back(best);
            unc.subtract(cover_[best]);
            if (independent_) cands.subtract(adj_[best]);
            cands.subtract(single(best));
        }
        best_ = static_cast<int>(chosen.size());
        best_chosen_ = chosen;
    }

    // Admissible: greedily picks targets whose candidate covers are pairwise
    // disjoint, so any cover needs one set per pick.
    int packing_bound(Mask<W> uncovered, const Mask<W>& cands) {
        int lb = 0;
        while (!uncovered.empty()) {
            int u = uncovered.first();
            ++lb;
            Mask<W> blocked;
            blocked.set(u);
            cands.for_each([&](int c) {
                if (cover_[c].test(u)) blocked |= cover_[c];
            });
            uncovered.subtract(blocked);
        }
        return lb;
    }

    void branch(const Mask<W>& uncovered, const Mask<W>& cands, std::vector<int>& chosen) {
        if (uncovered.empty()) {
            if (static_cast<int>(chosen.size()) < best_) {
                best_ = static_cast<int>(chosen.size());
                best_chosen_ = chosen;
            }
            return;
        }
        if (!tick()) return;
        int used = static_cast<int>(chosen.size());
        if (used + 1 >= best_) return;
        if (used + packing_bound(uncovered, cands) >= best_) return;

        StateKey key;
        if constexpr (W == 1) key = {uncovered.w[0], cands.w[0]};
        else key = {uncovered.hash(), cands.hash()};
        auto it = memo_.find(key);
        if (it != memo_.end() && it->second >= best_ - used) return;

        // Fail-first: the uncovered target with the fewest remaining coverers.
        int target = -1, fewest = nsq_ + 1;
        uncovered.for_each([&](int u) {
            int c = 0;
            cands.for_each([&](int s) { c += cover_[s].test(u); });
            if (c < fewest) {
                fewest = c;
                target = u;
            }
        });
        if (fewest == 0) {
            record_bound(key, best_ - used);
            return;
        }
        std::vector<int> options;
        cands.for_each([&](int s) {
            if (cover_[s].test(target)) options.push_back(s);
        });
        std::sort(options.begin(), options.end(), [&](int a, int b) {
            int ga = (cover_[a] & uncovered).count(), gb = (cover_[b] & uncovered).count();
            return ga != gb ? ga > gb : a < b;
        });
        int entry_best = best_;
        for (int s : options) {
            Mask<W> next_unc = uncovered.andnot(cover_[s]);
            Mask<W> next_cands = cands;
            if (independent_) next_cands.subtract(adj_[s]);
            next_cands.subtract(single(s));
            chosen.push_back(s);
            branch(next_unc, next_cands, chosen);
            chosen.pop_back();
            if (exhausted_) return;
        }
        if (best_ == entry_best) record_bound(key, best_ - used);
    }

    void record_bound(const StateKey& key, int budget_tried) {
        // No solution better than best_ exists from this signature with the
        // given remaining budget.
        auto [it, fresh] = memo_.try_emplace(key, budget_tried);
        if (!fresh) it->second = std::max(it->second, budget_tried);
    }

    static Mask<W> single(int i) {
        Mask<W> m;
        m.set(i);
        return m;
    }

    const MoveGraph& g_;
    bool independent_;
    int nsq_;
    int cmax_ = 1;
    long long max_states_;
    std::chrono::steady_clock::time_point deadline_;
    long long states_ = 0;
    bool exhausted_ = false;
    int best_ = 0;
    std::vector<int> best_chosen_;
    Mask<W> universe_, candidates_;
    std::vector<Mask<W>> cover_, adj_;
    std::unordered_map<StateKey, int, StateKeyHash> memo_;
};

template <int W>
DominationResult run_domination(const MoveGraph& g, const SquareSet& universe,
                                const SearchBudget& budget) {
    SquareSet candidates;
    // Only squares whose closed neighborhood meets the universe are useful.
    for (int i = 0; i < g.squares(); ++i)
        if (g.closed(i).intersects(universe)) candidates.set(i);
    CoverSearch<W> search(g, universe, candidates, /*independent=*/false,
                          /*closed_coverage=*/true, budget);
    CoverOutcome out = search.solve();
    DominationResult res;
    res.lower_bound = out.lower_bound;
    if (!out.proven) {
        res.status = SearchStatus::BudgetExhausted;
        res.gamma = out.feasible ? out.size : 0;
        res.upper_bound = out.feasible ? out.size : g.squares();
        for (int s : out.chosen) res.witness.set(s);
        return res;
    }
    if (!out.feasible) {
        res.status = SearchStatus::Infeasible;
        return res;
    }
    res.status = SearchStatus::Proven;
    res.gamma = out.size;
    res.lower_bound = res.upper_bound = out.size;
    for (int s : out.chosen) res.witness.set(s);
    SquareSet covered;
    res.witness.for_each([&](int s) { covered |= g.closed(s); });
    SquareSet miss = universe;
    miss.subtract(covered);
    if (!miss.empty()) throw std::logic_error("domination witness failed replay");
    return res;
}

template <int W>
TrapVerdict run_trap(const MoveGraph& g, int enemy, const SearchBudget& budget) {
    TrapVerdict verdict;
    if (g.adj[enemy].empty()) {
        verdict.kind = TrapVerdict::Kind::AutoTrapped;
        return verdict;
    }
    SquareSet universe = g.adj[enemy];
    SquareSet candidates = g.all;
    candidates.subtract(g.adj[enemy]);
    candidates.reset(enemy);
    CoverSearch<W> search(g, universe, candidates, /*independent=*/true,
                          /*closed_coverage=*/false, budget);
    CoverOutcome out = search.solve();
    if (!out.proven) throw BudgetExhaustedError("trap search exceeded budget");
    if (!out.feasible) {
        verdict.kind = TrapVerdict::Kind::Untrappable;
        return verdict;
    }
    verdict.kind = TrapVerdict::Kind::Trapped;
    verdict.count = out.size;
    for (int s : out.chosen) verdict.witness.set(s);
    if (!replay_trap_witness(g, enemy, verdict.witness))
        throw std::logic_error("trap witness failed replay");
    return verdict;
}

}  // namespace

DominationResult solve_domination(const MoveGraph& g, const SquareSet& universe,
                                  const SearchBudget& budget) {
    return dispatch_mask_width(g.squares(), [&]<int W>() {
        return run_domination<W>(g, universe, budget);
    });
}

}  // namespace detail

bool replay_trap_witness(const MoveGraph& g, int enemy_idx, const SquareSet& witness) {
    int n = g.n;
    std::vector<Square> pieces = witness.squares(n);
    SquareSet enemy_reach = attack_set(n, g.piece, square_at(n, enemy_idx));
    SquareSet targets_left = enemy_reach;
    for (size_t i = 0; i < pieces.size(); ++i) {
        int wi = square_index(n, pieces[i]);
        if (wi == enemy_idx) return false;
        SquareSet atk = attack_set(n, g.piece, pieces[i]);
        if (atk.test(enemy_idx) || enemy_reach.test(wi)) return false;
        for (size_t j = i + 1; j < pieces.size(); ++j)
            if (atk.test(square_index(n, pieces[j]))) return false;
        targets_left.subtract(atk);
    }
    return targets_left.empty();
}

DominationResult exact_domination(int n, Piece piece, const SearchBudget& budget,
                                  std::optional<Color> bishop_color) {
    MoveGraph g = build_move_graph(n, piece);
    SquareSet universe = g.all;
    if (piece == Piece::Bishop && bishop_color) universe = color_mask(n, *bishop_color);
    return detail::solve_domination(g, universe, budget);
}

TrapVerdict trap_verdict(int n, Piece piece, Square enemy, const SearchBudget& budget) {
    if (!on_board(n, enemy)) throw std::invalid_argument("enemy square off board");
    MoveGraph g = build_move_graph(n, piece);
    return detail::dispatch_mask_width(n * n, [&]<int W>() {
        return detail::run_trap<W>(g, square_index(n, enemy), budget);
    });
}

namespace {

TrapVerdict transform_verdict(int n, const TrapVerdict& v, int sym) {
    TrapVerdict out;
    out.kind = v.kind;
    out.count = v.count;
    v.witness.for_each([&](int idx) {
        out.witness.set(square_index(n, apply_symmetry(n, sym, square_at(n, idx))));
    });
    return out;
}

}  // namespace

AnswerSheet answer_sheet(int n, Piece piece, const SearchBudget& budget, int jobs) {
    MoveGraph g = build_move_graph(n, piece);
    AnswerSheet sheet;
    sheet.n = n;
    sheet.piece = piece;
    sheet.cells.resize(n * n);

    std::vector<int> reps;
    for (int idx = 0; idx < n * n; ++idx) {
        Square rep = dihedral_orbit(n, square_at(n, idx)).front();
        if (square_index(n, rep) == idx) reps.push_back(idx);
    }
    std::vector<TrapVerdict> rep_verdicts(reps.size());
    auto worker = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            rep_verdicts[i] = trap_verdict(n, piece, square_at(n, reps[i]), budget);
    };
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(reps.size())));
    if (jobs == 1) {
        worker(0, reps.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (reps.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t lo = t * chunk, hi = std::min(reps.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < reps.size(); ++i) {
        Square rep = square_at(n, reps[i]);
        for (int sym = 0; sym < 8; ++sym) {
            Square img = apply_symmetry(n, sym, rep);
            sheet.cells[square_index(n, img)] = transform_verdict(n, rep_verdicts[i], sym);
        }
    }
    return sheet;
}

}  // namespace chessland
