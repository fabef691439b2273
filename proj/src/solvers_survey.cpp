#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "chessland/solvers.hpp"
#include "mask_ops.hpp"

namespace chessland {

namespace detail {

struct BudgetClock {
    long long max_states;
    std::chrono::steady_clock::time_point deadline;
    long long states = 0;
    bool exhausted = false;

    explicit BudgetClock(const SearchBudget& b)
        : max_states(b.max_states),
          deadline(std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(b.max_seconds))) {}

    bool tick() {
        if (exhausted) return false;
        if (++states > max_states ||
            ((states & 8191) == 0 && std::chrono::steady_clock::now() > deadline))
            exhausted = true;
        return !exhausted;
    }
};

DominationResult solve_domination(const MoveGraph& g, const SquareSet& universe,
                                  const SearchBudget& budget);

namespace {

// Shortest dominating path search: iterative deepening DFS over
// (square, covered mask) with a per-move coverage bound, a move-distance
// reachability bound, and a transposition table per depth iteration.
template <int W>
class SurveySearch {
public:
    SurveySearch(const MoveGraph& g, const SquareSet& universe, BudgetClock& clock)
        : g_(g), clock_(clock), nsq_(g.squares()) {
        universe_ = to_mask<W>(universe);
        closed_.resize(nsq_);
        nbrs_.resize(nsq_);
        for (int i = 0; i < nsq_; ++i) {
            closed_[i] = to_mask<W>(g.closed(i)) & universe_;
            g_.adj[i].for_each([&](int j) { nbrs_[i].push_back(j); });
        }
        // Max coverage gain of a single move, over all directed edges.
        gain_ = 1;
        for (int a = 0; a < nsq_; ++a)
            for (int b : nbrs_[a])
                gain_ = std::max(gain_, closed_[b].andnot(closed_[a]).count());
        build_cover_dist();
    }

    // Squares from which a covering path could start: same component
    // requirement is handled by cover_dist (unreachable = kInf).
    bool feasible_from(int start) const {
        for (int u = 0; u < nsq_; ++u)
            if (universe_.test(u) && cover_dist_[start][u] >= kInf) return false;
        return true;
    }

    std::vector<int> start_squares(bool symmetric) const {
        std::vector<int> starts;
        for (int i = 0; i < nsq_; ++i) {
            if (!feasible_from(i)) continue;
            if (symmetric) {
                Square rep = dihedral_orbit(g_.n, square_at(g_.n, i)).front();
                if (square_index(g_.n, rep) != i) continue;
            }
            starts.push_back(i);
        }
        return starts;
    }

    int coverage_lower_bound() const {
        int u = universe_.count();
        int cmax = 1;
        for (int i = 0; i < nsq_; ++i) cmax = std::max(cmax, closed_[i].count());
        return 1 + (std::max(0, u - cmax) + gain_ - 1) / gain_;
    }

    // Deterministic greedy walk: maximize fresh coverage, break ties by
    // heading for the closest square that still covers something new.
    std::vector<int> greedy_walk(int start, int cap) const {
        std::vector<int> path{start};
        Mask<W> covered = closed_[start];
        int cur = start;
        while (!universe_.is_subset_of(covered) && static_cast<int>(path.size()) < cap) {
            Mask<W> uncovered = universe_.andnot(covered);
            int best = -1, best_gain = -1, best_dist = kInf;
            for (int next : nbrs_[cur]) {
                int gain = closed_[next].andnot(covered).count();
                int dist = kInf;
                if (gain == 0)
                    uncovered.for_each(
                        [&](int u) { dist = std::min(dist, cover_dist_[next][u]); });
                else
                    dist = 0;
                if (gain > best_gain || (gain == best_gain && dist < best_dist)) {
                    best = next;
                    best_gain = gain;
                    best_dist = dist;
                }
            }
            if (best < 0) break;
            path.push_back(best);
            covered |= closed_[best];
            cur = best;
        }
        if (!universe_.is_subset_of(covered)) path.clear();
        return path;
    }

    // Depth-limited search from every start; fills `path` on success.
    bool search_depth(int depth, const std::vector<int>& starts, std::vector<int>& path) {
        depth_ = depth;
        found_day_ = -1;
        memo_.clear();
        path_.assign(depth, -1);
        for (int s : starts) {
            path_[0] = s;
            if (dfs(s, closed_[s], 1)) {
                path.assign(path_.begin(), path_.begin() + found_day_);
                return true;
            }
            if (clock_.exhausted) return false;
        }
        return false;
    }

private:
    static constexpr int kInf = 1 << 20;

    void build_cover_dist() {
        // dist[a][b]: moves to go from a to b; cover_dist[a][u]: moves until
        // some visited square covers u = min over w in N[u]+{u} of dist[a][w].
        std::vector<std::vector<int>> dist(nsq_, std::vector<int>(nsq_, kInf));
        for (int s = 0; s < nsq_; ++s) {
            auto& d = dist[s];
            d[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int a = q.front();
                q.pop();
                for (int b : nbrs_[a])
                    if (d[b] >= kInf) {
                        d[b] = d[a] + 1;
                        q.push(b);
                    }
            }
        }
        cover_dist_.assign(nsq_, std::vector<int>(nsq_, kInf));
        for (int a = 0; a < nsq_; ++a)
            for (int u = 0; u < nsq_; ++u) {
                int best = dist[a][u];
                g_.adj[u].for_each([&](int w) { best = std::min(best, dist[a][w]); });
                cover_dist_[a][u] = best;
            }
    }

    bool dfs(int sq, Mask<W> covered, int day) {
        if (universe_.is_subset_of(covered)) {
            found_day_ = day;
            return true;
        }
        if (day >= depth_) return false;
        if (!clock_.tick()) return false;
        int left = depth_ - day;
        Mask<W> uncovered = universe_.andnot(covered);
        int u = uncovered.count();
        if ((u + gain_ - 1) / gain_ > left) return false;
        int far = 0;
        uncovered.for_each([&](int t) { far = std::max(far, cover_dist_[sq][t]); });
        if (far > left) return false;

        auto [it, fresh] = memo_.try_emplace(make_state_key(covered, sq), day);
        if (!fresh) {
            if (it->second <= day) return false;
            it->second = day;
        }

        struct Choice {
            int next, gain;
        };
        Choice order[kMaxMoves];
        int cnt = 0;
        for (int next : nbrs_[sq]) order[cnt++] = {next, closed_[next].andnot(covered).count()};
        std::sort(order, order + cnt, [](const Choice& a, const Choice& b) {
            return a.gain != b.gain ? a.gain > b.gain : a.next < b.next;
        });
        for (int i = 0; i < cnt; ++i) {
            path_[day] = order[i].next;
            if (dfs(order[i].next, covered | closed_[order[i].next], day + 1)) return true;
            if (clock_.exhausted) return false;
        }
        return false;
    }

    static constexpr int kMaxMoves = 4 * kMaxBoard;  // queen on an open board

    const MoveGraph& g_;
    BudgetClock& clock_;
    int nsq_;
    int gain_ = 1;
    int depth_ = 0;
    int found_day_ = -1;
    Mask<W> universe_;
    std::vector<Mask<W>> closed_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::vector<int>> cover_dist_;
    std::vector<int> path_;
    std::unordered_map<StateKey, int, StateKeyHash> memo_;
};

template <int W>
SurveyResult run_survey(const MoveGraph& g, const SquareSet& universe,
                        const SearchBudget& budget) {
    SurveyResult res;
    BudgetClock clock(budget);
    SurveySearch<W> search(g, universe, clock);

    bool whole_board = universe == g.all;
    std::vector<int> starts = search.start_squares(whole_board);
    if (starts.empty()) {
        res.status = SearchStatus::Infeasible;
        return res;
    }

    // Greedy incumbent; also the fallback answer under budget exhaustion.
    std::vector<int> incumbent;
    for (int i = 0; i < g.squares(); ++i) {
        if (!search.feasible_from(i)) continue;
        auto walk = search.greedy_walk(i, 4 * g.squares());
        if (!walk.empty() && (incumbent.empty() || walk.size() < incumbent.size()))
            incumbent = walk;
    }

    DominationResult dom = solve_domination(g, universe, budget);
    int lb = search.coverage_lower_bound();
    if (dom.status == SearchStatus::Proven) lb = std::max(lb, dom.gamma);
    int max_depth = incumbent.empty() ? g.squares() : static_cast<int>(incumbent.size());
    if (incumbent.empty() && budget.known_upper_bound)
        max_depth = std::min(max_depth, *budget.known_upper_bound);

    std::vector<int> found;
    int found_depth = -1;
    for (int depth = lb; depth <= max_depth; ++depth) {
        if (!incumbent.empty() && depth == static_cast<int>(incumbent.size())) {
            found = incumbent;  // everything below is exhausted
            found_depth = depth;
            break;
        }
        if (search.search_depth(depth, starts, found)) {
            found_depth = depth;
            break;
        }
        if (clock.exhausted) break;
    }

    res.expanded = clock.states;
    if (found_depth < 0) {
        // Feasibility was established by start_squares; either the budget
        // ran out or the iteration cap (known upper bound) cut the search.
        res.status = SearchStatus::BudgetExhausted;
        if (!incumbent.empty()) {
            res.days = static_cast<int>(incumbent.size());
            res.witness.piece = g.piece;
            res.witness.n = g.n;
            for (int idx : incumbent) res.witness.path.push_back(square_at(g.n, idx));
        }
        res.proven_optimal = false;
        return res;
    }
    res.status = clock.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::Proven;
    res.proven_optimal = !clock.exhausted;
    res.days = found_depth;
    res.witness.piece = g.piece;
    res.witness.n = g.n;
    for (int idx : found) res.witness.path.push_back(square_at(g.n, idx));

    PlanDiagnostics check = validate_plan(res.witness);
    SquareSet uncovered_in_universe = check.uncovered & universe;
    if (!check.legal || !uncovered_in_universe.empty())
        throw std::logic_error("surveying witness failed replay");
    return res;
}

}  // namespace
}  // namespace detail

SurveyResult exact_surveying(int n, Piece piece, const SearchBudget& budget,
                             std::optional<Color> bishop_color) {
    MoveGraph g = build_move_graph(n, piece);
    SquareSet universe = g.all;
    if (piece == Piece::Bishop && bishop_color) universe = color_mask(n, *bishop_color);
    return detail::dispatch_mask_width(n * n, [&]<int W>() {
        return detail::run_survey<W>(g, universe, budget);
    });
}

}  // namespace chessland
