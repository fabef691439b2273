#include "chessland/plans.hpp"

#include <algorithm>
#include <stdexcept>

namespace chessland {

namespace {

void check_board_size(int n) {
    if (n < 1 || n > kMaxBoard) throw std::invalid_argument("board size out of range");
}

}  // namespace

PlanDiagnostics validate_plan(const SurveyPlan& plan) {
    PlanDiagnostics d;
    d.days = plan.days();
    if (plan.path.empty()) return d;
    MoveGraph g = build_move_graph(plan.n, plan.piece);
    for (const Square& s : plan.path)
        if (!on_board(plan.n, s)) throw std::invalid_argument("plan square off board");
    d.legal = true;
    SquareSet covered;
    int prev = square_index(plan.n, plan.path[0]);
    covered |= g.closed(prev);
    for (size_t i = 1; i < plan.path.size(); ++i) {
        int cur = square_index(plan.n, plan.path[i]);
        if (!g.adjacent(prev, cur)) {
            d.legal = false;
            d.first_bad_step = static_cast<int>(i);
            break;
        }
        covered |= g.closed(cur);
        prev = cur;
    }
    d.uncovered = g.all;
    d.uncovered.subtract(covered);
    return d;
}

// --- Knight -----------------------------------------------------------

long long shoelace_formula_days(long long n) {
    long long k = (n + 6) / 7;
    long long r = 7 * k - n;
    return 14 * k * k - (2 * r + 1) * k - std::min(r, k - 1) - 2;
}

int shoelace_column_days(int h) {
    if (h < 4) throw std::invalid_argument("shoelace needs h >= 4");
    return 2 * h - 3;
}

namespace {

// One shoelace with active columns c and c+2, rows 2..h-1, transition at
// (c+1, h-3). Starts at (c,2), ends at (c+2,2).
void append_shoelace(std::vector<Square>& path, int c, int h) {
    for (int t = 2; t <= h - 1; ++t) path.push_back({((t & 1) == 0) ? c : c + 2, t});
    path.push_back({c + 1, h - 3});
    for (int t = h - 1; t >= 2; --t) path.push_back({((t & 1) == 0) ? c + 2 : c, t});
}

// Transition from the end of a shoelace at (c+2,2) to the next start at
// (c+step,2). Steps 6 and 4 cost one day, 7 and 5 cost two.
void append_transition(std::vector<Square>& path, int c, int step) {
    switch (step) {
        case 7:
            path.push_back({c + 3, 4});
            path.push_back({c + 5, 3});
            break;
        case 6: path.push_back({c + 4, 3}); break;
        case 5:
            path.push_back({c + 4, 3});
            path.push_back({c + 6, 4});
            break;
        case 4: path.push_back({c + 3, 4}); break;
        default: throw std::logic_error("bad shoelace step");
    }
}

struct ShoelaceLayout {
    int c1 = 3;
    std::vector<int> steps;
};

// Place k shoelaces on a board of size n = 7k - r. Even steps (6 or 4) save one
// transition day each; exactly min(r, k-1) of them are used so the total
// matches the shoelace formula. The combined horizontal squeeze
// (3 - c1) + sum(7 - step) must land the last strip within [n-4, n-2].
ShoelaceLayout shoelace_layout(int n) {
    if (n < 6) throw std::invalid_argument("shoelace plan needs n >= 6");
    int k = (n + 6) / 7;
    int r = 7 * k - n;
    ShoelaceLayout out;
    if (k == 1) {
        out.c1 = (r == 1) ? 2 : 3;
        return out;
    }
    int m = static_cast<int>(std::min<long long>(r, k - 1));
    int odd = k - 1 - m;  // steps keeping the two-day transition
    int lambda = -1, total = -1;
    for (int t = r; t >= r - 2 && lambda < 0; --t) {
        for (int lam = 0; lam <= 1 && lambda < 0; ++lam) {
            int s = t - lam;
            if (s < m || s > 3 * m + 2 * odd) continue;
            if (((s - m) & 1) != 0) continue;
            lambda = lam;
            total = s;
        }
    }
    if (lambda < 0) throw std::logic_error("no shoelace layout");
    out.c1 = 3 - lambda;
    std::vector<int> red(k - 1, 0);
    for (int i = 0; i < m; ++i) red[k - 2 - i] = 1;  // even steps last
    int extra = total - m;
    for (int i = k - 2; i >= 0 && extra > 0; --i) {
        int cap = (red[i] == 1) ? 3 : 2;
        while (red[i] + 2 <= cap && extra > 0) {
            red[i] += 2;
            extra -= 2;
        }
    }
    if (extra != 0) throw std::logic_error("no shoelace layout");
    for (int i = 0; i < k - 1; ++i) out.steps.push_back(7 - red[i]);
    return out;
}

SurveyPlan literal_plan(Piece piece, int n, std::initializer_list<Square> path) {
    return SurveyPlan{piece, n, std::vector<Square>(path)};
}

// Hand-laid knight routes for the small boards without generated shoelaces.
std::optional<SurveyPlan> knight_embedded_plan(int n) {
    switch (n) {
        case 1: return literal_plan(Piece::Knight, 1, {{1, 1}});
        case 4:
            return literal_plan(Piece::Knight, 4,
                                {{2, 2}, {4, 3}, {2, 4}, {3, 2}, {1, 3}, {2, 1}, {4, 2}});
        case 5:
            return literal_plan(Piece::Knight, 5,
                                {{3, 3}, {2, 1}, {4, 2}, {2, 3}, {4, 4}, {3, 2}, {2, 4}, {4, 3}});
        case 6:
            return literal_plan(Piece::Knight, 6,
                                {{3, 2}, {5, 3}, {3, 4}, {5, 5}, {4, 3}, {3, 5}, {5, 4}, {3, 3}});
        case 9:
            return literal_plan(
                Piece::Knight, 9,
                {{4, 2}, {2, 3}, {4, 4}, {2, 5}, {4, 6}, {2, 7}, {4, 8}, {6, 7}, {8, 6},
                 {6, 5}, {8, 4}, {6, 3}, {5, 1}, {4, 3}, {2, 4}, {4, 5}, {2, 6}, {4, 7},
                 {6, 8}, {8, 7}, {6, 6}, {8, 5}, {6, 4}, {8, 3}, {6, 2}});
        case 11:
            return literal_plan(
                Piece::Knight, 11,
                {{4, 2},  {2, 3}, {4, 4},  {2, 5}, {4, 6},  {2, 7}, {4, 8},  {2, 9},
                 {4, 10}, {6, 9}, {8, 10}, {10, 9}, {8, 8}, {10, 7}, {8, 6}, {10, 5},
                 {8, 4},  {10, 3}, {8, 2}, {7, 4}, {6, 2},  {4, 3}, {2, 4},  {4, 5},
                 {2, 6},  {4, 7}, {2, 8},  {4, 9}, {6, 10}, {8, 9}, {10, 8}, {8, 7},
                 {10, 6}, {8, 5}, {10, 4}, {8, 3}});
        default: return std::nullopt;
    }
}

}  // namespace

SurveyPlan shoelace_column_plan(int h) {
    if (h < 4) throw std::invalid_argument("shoelace needs h >= 4");
    SurveyPlan plan{Piece::Knight, std::max(7, h), {}};
    append_shoelace(plan.path, 3, h);
    return plan;
}

SurveyPlan knight_shoelace_plan(int n) {
    check_board_size(n);
    ShoelaceLayout layout = shoelace_layout(n);
    SurveyPlan plan{Piece::Knight, n, {}};
    int c = layout.c1;
    append_shoelace(plan.path, c, n);
    for (int step : layout.steps) {
        append_transition(plan.path, c, step);
        c += step;
        append_shoelace(plan.path, c, n);
    }
    return plan;
}

bool knight_plan_is_embedded(int n) { return knight_embedded_plan(n).has_value(); }

std::optional<SurveyPlan> knight_plan(int n) {
    check_board_size(n);
    if (n == 2 || n == 3) return std::nullopt;
    if (auto p = knight_embedded_plan(n)) return p;
    return knight_shoelace_plan(n);
}

KnightTimeRef knight_fastest_time_ref(int n) {
    static constexpr int kSummary[16] = {0, 1, -1, -1, 7, 8, 8, 11, 20, 25, 33, 36, 43, 47, 52, 70};
    static constexpr int kConclusion[16] = {0, 1, -1, -1, 7, 7, 8, 11, 20, 25, 33, 36, 43, 47, 52, 68};
    KnightTimeRef ref;
    if (n < 1 || n > 15) return ref;
    if (kSummary[n] < 0) {
        ref.feasible = false;
        return ref;
    }
    ref.summary_table = kSummary[n];
    ref.conclusion_table = kConclusion[n];
    return ref;
}

// --- Rook / Bishop / Queen --------------------------------------------

SurveyPlan rook_plan(int n) {
    check_board_size(n);
    SurveyPlan plan{Piece::Rook, n, {}};
    for (int f = 1; f <= n; ++f) plan.path.push_back({f, 1});
    return plan;
}

SurveyPlan bishop_plan(int n, Color start_color) {
    check_board_size(n);
    SurveyPlan plan{Piece::Bishop, n, {}};
    if (n == 1) {
        plan.path = {{1, 1}};
        return plan;
    }
    if (n == 2) {
        plan.path = {start_color == Color::Black ? Square{1, 1} : Square{1, 2}};
        return plan;
    }
    if (n == 3) {
        if (start_color == square_color({2, 2})) plan.path = {{2, 2}};
        else plan.path = {{2, 1}, {1, 2}};
        return plan;
    }
    bool even = (n % 2) == 0;
    if (even) {
        if (start_color == square_color({2, 2}))
            for (int i = 2; i <= n - 1; ++i) plan.path.push_back({i, i});
        else
            for (int i = 2; i <= n - 1; ++i) plan.path.push_back({i, n + 1 - i});
        return plan;
    }
    // Odd boards: both long diagonals share the color of (1,1); the other
    // color needs the hockey stick starting at (3,2).
    if (start_color == square_color({2, 2})) {
        for (int i = 2; i <= n - 1; ++i) plan.path.push_back({i, i});
    } else {
        plan.path.push_back({3, 2});
        for (int i = 2; i <= n - 2; ++i) plan.path.push_back({i, i + 1});
    }
    return plan;
}

SurveyPlan queen_plan9() {
    return SurveyPlan{Piece::Queen, 9, {{2, 2}, {4, 4}, {5, 5}, {6, 6}, {8, 8}}};
}

// --- King --------------------------------------------------------------

long long king_f(long long n) {
    if (n < 1) throw std::invalid_argument("board size");
    if (n <= 2) return 1;
    return (n * n + 2) / 3 - 2;
}

namespace {

// Emits squares until the whole board is covered; used by both spirals.
struct PathBuilder {
    MoveGraph graph;
    SurveyPlan plan;
    SquareSet covered;

    explicit PathBuilder(int n, Piece piece) : graph(build_move_graph(n, piece)) {
        plan.piece = piece;
        plan.n = n;
    }
    bool done() const { return graph.all.is_subset_of(covered); }
    // Returns true when the board became fully covered.
    bool emit(int f, int r) {
        plan.path.push_back({f, r});
        covered |= graph.closed(square_index(graph.n, {f, r}));
        return done();
    }
};

// The 23-day zig-zag route for the 9-board: zig-zag bottom and east
// sides, a rank-8/9 zig across the top, then a diagonal return that picks up
// the center on the way to the west column.
const Square kZigzag9[] = {{2, 2}, {3, 3}, {4, 2}, {5, 3}, {6, 2}, {7, 3}, {8, 2}, {8, 3},
                           {7, 4}, {8, 5}, {7, 6}, {8, 7}, {8, 8}, {7, 9}, {6, 8}, {5, 9},
                           {4, 8}, {3, 9}, {2, 8}, {3, 7}, {4, 6}, {3, 5}, {2, 5}};

}  // namespace

SurveyPlan king_straight_plan(int n) {
    check_board_size(n);
    if (n == 1) return SurveyPlan{Piece::King, 1, {{1, 1}}};
    if (n <= 3) return SurveyPlan{Piece::King, n, {{2, 2}}};
    PathBuilder b(n, Piece::King);
    b.emit(2, 2);
    int lo = 2, hi = n - 1;
    int file = 2;
    while (!b.done()) {
        for (int f = file + 1; f <= hi; ++f)
            if (b.emit(f, lo)) return b.plan;
        for (int t = lo + 1; t <= hi; ++t)
            if (b.emit(hi, t)) return b.plan;
        for (int f = hi - 1; f >= lo; --f)
            if (b.emit(f, hi)) return b.plan;
        for (int t = hi - 1; t >= lo + 3; --t)
            if (b.emit(lo, t)) return b.plan;
        file = lo;
        lo += 3;
        hi -= 3;
        if (lo > n || hi < 1) break;
    }
    return b.plan;
}

int spiral_t(long long n) { return (n % 4 == 3) ? 1 : 0; }

int spiral_s(long long n) {
    long long r = n % 8;
    return (r == 2 || r == 3 || r == 5 || r == 6 || r == 7) ? 1 : 0;
}

KingZigzagDays king_zigzag_days(long long n) {
    if (n < 1) throw std::invalid_argument("board size");
    long long k = n / 4, r = n % 4;
    KingZigzagDays d;
    d.g = 4 * k * k + (2 * r + 2) * k + r - 2;
    if (n == 1) d.G = 1;
    else if (n >= 3 && n <= 6) d.G = d.g;
    else d.G = d.g + spiral_s(n);
    return d;
}

ZigzagPlanResult king_zigzag_plan(int n) {
    check_board_size(n);
    ZigzagPlanResult out;
    out.expected_days = king_zigzag_days(n).G;
    SurveyPlan& plan = out.plan;
    plan.piece = Piece::King;
    plan.n = n;
    switch (n) {
        case 1: plan.path = {{1, 1}}; break;
        case 2:
        case 3: plan.path = {{2, 2}}; break;
        case 4: plan.path = {{2, 2}, {3, 2}, {3, 3}, {2, 3}}; break;
        case 5: plan = king_straight_plan(5); break;
        case 6:
            plan.path = {{2, 2}, {3, 3}, {4, 2}, {5, 2}, {4, 3}, {5, 4}, {5, 5}, {4, 4}, {3, 5}, {2, 5}};
            break;
        case 9: plan.path.assign(std::begin(kZigzag9), std::end(kZigzag9)); break;
        default: {
            // Concentric zig-zag rings four apart; each ring walks the four
            // sides on its two zig lines and stops as soon as the board is
            // fully covered.
            PathBuilder b(n, Piece::King);
            if (b.emit(2, 2)) break;
            bool complete = false;
            for (int j = 0; !complete; ++j) {
                int a = 2 + 4 * j, b2 = n - 1 - 4 * j;
                if (j > 0 && (complete = b.emit(a - 3, a - 1))) break;
                int depth = b2 - a;
                if (depth >= 3) {
                    int f0 = (j == 0) ? a + 1 : a - 2;
                    for (int f = f0; f <= b2 - 1 && !complete; ++f)
                        complete = b.emit(f, a + ((f - a) & 1));
                    if (complete || (complete = b.emit(b2, a))) break;
                    for (int t = a + 1; t <= b2 - 1 && !complete; ++t)
                        complete = b.emit((((b2 - 1 - t) & 1) == 0) ? b2 : b2 - 1, t);
                    if (complete || (complete = b.emit(b2, b2))) break;
                    for (int f = b2 - 1; f >= a + 1 && !complete; --f)
                        complete = b.emit(f, (((b2 - 1 - f) & 1) == 0) ? b2 - 1 : b2);
                    if (complete || (complete = b.emit(a, b2))) break;
                    for (int t = b2 - 1; t >= a + 3 && !complete; --t)
                        complete = b.emit((((t - a - 3) & 1) == 0) ? a : a + 1, t);
                    continue;
                }
                if (depth == 2) {
                    for (int f = a - 2; f <= b2 - 1 && !complete; ++f)
                        complete = b.emit(f, a + ((f - a) & 1));
                    complete = complete || b.emit(b2, a) || b.emit(b2, a + 1) ||
                               b.emit(b2, b2) || b.emit(b2 - 1, b2) || b.emit(a, b2);
                } else if (depth == 1) {
                    for (int f = a - 2; f <= b2 && !complete; ++f)
                        complete = b.emit(f, a + ((f - a) & 1));
                    complete = complete || b.emit(b2, a);
                } else if (depth == 0) {
                    complete = b.emit(a - 2, a - 1) || b.emit(a - 1, a) || b.emit(a, a);
                } else if (depth == -1) {
                    complete = b.emit(a - 2, a - 1) || b.emit(a - 1, a - 1);
                }
                break;
            }
            plan = b.plan;
            break;
        }
    }
    out.days_match_formula = (plan.days() == out.expected_days);
    return out;
}

}  // namespace chessland
