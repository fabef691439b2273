#include "chessland/chessland.h"

#include <cstring>
#include <string>
#include <thread>

#include "chessland/report.hpp"
#include "chessland/sequences.hpp"
#include "chessland/verify.hpp"

namespace {

using namespace chessland;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

chessland_status set_error(chessland_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <typename Fn>
chessland_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const BudgetExhaustedError& e) {
        return set_error(CHESSLAND_BUDGET_EXHAUSTED, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(CHESSLAND_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return set_error(CHESSLAND_INVALID_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return set_error(CHESSLAND_VERIFY_FAILED, e.what());
    } catch (const std::exception& e) {
        return set_error(CHESSLAND_INTERNAL_ERROR, e.what());
    }
}

Piece need_piece(const char* name) {
    Piece p;
    if (!name || !piece_from_name(name, p)) throw std::invalid_argument("unknown piece");
    return p;
}

std::optional<Color> parse_color(const char* color) {
    if (!color || !*color) return std::nullopt;
    std::string c = color;
    if (c == "black") return Color::Black;
    if (c == "white") return Color::White;
    throw std::invalid_argument("unknown color: " + c);
}

RenderSpec::Format parse_format(const char* format) {
    std::string f = format ? format : "ascii";
    if (f.empty() || f == "ascii") return RenderSpec::Format::Ascii;
    if (f == "json") return RenderSpec::Format::Json;
    if (f == "csv") return RenderSpec::Format::Csv;
    if (f == "svg") return RenderSpec::Format::Svg;
    throw std::invalid_argument("unknown format: " + f);
}

SearchBudget to_budget(const chessland_budget* b);

Json square_list(const SquareSet& set, int n) {
    Json arr = Json::array();
    for (const Square& s : set.squares(n)) arr.push_back(Json::array({s.file, s.rank}));
    return arr;
}

// jobs < 1 means "one worker per logical core".
int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

const char* status_name(SearchStatus st) {
    switch (st) {
        case SearchStatus::Proven: return "proven";
        case SearchStatus::BudgetExhausted: return "budget_exhausted";
        case SearchStatus::Infeasible: return "infeasible";
    }
    return "?";
}

}  // namespace

struct chessland_budget {
    chessland::SearchBudget value;
};

namespace {
SearchBudget to_budget(const chessland_budget* b) {
    return b ? b->value : SearchBudget{};
}
}  // namespace

extern "C" {

chessland_budget* chessland_budget_new(void) { return new chessland_budget{}; }

void chessland_budget_free(chessland_budget* budget) { delete budget; }

void chessland_budget_set_seconds(chessland_budget* budget, double seconds) {
    if (budget && seconds > 0) budget->value.max_seconds = seconds;
}

void chessland_budget_set_max_states(chessland_budget* budget, long long states) {
    if (budget && states > 0) budget->value.max_states = states;
}

void chessland_string_free(char* s) { std::free(s); }

const char* chessland_last_error(void) { return g_last_error.c_str(); }

chessland_status chessland_survey_formula(const char* piece, int n, const char* variant,
                                          long long* days_out) {
    return guarded([&]() -> chessland_status {
        if (!days_out) throw std::invalid_argument("null output");
        Piece p = need_piece(piece);
        std::string v = variant ? variant : "";
        switch (p) {
            case Piece::Knight: *days_out = shoelace_formula_days(n); break;
            case Piece::King:
                *days_out = (v == "straight") ? king_f(n) : king_zigzag_days(n).G;
                break;
            case Piece::Rook:
                if (n < 1) throw std::invalid_argument("board size");
                *days_out = n;
                break;
            case Piece::Bishop:
                if (n < 4) throw std::invalid_argument("bishop formula needs n >= 4");
                *days_out = n - 2;
                break;
            case Piece::Queen: throw std::invalid_argument("no closed form for the queen");
        }
        return CHESSLAND_OK;
    });
}

chessland_status chessland_survey_plan(const char* piece, int n, const char* color,
                                       const char* format, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        Piece p = need_piece(piece);
        SurveyPlan plan;
        switch (p) {
            case Piece::Knight: {
                auto kp = knight_plan(n);
                if (!kp) {
                    Json j;
                    j["status"] = "infeasible";
                    j["piece"] = "knight";
                    j["n"] = n;
                    *doc_out = dup_string(j.dump());
                    return CHESSLAND_OK;
                }
                plan = *kp;
                break;
            }
            case Piece::Rook: plan = rook_plan(n); break;
            case Piece::Bishop:
                plan = bishop_plan(n, parse_color(color).value_or(Color::Black));
                break;
            case Piece::King: plan = king_zigzag_plan(n).plan; break;
            case Piece::Queen:
                if (n != 9) throw std::invalid_argument("queen plan exists for n = 9 only");
                plan = queen_plan9();
                break;
        }
        RenderSpec spec;
        spec.format = parse_format(format);
        *doc_out = dup_string(render_plan(plan, spec));
        return CHESSLAND_OK;
    });
}

chessland_status chessland_survey_exact(const char* piece, int n, const char* color,
                                        const chessland_budget* budget, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        Piece p = need_piece(piece);
        SurveyResult r = exact_surveying(n, p, to_budget(budget), parse_color(color));
        Json j;
        j["status"] = status_name(r.status);
        j["piece"] = piece_name(p);
        j["n"] = n;
        if (r.status != SearchStatus::Infeasible) {
            j["days"] = r.days;
            j["proven_optimal"] = r.proven_optimal;
            j["plan"] = plan_to_json(r.witness);
        }
        j["expanded_states"] = r.expanded;
        *doc_out = dup_string(j.dump());
        return r.status == SearchStatus::BudgetExhausted ? CHESSLAND_BUDGET_EXHAUSTED
                                                         : CHESSLAND_OK;
    });
}

chessland_status chessland_dominate(const char* piece, int n, const char* color,
                                    const chessland_budget* budget, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        Piece p = need_piece(piece);
        Json j;
        j["piece"] = piece_name(p);
        j["n"] = n;
        if (p == Piece::Bishop && !parse_color(color)) {
            DominationResult black = exact_domination(n, p, to_budget(budget), Color::Black);
            DominationResult white = exact_domination(n, p, to_budget(budget), Color::White);
            j["status"] = status_name(black.status == SearchStatus::Proven ? white.status
                                                                           : black.status);
            j["gamma_black"] = black.gamma;
            j["gamma_white"] = white.gamma;
            j["gamma"] = black.gamma + white.gamma;
            j["witness"] = square_list(black.witness | white.witness, n);
            *doc_out = dup_string(j.dump());
            return CHESSLAND_OK;
        }
        DominationResult r = exact_domination(n, p, to_budget(budget), parse_color(color));
        j["status"] = status_name(r.status);
        j["gamma"] = r.gamma;
        if (r.status == SearchStatus::BudgetExhausted) {
            j["lower_bound"] = r.lower_bound;
            j["upper_bound"] = r.upper_bound;
        }
        j["witness"] = square_list(r.witness, n);
        *doc_out = dup_string(j.dump());
        return r.status == SearchStatus::BudgetExhausted ? CHESSLAND_BUDGET_EXHAUSTED
                                                         : CHESSLAND_OK;
    });
}

chessland_status chessland_trap_verdict(const char* piece, int n, int enemy_file, int enemy_rank,
                                        const chessland_budget* budget, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        Piece p = need_piece(piece);
        TrapVerdict v = trap_verdict(n, p, {enemy_file, enemy_rank}, to_budget(budget));
        Json j;
        j["piece"] = piece_name(p);
        j["n"] = n;
        j["enemy"] = Json::array({enemy_file, enemy_rank});
        switch (v.kind) {
            case TrapVerdict::Kind::AutoTrapped: j["verdict"] = "auto_trapped"; break;
            case TrapVerdict::Kind::Untrappable: j["verdict"] = "untrappable"; break;
            case TrapVerdict::Kind::Trapped:
                j["verdict"] = "trapped";
                j["count"] = v.count;
                j["witness"] = square_list(v.witness, n);
                break;
        }
        *doc_out = dup_string(j.dump());
        return CHESSLAND_OK;
    });
}

chessland_status chessland_trap_sheet(const char* piece, int n, const char* format,
                                      int paper_compat, int quarter, int jobs,
                                      const chessland_budget* budget, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        Piece p = need_piece(piece);
        AnswerSheet sheet = answer_sheet(n, p, to_budget(budget), resolve_jobs(jobs));
        RenderSpec spec;
        spec.format = parse_format(format);
        spec.paper_compat = paper_compat != 0;
        spec.quarter = quarter != 0;
        *doc_out = dup_string(render_sheet(sheet, spec));
        return CHESSLAND_OK;
    });
}

chessland_status chessland_render_plan_json(const char* plan_json, const char* format,
                                            char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out || !plan_json) throw std::invalid_argument("null input");
        Json j = Json::parse(plan_json, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw std::invalid_argument("malformed plan JSON");
        SurveyPlan plan = plan_from_json(j);
        RenderSpec spec;
        spec.format = parse_format(format);
        *doc_out = dup_string(render_plan(plan, spec));
        return CHESSLAND_OK;
    });
}

chessland_status chessland_render_sheet_json(const char* sheet_json, const char* format,
                                             int paper_compat, int quarter, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out || !sheet_json) throw std::invalid_argument("null input");
        Json j = Json::parse(sheet_json, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw std::invalid_argument("malformed sheet JSON");
        AnswerSheet sheet = sheet_from_json(j);
        RenderSpec spec;
        spec.format = parse_format(format);
        spec.paper_compat = paper_compat != 0;
        spec.quarter = quarter != 0;
        *doc_out = dup_string(render_sheet(sheet, spec));
        return CHESSLAND_OK;
    });
}

chessland_status chessland_seq(const char* which, int n, int raw, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        std::string w = which ? which : "";
        Json values = Json::array();
        if (w == "a003002") {
            for (int i = 1; i <= n; ++i) values.push_back(max_no_3term_ap(i).size);
        } else if (w == "ensum") {
            for (int i = 1; i <= n; ++i) values.push_back(midpoint_free_even_sum_max(i));
        } else if (w == "diagdom") {
            for (int i = 1; i <= n; ++i) values.push_back(diagonal_domination(i, raw != 0));
        } else {
            throw std::invalid_argument("unknown sequence: " + w);
        }
        Json j;
        j["sequence"] = w;
        j["values"] = std::move(values);
        *doc_out = dup_string(j.dump());
        return CHESSLAND_OK;
    });
}

chessland_status chessland_nqueens(int n, int forced_file, int forced_rank, char** doc_out) {
    return guarded([&]() -> chessland_status {
        if (!doc_out) throw std::invalid_argument("null output");
        std::optional<Square> forced;
        if (forced_file > 0 || forced_rank > 0) forced = Square{forced_file, forced_rank};
        NQueensResult r = n_queens(n, forced);
        Json j;
        j["n"] = n;
        if (forced) j["forced"] = Json::array({forced->file, forced->rank});
        j["count"] = r.count;
        Json sols = Json::array();
        for (const SquareSet& w : r.witnesses) sols.push_back(square_list(w, n));
        j["solutions"] = std::move(sols);
        *doc_out = dup_string(j.dump());
        return CHESSLAND_OK;
    });
}

chessland_status chessland_verify_all(const chessland_budget* budget, int jobs,
                                      char** report_out, int* all_pass_out) {
    return guarded([&]() -> chessland_status {
        if (!report_out || !all_pass_out) throw std::invalid_argument("null output");
        auto results = run_acceptance(to_budget(budget), resolve_jobs(jobs));
        bool all_pass = true, any_fail = false;
        for (const CriterionResult& r : results) {
            all_pass = all_pass && r.status == CriterionResult::Status::Pass;
            any_fail = any_fail || r.status == CriterionResult::Status::Fail;
        }
        *report_out = dup_string(format_acceptance_report(results, /*include_timing=*/false));
        *all_pass_out = all_pass ? 1 : 0;
        return any_fail ? CHESSLAND_VERIFY_FAILED : CHESSLAND_OK;
    });
}

}  // extern "C"
