// Command line for the chessland library. Talks to the core exclusively
// through the C API in chessland/chessland.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "chessland/chessland.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerifyFailed = 4;

struct BudgetHandle {
    chessland_budget* ptr = chessland_budget_new();
    ~BudgetHandle() { chessland_budget_free(ptr); }
};

struct Options {
    std::string piece;
    int n = 0;
    std::string enemy;
    std::string color;
    std::string format = "ascii";
    std::string variant;
    std::string forced;
    double budget_seconds = 0;
    bool paper_compat = false;
    bool quarter = false;
    bool raw = false;
    int jobs = 0;
    std::string out_path;
    std::string in_path;
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    out.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    return true;
}

int fail(const std::string& message, int code) {
    std::cerr << "chessland: error: " << message << "\n";
    return code;
}

int status_to_exit(chessland_status st) {
    switch (st) {
        case CHESSLAND_OK: return kExitOk;
        case CHESSLAND_INVALID_ARGUMENT: return kExitInvalidArgs;
        case CHESSLAND_BUDGET_EXHAUSTED: return kExitBudget;
        case CHESSLAND_INFEASIBLE: return kExitOk;
        case CHESSLAND_VERIFY_FAILED:
        case CHESSLAND_INTERNAL_ERROR: return kExitVerifyFailed;
    }
    return kExitVerifyFailed;
}

int emit(const Options& opt, const char* doc, chessland_status st) {
    int code = status_to_exit(st);
    if (st != CHESSLAND_OK && st != CHESSLAND_BUDGET_EXHAUSTED && !doc)
        return fail(chessland_last_error(), code);
    if (doc) {
        if (!opt.out_path.empty()) {
            std::ofstream f(opt.out_path, std::ios::binary);
            if (!f) return fail("cannot open output file: " + opt.out_path, kExitInvalidArgs);
            f << doc;
        } else {
            std::cout << doc;
            if (*doc && doc[std::string(doc).size() - 1] != '\n') std::cout << "\n";
        }
    }
    if (st == CHESSLAND_BUDGET_EXHAUSTED)
        std::cerr << "chessland: warning: budget exhausted; result not proven optimal\n";
    return code;
}

bool parse_square(const std::string& text, int& file, int& rank) {
    return std::sscanf(text.c_str(), "%d,%d", &file, &rank) == 2;
}

void apply_budget(const Options& opt, BudgetHandle& budget) {
    double seconds = opt.budget_seconds;
    if (seconds <= 0) {
        if (const char* env = std::getenv("CHESSLAND_BUDGET_SECONDS")) seconds = std::atof(env);
    }
    if (seconds > 0) chessland_budget_set_seconds(budget.ptr, seconds);
}

using DocCall = chessland_status (*)(const Options&, const BudgetHandle&, char**);

int run_doc_command(const Options& opt, DocCall call) {
    BudgetHandle budget;
    apply_budget(opt, budget);
    char* doc = nullptr;
    chessland_status st = call(opt, budget, &doc);
    int code = emit(opt, doc, st);
    chessland_string_free(doc);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surveying plans, domination numbers and trapping verdicts for chess pieces"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_piece, bool needs_n) {
        if (needs_piece)
            cmd->add_option("--piece", opt.piece, "king|queen|rook|bishop|knight")->required();
        if (needs_n) cmd->add_option("--n", opt.n, "board size")->required();
        cmd->add_option("--format", opt.format, "ascii|json|csv|svg");
        cmd->add_option("--budget-seconds", opt.budget_seconds, "search budget in seconds");
        cmd->add_option("--out", opt.out_path, "write output to a file");
    };

    CLI::App* survey = app.add_subcommand("survey", "surveying plans and numbers");
    survey->require_subcommand(1);
    CLI::App* survey_plan = survey->add_subcommand("plan", "constructive plan");
    add_common(survey_plan, true, true);
    survey_plan->add_option("--color", opt.color, "bishop color class (black|white)");
    CLI::App* survey_exact = survey->add_subcommand("exact", "exact surveying number");
    add_common(survey_exact, true, true);
    survey_exact->add_option("--color", opt.color, "bishop color class (black|white)");
    CLI::App* survey_formula = survey->add_subcommand("formula", "closed-form day count");
    add_common(survey_formula, true, true);
    survey_formula->add_option("--variant", opt.variant, "king formula variant (zigzag|straight)");

    CLI::App* trap = app.add_subcommand("trap", "trapping verdicts and answer sheets");
    trap->require_subcommand(1);
    CLI::App* trap_verdict_cmd = trap->add_subcommand("verdict", "verdict for one enemy square");
    add_common(trap_verdict_cmd, true, true);
    trap_verdict_cmd->add_option("--enemy", opt.enemy, "enemy square as FILE,RANK")->required();
    CLI::App* trap_sheet = trap->add_subcommand("sheet", "full answer sheet");
    add_common(trap_sheet, true, true);
    trap_sheet->add_flag("--paper-compat", opt.paper_compat,
                         "render untrappable and no-move cells alike as 0");
    trap_sheet->add_flag("--quarter", opt.quarter, "top quarter view");
    trap_sheet->add_option("--jobs", opt.jobs, "parallel workers for orbit cells");

    CLI::App* dominate = app.add_subcommand("dominate", "exact domination number");
    add_common(dominate, true, true);
    dominate->add_option("--color", opt.color, "bishop color class (black|white)");

    CLI::App* seq = app.add_subcommand("seq", "integer sequence utilities");
    seq->require_subcommand(1);
    for (const char* name : {"a003002", "ensum", "diagdom"}) {
        CLI::App* sub = seq->add_subcommand(name);
        add_common(sub, false, true);
        if (std::string(name) == "diagdom")
            sub->add_flag("--raw", opt.raw, "formula value without the d_1 override");
    }

    CLI::App* nqueens = app.add_subcommand("nqueens", "non-attacking queens enumeration");
    add_common(nqueens, false, true);
    nqueens->add_option("--forced", opt.forced, "require a queen on FILE,RANK");

    CLI::App* render = app.add_subcommand("render", "render a plan or sheet");
    render->require_subcommand(1);
    CLI::App* render_plan_cmd = render->add_subcommand("plan");
    add_common(render_plan_cmd, false, false);
    render_plan_cmd->add_option("--piece", opt.piece, "piece for a generated plan");
    render_plan_cmd->add_option("--n", opt.n, "board size for a generated plan");
    render_plan_cmd->add_option("--color", opt.color, "bishop color class");
    render_plan_cmd->add_option("--in", opt.in_path, "render a plan JSON file instead");
    CLI::App* render_sheet_cmd = render->add_subcommand("sheet");
    add_common(render_sheet_cmd, false, false);
    render_sheet_cmd->add_option("--piece", opt.piece, "piece for a computed sheet");
    render_sheet_cmd->add_option("--n", opt.n, "board size for a computed sheet");
    render_sheet_cmd->add_flag("--paper-compat", opt.paper_compat, "paper-style zeros");
    render_sheet_cmd->add_flag("--quarter", opt.quarter, "top quarter view");
    render_sheet_cmd->add_option("--jobs", opt.jobs, "parallel workers");
    render_sheet_cmd->add_option("--in", opt.in_path, "render a sheet JSON file instead");

    CLI::App* verify = app.add_subcommand("verify", "verification sweeps");
    CLI::App* verify_all = verify->add_subcommand("all", "run the full acceptance sweep");
    verify_all->add_option("--budget-seconds", opt.budget_seconds, "per-search budget");
    verify_all->add_option("--jobs", opt.jobs, "parallel workers");
    verify_all->add_option("--out", opt.out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "chessland: error: " << e.what() << "\n";
        return kExitInvalidArgs;
    }

    if (survey_formula->parsed()) {
        long long days = 0;
        chessland_status st =
            chessland_survey_formula(opt.piece.c_str(), opt.n, opt.variant.c_str(), &days);
        if (st != CHESSLAND_OK) return fail(chessland_last_error(), status_to_exit(st));
        std::cout << days << "\n";
        return kExitOk;
    }
    if (survey_plan->parsed() || render_plan_cmd->parsed()) {
        if (!opt.in_path.empty()) {
            std::string json;
            if (!read_file(opt.in_path, json))
                return fail("cannot read " + opt.in_path, kExitInvalidArgs);
            char* doc = nullptr;
            chessland_status st =
                chessland_render_plan_json(json.c_str(), opt.format.c_str(), &doc);
            int code = emit(opt, doc, st);
            chessland_string_free(doc);
            return code;
        }
        if (opt.piece.empty() || opt.n <= 0)
            return fail("render plan needs --in, or --piece and --n", kExitInvalidArgs);
        return run_doc_command(opt, [](const Options& o, const BudgetHandle&, char** doc) {
            return chessland_survey_plan(o.piece.c_str(), o.n, o.color.c_str(), o.format.c_str(),
                                         doc);
        });
    }
    if (survey_exact->parsed()) {
        return run_doc_command(opt, [](const Options& o, const BudgetHandle& b, char** doc) {
            return chessland_survey_exact(o.piece.c_str(), o.n, o.color.c_str(), b.ptr, doc);
        });
    }
    if (trap_verdict_cmd->parsed()) {
        int file = 0, rank = 0;
        if (!parse_square(opt.enemy, file, rank))
            return fail("--enemy expects FILE,RANK", kExitInvalidArgs);
        BudgetHandle budget;
        apply_budget(opt, budget);
        char* doc = nullptr;
        chessland_status st =
            chessland_trap_verdict(opt.piece.c_str(), opt.n, file, rank, budget.ptr, &doc);
        int code = emit(opt, doc, st);
        chessland_string_free(doc);
        return code;
    }
    if (trap_sheet->parsed() || render_sheet_cmd->parsed()) {
        if (!opt.in_path.empty()) {
            std::string json;
            if (!read_file(opt.in_path, json))
                return fail("cannot read " + opt.in_path, kExitInvalidArgs);
            char* doc = nullptr;
            chessland_status st = chessland_render_sheet_json(
                json.c_str(), opt.format.c_str(), opt.paper_compat ? 1 : 0, opt.quarter ? 1 : 0,
                &doc);
            int code = emit(opt, doc, st);
            chessland_string_free(doc);
            return code;
        }
        if (opt.piece.empty() || opt.n <= 0)
            return fail("render sheet needs --in, or --piece and --n", kExitInvalidArgs);
        return run_doc_command(opt, [](const Options& o, const BudgetHandle& b, char** doc) {
            return chessland_trap_sheet(o.piece.c_str(), o.n, o.format.c_str(),
                                        o.paper_compat ? 1 : 0, o.quarter ? 1 : 0, o.jobs,
                                        b.ptr, doc);
        });
    }
    if (dominate->parsed()) {
        return run_doc_command(opt, [](const Options& o, const BudgetHandle& b, char** doc) {
            return chessland_dominate(o.piece.c_str(), o.n, o.color.c_str(), b.ptr, doc);
        });
    }
    if (seq->parsed()) {
        const char* which = seq->get_subcommands().front()->get_name().c_str();
        char* doc = nullptr;
        chessland_status st = chessland_seq(which, opt.n, opt.raw ? 1 : 0, &doc);
        int code = emit(opt, doc, st);
        chessland_string_free(doc);
        return code;
    }
    if (nqueens->parsed()) {
        int file = 0, rank = 0;
        if (!opt.forced.empty() && !parse_square(opt.forced, file, rank))
            return fail("--forced expects FILE,RANK", kExitInvalidArgs);
        char* doc = nullptr;
        chessland_status st = chessland_nqueens(opt.n, file, rank, &doc);
        int code = emit(opt, doc, st);
        chessland_string_free(doc);
        return code;
    }
    if (verify_all->parsed()) {
        BudgetHandle budget;
        apply_budget(opt, budget);
        char* report = nullptr;
        int all_pass = 0;
        chessland_status st =
            chessland_verify_all(budget.ptr, opt.jobs, &report, &all_pass);
        int code = emit(opt, report, st == CHESSLAND_VERIFY_FAILED ? CHESSLAND_OK : st);
        chessland_string_free(report);
        if (code != kExitOk) return code;
        return st == CHESSLAND_VERIFY_FAILED ? kExitVerifyFailed : kExitOk;
    }
    return fail("no subcommand", kExitInvalidArgs);
}
