/* C API for the chessland core: surveying plans and numbers, trapping
 * verdicts and answer sheets, domination numbers, sequence utilities and the
 * verification sweep. All results arrive as documents (JSON unless another
 * format is requested); strings returned through an out-parameter must be
 * released with chessland_string_free. */
#ifndef CHESSLAND_H
#define CHESSLAND_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chessland_status {
    CHESSLAND_OK = 0,
    CHESSLAND_INVALID_ARGUMENT = 1,
    CHESSLAND_BUDGET_EXHAUSTED = 2,
    CHESSLAND_INFEASIBLE = 3,
    CHESSLAND_VERIFY_FAILED = 4,
    CHESSLAND_INTERNAL_ERROR = 5
} chessland_status;

typedef struct chessland_budget chessland_budget;

chessland_budget* chessland_budget_new(void);
void chessland_budget_free(chessland_budget* budget);
void chessland_budget_set_seconds(chessland_budget* budget, double seconds);
void chessland_budget_set_max_states(chessland_budget* budget, long long states);

void chessland_string_free(char* s);

/* Message for the most recent failing call on this thread. */
const char* chessland_last_error(void);

/* Closed-form day counts: knight -> shoelace formula, king -> zig-zag G
 * (variant "straight" -> f), rook -> n, bishop -> n-2 family. */
chessland_status chessland_survey_formula(const char* piece, int n, const char* variant,
                                          long long* days_out);

/* Constructive plan rendered in the requested format (ascii|json|csv|svg).
 * color selects the bishop color class ("black"|"white"|""). */
chessland_status chessland_survey_plan(const char* piece, int n, const char* color,
                                       const char* format, char** doc_out);

/* Exact shortest survey; JSON document with status/days/path. */
chessland_status chessland_survey_exact(const char* piece, int n, const char* color,
                                        const chessland_budget* budget, char** doc_out);

/* Exact domination number; JSON document with status/gamma/witness. */
chessland_status chessland_dominate(const char* piece, int n, const char* color,
                                    const chessland_budget* budget, char** doc_out);

/* Trapping verdict for one enemy square; JSON document. */
chessland_status chessland_trap_verdict(const char* piece, int n, int enemy_file, int enemy_rank,
                                        const chessland_budget* budget, char** doc_out);

/* Full answer sheet in the requested format. quarter/paper_compat select the
 * paper-style views; jobs > 1 fans orbit representatives out to workers. */
chessland_status chessland_trap_sheet(const char* piece, int n, const char* format,
                                      int paper_compat, int quarter, int jobs,
                                      const chessland_budget* budget, char** doc_out);

/* Re-render a plan document produced in JSON form (validates the moves). */
chessland_status chessland_render_plan_json(const char* plan_json, const char* format,
                                            char** doc_out);

/* Re-render an answer-sheet document produced in JSON form. */
chessland_status chessland_render_sheet_json(const char* sheet_json, const char* format,
                                             int paper_compat, int quarter, char** doc_out);

/* which: "a003002" | "ensum" | "diagdom" (raw selects the printed formula
 * values without the d_1 override). JSON array of values for 1..n. */
chessland_status chessland_seq(const char* which, int n, int raw, char** doc_out);

/* forced_file/forced_rank 0 means unconstrained. JSON with count and
 * solutions. */
chessland_status chessland_nqueens(int n, int forced_file, int forced_rank, char** doc_out);

/* Runs the acceptance sweep; report is the pass/fail matrix. all_pass_out is
 * 1 only when every criterion passed (skips count as not passing). */
chessland_status chessland_verify_all(const chessland_budget* budget, int jobs,
                                      char** report_out, int* all_pass_out);

#ifdef __cplusplus
}
#endif

#endif /* CHESSLAND_H */
