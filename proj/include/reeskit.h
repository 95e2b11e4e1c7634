/* C interface to the Rees-algebra toolkit. All handles are opaque; every
 * command returns a status code and, on success (and on the report-carrying
 * failure codes 2-4), a JSON report. Thread-safe: handles are immutable after
 * construction and the error message is thread-local. */
#ifndef REESKIT_H
#define REESKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
    RK_OK = 0,
    RK_ERR_PARSE = 1,         /* malformed input */
    RK_ERR_HYPOTHESIS = 2,    /* report-only: hypotheses fail */
    RK_ERR_CONTRADICTION = 3, /* hypotheses hold, a conclusion fails */
    RK_ERR_BUDGET = 4,        /* computation budget exhausted */
    RK_ERR_INVALID = 5        /* bad arguments / unusable input module */
} rk_status;

typedef struct rk_module rk_module;
typedef struct rk_report rk_report;

typedef struct rk_options {
    uint64_t seed;        /* default 0 */
    unsigned max_degree;  /* degreewise bounds; 0 means the default 6 */
    uint64_t budget;      /* Groebner pair budget; 0 means the default */
    unsigned jobs;        /* gallery parallelism; 0 means 1 */
    uint64_t field_char;  /* gallery coefficient field: 0 = the default prime
                             32003, 1 = the rationals, otherwise a prime */
} rk_options;

const char* rk_version(void);

/* Message for the most recent failure on this thread ("" when none). */
const char* rk_last_error(void);

/* Parse a JSON module spec. On success *out owns the module. */
rk_status rk_module_parse(const char* json, rk_module** out);
void rk_module_free(rk_module* m);

/* Commands. opts may be NULL for defaults. On RK_OK (and on the
 * report-carrying statuses 2-4 of rk_cmd_check / rk_cmd_gallery) *out holds
 * a report; otherwise *out is NULL and rk_last_error() explains. */
rk_status rk_cmd_rees(const rk_module* m, const rk_options* opts, rk_report** out);
rk_status rk_cmd_fiber(const rk_module* m, const rk_options* opts, rk_report** out);
rk_status rk_cmd_powers(const rk_module* m, const rk_options* opts, rk_report** out);
rk_status rk_cmd_bourbaki(const rk_module* m, const rk_options* opts, rk_report** out);
rk_status rk_cmd_residual(const rk_module* m, const rk_options* opts, rk_report** out);
rk_status rk_cmd_check(const rk_module* m, const char* theorem_id, const rk_options* opts,
                       rk_report** out);
/* theorem_id may be NULL to run every registry entry. */
rk_status rk_cmd_gallery(const char* theorem_id, const rk_options* opts, rk_report** out);

/* UTF-8 JSON text, owned by the report handle. */
const char* rk_report_json(const rk_report* r);
void rk_report_free(rk_report* r);

#ifdef __cplusplus
}
#endif

#endif /* REESKIT_H */
