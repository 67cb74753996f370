/* qtorb: exact invariants of omnioriented quasitoric orbifolds.
 *
 * C API over the core library. All functions are thread-safe as long as a
 * given qtorb_model is not mutated concurrently (models are immutable after
 * creation, so sharing them across threads for reads is fine).
 *
 * Conventions:
 *   - Every fallible function returns a qtorb_status; QTORB_OK means success.
 *   - On failure, qtorb_last_error() returns a message for the calling thread
 *     (valid until the next failing call on that thread).
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with qtorb_string_free().
 *   - Models returned through qtorb_model** must be released with
 *     qtorb_model_free().
 *   - `as_json` selects the machine-readable report (canonical JSON with
 *     top-level fields {command, input, result, diagnostics}); 0 selects the
 *     human-readable text block. Both end with a newline.
 *
 * Argument syntax (shared with the command-line tool):
 *   - faces: comma-separated facet names, e.g. "F1,F5"; "P" is the whole
 *     polytope.
 *   - lambda0: comma-separated integers, e.g. "1,1,1,1".
 *   - sectors: "<face>:<lattice point>", e.g. "F1,F5:1,1,1,1", or "untwisted".
 */

#ifndef QTORB_H
#define QTORB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qtorb_model qtorb_model;

typedef enum qtorb_status {
  QTORB_OK = 0,             /* success */
  QTORB_ERR_VALIDATION = 1, /* invalid model data (diagnostics available) */
  QTORB_ERR_USAGE = 2,      /* malformed arguments */
  QTORB_ERR_INTERNAL = 3    /* internal invariant violation */
} qtorb_status;

/* Message for the last failing call on this thread; never NULL. */
const char* qtorb_last_error(void);

/* Release a string returned by this API. NULL is ignored. */
void qtorb_string_free(char* s);

/* Parse a model file (JSON text). On validation failure the status is
 * QTORB_ERR_VALIDATION and qtorb_last_error() lists the diagnostics. */
qtorb_status qtorb_model_parse(const char* json_text, qtorb_model** out_model);

void qtorb_model_free(qtorb_model* model);

/* Canonical serialization of a model. */
qtorb_status qtorb_model_write(const qtorb_model* model, char** out_json);

/* Validation report for raw file text. Produces a report even when the text
 * is broken; returns QTORB_OK when the model is valid and
 * QTORB_ERR_VALIDATION otherwise (the report is produced in both cases). */
qtorb_status qtorb_report_validate(const char* json_text, int as_json,
                                   char** out_report);

/* Orders, signs, and flags. */
qtorb_status qtorb_report_info(const qtorb_model* model, int as_json, char** out_report);

/* Twisted sectors with ages and degree shifts. */
qtorb_status qtorb_report_sectors(const qtorb_model* model, int as_json,
                                  char** out_report);

/* Chen-Ruan Betti table. */
qtorb_status qtorb_report_betti(const qtorb_model* model, int as_json, char** out_report);

/* Chen-Ruan Euler characteristic by both formulas. */
qtorb_status qtorb_report_euler(const qtorb_model* model, int as_json, char** out_report);

/* Quasi-SL flag with offending sectors. */
qtorb_status qtorb_report_quasi_sl(const qtorb_model* model, int as_json,
                                   char** out_report);

/* Blow up along `face` with characteristic vector `lambda0`. The resulting
 * model is returned through out_model when non-NULL. */
qtorb_status qtorb_report_blowup(const qtorb_model* model, const char* face,
                                 const char* lambda0, int as_json, char** out_report,
                                 qtorb_model** out_model);

/* Admissible crepant lambda0 choices for a face. */
qtorb_status qtorb_report_crepant_candidates(const qtorb_model* model, const char* face,
                                             int as_json, char** out_report);

/* Run the blowup and compare invariants before/after. */
qtorb_status qtorb_report_mckay(const qtorb_model* model, const char* face,
                                const char* lambda0, int as_json, char** out_report);

/* Greedy resolution to a manifold model; the final model is returned through
 * out_model when non-NULL. */
qtorb_status qtorb_report_resolve(const qtorb_model* model, int as_json,
                                  char** out_report, qtorb_model** out_model);

/* Product of two sectors. */
qtorb_status qtorb_report_product(const qtorb_model* model, const char* s1,
                                  const char* s2, int as_json, char** out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QTORB_H */
