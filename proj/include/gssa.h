/* gssa — graph-state secret-sharing analyzer, C API.
 *
 * Every object is an opaque handle created and destroyed here. Functions
 * return GSSA_OK on success; on failure they return a status code and,
 * when an `err` out-parameter is supplied, a human-readable message that
 * must be released with gssa_string_free().
 *
 * All result payloads are JSON strings with a fixed key order, so reports
 * are byte-identical across runs for identical inputs.
 */
#ifndef GSSA_H
#define GSSA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gssa_status {
  GSSA_OK = 0,
  GSSA_ERR_INVALID_ARGUMENT = 1, /* bad ids, bad parameters, malformed JSON */
  GSSA_ERR_LIMIT = 2,            /* a documented size bound was exceeded */
  GSSA_ERR_CONSISTENCY = 3,      /* internal dichotomy/lemma violation: a bug */
  GSSA_ERR_INTERNAL = 4
} gssa_status;

typedef struct gssa_protocol gssa_protocol;
typedef struct gssa_pattern gssa_pattern;

const char* gssa_version(void);
void gssa_string_free(char* s);

/* ---- protocols (graph + encoding set) ---- */

gssa_status gssa_protocol_parse(const char* json_text, gssa_protocol** out, char** err);
gssa_status gssa_protocol_generate(const char* family, uint32_t n, gssa_protocol** out,
                                   char** err);
gssa_status gssa_protocol_set_encoding(gssa_protocol* p, const uint32_t* ids,
                                       size_t count, char** err);
gssa_status gssa_protocol_to_json(const gssa_protocol* p, char** out);
uint32_t gssa_protocol_vertex_count(const gssa_protocol* p);
void gssa_protocol_free(gssa_protocol* p);

/* Graph complementation over a vertex set (NULL set = the encoding set). */
gssa_status gssa_protocol_conjugate(const gssa_protocol* p, const uint32_t* set_ids,
                                    size_t count, gssa_protocol** out, char** err);

/* ---- access analysis ---- */

/* {"verdict":"accessible"|"blocked","witness":[ids]} */
gssa_status gssa_decide_cc(const gssa_protocol* p, const uint32_t* set_ids, size_t count,
                           char** result_json, char** err);

/* {"verdict":"yes"|"no"|"undetermined", "witness":[ids], ...} */
gssa_status gssa_decide_qq(const gssa_protocol* p, const uint32_t* set_ids, size_t count,
                           char** result_json, char** err);

/* {"verdict":"private"|"accessible"|"neither"} — dense quantum check. */
gssa_status gssa_oracle_check(const gssa_protocol* p, const uint32_t* set_ids,
                              size_t count, char** result_json, char** err);

/* Full access-structure report:
 * {"acc_minimal":[[ids]],"blk_minimal":[[ids]],"k_access":int|null,
 *  "k_privacy":int,"is_threshold":bool,"lemma_checks":[...]} */
gssa_status gssa_analyze(const gssa_protocol* p, uint32_t max_n, char** report_json,
                         char** err);

/* Threshold classification only:
 * {"n":int,"k_access":int|null,"k_privacy":int,"is_threshold":bool,
 *  "k":int|null,"lemma_checks":[...]} */
gssa_status gssa_thresholds(const gssa_protocol* p, uint32_t max_n, char** report_json,
                            char** err);

/* ---- measurement-calculus patterns ---- */

gssa_status gssa_pattern_parse(const char* json_text, gssa_pattern** out, char** err);
gssa_status gssa_pattern_to_json(const gssa_pattern* p, char** out);
void gssa_pattern_free(gssa_pattern* p);

/* {"exists":bool,"g":{"v":[ids]},"layers":{"v":int}} */
gssa_status gssa_find_gflow(const gssa_pattern* p, char** result_json, char** err);

/* {"vertex":int,"valid":bool,"violated_condition":int,"message":str} —
 * verifies the candidate gflow serialized as {"g":{...},"layers":{...}}. */
gssa_status gssa_verify_gflow(const gssa_pattern* p, const char* gflow_json,
                              char** result_json, char** err);

/* {"qubit":int,"semantic":bool,"condition_a":bool,"condition_b":bool,
 *  "structural":bool,"witness":[ids]} */
gssa_status gssa_pointless_check(const gssa_pattern* p, uint32_t qubit,
                                 int with_semantic, char** result_json, char** err);

/* ---- verification suite ---- */

/* Runs the exhaustive property sweep up to max_n (<= 8). Returns
 * GSSA_ERR_CONSISTENCY when a property is violated (or when a fault is
 * injected as a negative control); the summary JSON is produced in both
 * cases. */
gssa_status gssa_verify_suite(uint32_t max_n, int workers, int inject_fault,
                              char** summary_json, char** err);

#ifdef __cplusplus
}
#endif

#endif /* GSSA_H */
