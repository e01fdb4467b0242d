/* C interface to the relative-position toolkit. All domain objects are
 * opaque handles; every fallible call returns an rp_status and writes its
 * result through out-parameters. Strings returned through char** are owned
 * by the caller and must be released with rp_string_free. */

#ifndef RELPOS_H
#define RELPOS_H

#include <stdint.h>
#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rp_status {
    RP_OK = 0,
    RP_ERR_BAD_INPUT = 1,
    RP_ERR_BUDGET_EXCEEDED = 2,
    RP_ERR_OCCURRENCE_NOT_FOUND = 3,
    RP_ERR_NO_FIXED_POINT = 4,
    RP_ERR_UNDETERMINED = 5,
    RP_ERR_MALFORMED_SUPERTILE = 6,
    RP_ERR_NON_PRIMITIVE = 7,
    RP_ERR_SINGULAR = 8,
    RP_ERR_OVERFLOW = 9,
    RP_ERR_INTERNAL = 10
} rp_status;

typedef struct rp_word rp_word;
typedef struct rp_subst rp_subst;

/* Static description of a status code. */
const char* rp_status_message(rp_status status);

/* Detailed message for the most recent failure on this thread. */
const char* rp_last_error(void);

void rp_string_free(char* s);

/* Global index budget bounding all lazy expansion (default 10^7). */
void rp_set_index_budget(uint64_t budget);
uint64_t rp_index_budget(void);

/* Words. spec follows the word grammar, e.g. "fib", "periodic:aab",
 * "tm | clone:2", "fib | delete | reflect". */
rp_status rp_word_create(const char* spec, rp_word** out);
void rp_word_destroy(rp_word* w);

rp_status rp_word_letter_at(const rp_word* w, uint64_t index, char* out);
/* buffer must hold length + 1 bytes; output is NUL-terminated. */
rp_status rp_word_prefix(const rp_word* w, uint64_t length, char* buffer);
rp_status rp_word_provenance(const rp_word* w, char** out);

/* Position machinery: p_x(n) (0-based position of the n-th occurrence,
 * n >= 1), r(n) = p_b(n) - p_a(n), occurrence counts in prefixes. */
rp_status rp_word_position(const rp_word* w, char letter, uint64_t n, int64_t* out);
rp_status rp_word_relative(const rp_word* w, uint64_t n, int64_t* out);
rp_status rp_word_count(const rp_word* w, char letter, uint64_t prefix_len, uint64_t* out);

/* Substitutions (grammar: fibonacci, tm, pisa:k,l,m, ..., or a->W;b->W). */
rp_status rp_subst_create(const char* spec, rp_subst** out);
void rp_subst_destroy(rp_subst* s);
rp_status rp_subst_format(const rp_subst* s, char** out);
rp_status rp_subst_matrix(const rp_subst* s, int64_t out[4]); /* row-major */
rp_status rp_subst_apply(const rp_subst* s, const char* finite_word, char** out);
rp_status rp_subst_fixed_point(const rp_subst* s, char seed, rp_word** out);

/* Spectral report for a substitution spec, as a JSON document. */
rp_status rp_analyze_json(const char* subst_spec, char** out_json);

/* Reconstruction from a relative position spec ("fib", "tm",
 * "formula:2*n+1", "values:1,2,3", "word:WORDSPEC"). On success *out_word
 * is set; on a violation RP_ERR_UNDETERMINED-style failure is NOT used --
 * the call returns RP_OK with *out_word = NULL and the violation described
 * in the JSON report. */
rp_status rp_reconstruct_json(const char* r_spec, uint64_t pairs, rp_word** out_word,
                              char** out_json);

/* Identity checks. rp_verify_ids returns a newline-separated list. */
rp_status rp_verify_ids(char** out);
rp_status rp_verify(const char* check_id, uint64_t n_scale, uint64_t len_scale, int* out_pass,
                    char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* RELPOS_H */
