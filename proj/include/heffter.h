/*
 * heffter: construction engine, verifier and search oracle for square
 * Heffter arrays H(n;k).
 *
 * C interface of the shared library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions
 * return HEFFTER_OK (0) on success or a nonzero error code; the thread-local
 * message behind heffter_last_error() describes the most recent failure on
 * the calling thread.
 */

#ifndef HEFFTER_H
#define HEFFTER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum heffter_status {
  HEFFTER_OK = 0,
  HEFFTER_ERR_INVALID_ARGUMENT = 1,
  HEFFTER_ERR_OUT_OF_SCOPE = 2, /* parameters classify outside the engine's cases */
  HEFFTER_ERR_PARSE = 3,
  HEFFTER_ERR_UNKNOWN_FIXTURE = 4,
  HEFFTER_ERR_MISSING_PARAMETER = 5,
  HEFFTER_ERR_CONSTRUCTION = 6,
  HEFFTER_ERR_INTERNAL = 7,
};

enum heffter_case {
  HEFFTER_CASE_A = 0,
  HEFFTER_CASE_B = 1,
  HEFFTER_CASE_C = 2,
  HEFFTER_CASE_D = 3,
  HEFFTER_CASE_E = 4,
  HEFFTER_INTEGER_CASE = 5,
  HEFFTER_FULL_SQUARE = 6,
  HEFFTER_INVALID_PARAMS = 7,
};

enum heffter_search_outcome {
  HEFFTER_SEARCH_FOUND = 0,
  HEFFTER_SEARCH_EXHAUSTED = 1,
  HEFFTER_SEARCH_BUDGET_EXCEEDED = 2,
};

typedef struct heffter_array heffter_array;
typedef struct heffter_report heffter_report;

const char* heffter_version(void);

/* Message for the most recent error on this thread; never NULL. */
const char* heffter_last_error(void);

/* Classification of (n, k). reason may be NULL; otherwise it receives a
 * NUL-terminated explanation truncated to reason_len. */
int heffter_classify(long n, long k, int* verdict, char* reason, size_t reason_len);

/* Builds the H(n;k). Returns HEFFTER_ERR_OUT_OF_SCOPE for parameters outside
 * the five construction cases (see heffter_classify for the reason). */
int heffter_generate(long n, long k, heffter_array** out);

void heffter_array_free(heffter_array* a);
long heffter_array_order(const heffter_array* a);
long heffter_array_fill(const heffter_array* a); /* declared per-line fill count */
long heffter_array_cell_count(const heffter_array* a);
/* Cells are indexed in row-major order. Returns nonzero on a bad index. */
int heffter_array_cell(const heffter_array* a, long index, long* row, long* col,
                       long long* value);
/* 0 when the cell is empty (0 is never a stored entry). */
long long heffter_array_value_at(const heffter_array* a, long row, long col);
/* Number of cells in a named fixture mask, or -1 when the mask is absent. */
long heffter_array_mask_cells(const heffter_array* a, const char* mask_name);

/* Serialization. *out is a NUL-terminated buffer to release with
 * heffter_string_free. */
int heffter_array_to_text(const heffter_array* a, char** out);
int heffter_array_to_json(const heffter_array* a, char** out);
int heffter_array_from_text(const char* text, heffter_array** out);
int heffter_array_from_json(const char* json, heffter_array** out);
void heffter_string_free(char* s);

/* Verification. k <= 0 infers the fill count from the array when it is
 * uniform (and fails otherwise). integer_mode != 0 demands exact zero line
 * sums. The report is produced even when the array is invalid. */
int heffter_verify(const heffter_array* a, long k, int integer_mode, heffter_report** out);
void heffter_report_free(heffter_report* r);
int heffter_report_valid(const heffter_report* r);
long long heffter_report_modulus(const heffter_report* r);
long heffter_report_violation_count(const heffter_report* r);
int heffter_report_violation(const heffter_report* r, long index, char* buf, size_t buf_len);
int heffter_report_to_json(const heffter_report* r, char** out);
int heffter_report_to_text(const heffter_report* r, char** out);

/* Backtracking existence search. max_millis < 0 disables the wall clock.
 * outcome receives a heffter_search_outcome; *out is set only when found. */
int heffter_search(long n, long k, unsigned long long max_nodes, long long max_millis,
                   int* outcome, heffter_array** out);

/* Embedded reference fixtures. k <= 0 means "not supplied". */
long heffter_fixture_count(void);
int heffter_fixture_name(long index, char* buf, size_t buf_len);
int heffter_fixture_get(const char* name, long k, heffter_array** out);

#ifdef __cplusplus
}
#endif

#endif /* HEFFTER_H */
