/* C interface to the Stanley sequence library.
 *
 * Every fallible call returns a stanley_status. On failure a description is
 * available from stanley_last_error() on the calling thread until the next
 * failing call there. Handles are opaque; destroy what you create.
 *
 * Buffer copies follow one convention: up to `cap` values are written to
 * `buf` and `*out_len` receives the number written.
 *
 * Output paths accept "-" for standard output. Files are written to a
 * temporary sibling and renamed into place, so failures leave no partial
 * file behind.
 */
#ifndef STANLEY_STANLEY_H
#define STANLEY_STANLEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define STANLEY_API __declspec(dllexport)
#else
#define STANLEY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stanley_status {
  STANLEY_OK = 0,
  STANLEY_ERR_EMPTY_SEED,
  STANLEY_ERR_NEGATIVE_ELEMENT,
  STANLEY_ERR_NOT_PROGRESSION_FREE,
  STANLEY_ERR_BAD_K,
  STANLEY_ERR_OVERFLOW,
  STANLEY_ERR_CAPACITY_EXCEEDED,
  STANLEY_ERR_OUT_OF_RANGE,
  STANLEY_ERR_INCOMPLETE_PREFIX,
  STANLEY_ERR_EMPTY_RANGE,
  STANLEY_ERR_BAD_INPUT,
  STANLEY_ERR_BAD_EPSILON,
  STANLEY_ERR_TOO_SHORT,
  STANLEY_ERR_TOO_FEW_SAMPLES,
  STANLEY_ERR_DEGENERATE_SAMPLES,
  STANLEY_ERR_UNSUPPORTED_K,
  STANLEY_ERR_IO_FAILURE,
  STANLEY_ERR_PARSE_ERROR,
  STANLEY_ERR_CONSISTENCY_ERROR,
  STANLEY_ERR_INVALID_ARGUMENT,
  STANLEY_ERR_INTERNAL
} stanley_status;

typedef enum stanley_engine {
  STANLEY_ENGINE_SIEVE = 0,
  STANLEY_ENGINE_DIRECT = 1
} stanley_engine;

typedef enum stanley_inequality {
  STANLEY_INEQ_MEMBERSHIP_CRITERION = 0,
  STANLEY_INEQ_PAIR_BOUND,
  STANLEY_INEQ_NONMEMBER_BOUND,
  STANLEY_INEQ_QUADRATIC_BOUND,
  STANLEY_INEQ_THEOREM_FLOOR
} stanley_inequality;

/* Corruptions for negative-control runs of the verifiers. */
typedef enum stanley_fault {
  STANLEY_FAULT_PHANTOM_MEMBERS = 0, /* membership bits without terms */
  STANLEY_FAULT_HIDDEN_MEMBERS,      /* terms without membership bits */
  STANLEY_FAULT_DROPPED_TERMS        /* terms removed, completeness kept */
} stanley_fault;

typedef enum stanley_export_format {
  STANLEY_EXPORT_BFILE = 0, /* "n a(n)" lines */
  STANLEY_EXPORT_CSV        /* "k,a_k" with header */
} stanley_export_format;

typedef struct stanley_sequence stanley_sequence;
typedef struct stanley_view stanley_view;

typedef struct stanley_report {
  stanley_inequality inequality;
  uint64_t range_lo;
  uint64_t range_hi;
  int passed;
  int vacuous;
  uint64_t location; /* smallest counterexample; meaningful when !passed */
  int64_t lhs;       /* sides at the counterexample, or at range_hi */
  int64_t rhs;
} stanley_report;

typedef struct stanley_fit {
  double slope;
  double intercept;
  double residual;
  size_t points;
} stanley_fit;

typedef struct stanley_theorem_result {
  double epsilon;
  int has_x0;
  uint64_t x0_observed;
  int floor_holds;
  uint64_t first_floor_violation;
} stanley_theorem_result;

typedef struct stanley_gap_summary {
  size_t gap_count;
  uint64_t max_gap;
  size_t max_gap_index;
  size_t record_count;
} stanley_gap_summary;

STANLEY_API const char* stanley_status_name(stanley_status status);
STANLEY_API const char* stanley_last_error(void);

/* Seeds. On STANLEY_ERR_NOT_PROGRESSION_FREE the witness progression is
 * copied to `buf` instead of the normalized seed. */
STANLEY_API stanley_status stanley_validate_seed(const int64_t* raw, size_t n, int k, uint64_t* buf,
                                                 size_t cap, size_t* out_len);

/* Generation. */
STANLEY_API stanley_status stanley_sequence_create(const int64_t* raw, size_t n, int k,
                                                   stanley_engine engine, stanley_sequence** out);
STANLEY_API void stanley_sequence_destroy(stanley_sequence* seq);
STANLEY_API stanley_status stanley_sequence_next(stanley_sequence* seq, uint64_t* out_term);
STANLEY_API stanley_status stanley_sequence_extend_to_bound(stanley_sequence* seq, uint64_t x);
STANLEY_API stanley_status stanley_sequence_extend_to_count(stanley_sequence* seq, size_t count);
STANLEY_API stanley_status stanley_sequence_is_admissible(const stanley_sequence* seq, uint64_t n,
                                                          int* out);
STANLEY_API size_t stanley_sequence_size(const stanley_sequence* seq);
STANLEY_API uint64_t stanley_sequence_complete_to(const stanley_sequence* seq);
STANLEY_API uint64_t stanley_sequence_forbidden_bits(const stanley_sequence* seq);
STANLEY_API stanley_status stanley_sequence_copy_terms(const stanley_sequence* seq, size_t offset,
                                                       uint64_t* buf, size_t cap, size_t* out_len);
STANLEY_API stanley_status stanley_sequence_snapshot(const stanley_sequence* seq, stanley_view** out);
STANLEY_API stanley_status stanley_sequence_resume(const stanley_view* view, stanley_engine engine,
                                                   stanley_sequence** out);
/* Sieve engine only: forget the forbidden mark on v, now and later. */
STANLEY_API stanley_status stanley_sequence_suppress_forbidden(stanley_sequence* seq, uint64_t v);

/* Views. */
STANLEY_API void stanley_view_destroy(stanley_view* view);
STANLEY_API size_t stanley_view_size(const stanley_view* view);
STANLEY_API uint64_t stanley_view_complete_to(const stanley_view* view);
STANLEY_API int stanley_view_k(const stanley_view* view);
STANLEY_API uint64_t stanley_view_seed_max(const stanley_view* view);
STANLEY_API stanley_status stanley_view_copy_terms(const stanley_view* view, size_t offset, uint64_t* buf,
                                                   size_t cap, size_t* out_len);
STANLEY_API stanley_status stanley_view_corrupt(const stanley_view* view, stanley_fault fault,
                                                const uint64_t* values, size_t n, stanley_view** out);

/* Analysis. */
STANLEY_API stanley_status stanley_h_count(const stanley_view* view, uint64_t n, uint64_t* out);
STANLEY_API stanley_status stanley_counting_function(const stanley_view* view, uint64_t x, uint64_t* out);
STANLEY_API stanley_status stanley_verify(const stanley_view* view, stanley_inequality which, uint64_t bound,
                                          stanley_report* out);
STANLEY_API stanley_status stanley_theorem_floor(uint64_t x, uint64_t max_a, uint64_t* out);
STANLEY_API stanley_status stanley_geometric_grid(double base, double ratio, uint64_t max_x, uint64_t* buf,
                                                  size_t cap, size_t* out_len);
STANLEY_API stanley_status stanley_theorem_check(const stanley_view* view, const uint64_t* xs, size_t n,
                                                 double epsilon, stanley_theorem_result* out);
STANLEY_API stanley_status stanley_exponent_fit(const stanley_view* view, const uint64_t* xs, size_t n,
                                                stanley_fit* out);
STANLEY_API stanley_status stanley_gap_summary_of(const stanley_view* view, stanley_gap_summary* out);

/* Files. */
STANLEY_API stanley_status stanley_write_sequence(const stanley_view* view, const char* path);
STANLEY_API stanley_status stanley_read_sequence(const char* path, stanley_view** out);
STANLEY_API stanley_status stanley_write_counting_csv(const stanley_view* view, const uint64_t* xs, size_t n,
                                                      const char* path);
STANLEY_API stanley_status stanley_write_h_csv(const stanley_view* view, uint64_t lo, uint64_t hi,
                                               const char* path);
STANLEY_API stanley_status stanley_write_gaps_csv(const stanley_view* view, const char* path);
STANLEY_API stanley_status stanley_write_verification_csv(const stanley_report* reports, size_t n,
                                                          const char* path);
/* Copies the NUL-terminated summary line ("PASS" or "FAIL <inequality>
 * <location>") into buf, truncating to cap - 1 characters. */
STANLEY_API stanley_status stanley_verification_summary(const stanley_report* reports, size_t n, char* buf,
                                                        size_t cap);
STANLEY_API stanley_status stanley_export(const stanley_view* view, stanley_export_format format,
                                          const char* path);

#ifdef __cplusplus
}
#endif

#endif /* STANLEY_STANLEY_H */
