#ifndef WCQSYM_H
#define WCQSYM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every call.
typedef enum WcqStatus {
  WCQ_STATUS_OK = 0,
  WCQ_STATUS_NULL_POINTER = 1,
  WCQ_STATUS_INVALID_UTF8 = 2,
  WCQ_STATUS_PARSE = 3,
  WCQ_STATUS_DOMAIN = 4,
  WCQ_STATUS_BASIS_MISMATCH = 5,
  WCQ_STATUS_TOO_LARGE = 6,
  WCQ_STATUS_PANIC = 7,
} WcqStatus;

// Basis of a `WCQSym` element.
typedef enum WcqBasis {
  WCQ_BASIS_MONOMIAL = 0,
  WCQ_BASIS_FUNDAMENTAL = 1,
} WcqBasis;

// An element of `WCQSym` in the M or F basis.
typedef struct WcqElement WcqElement;

// An element of the free Rota-Baxter algebra `Ш(x)`.
typedef struct WcqShaElement WcqShaElement;

typedef struct WcqKernelReport {
  size_t span_dim;
  size_t rank;
  size_t kernel_dim;
  size_t basis_count;
  size_t basis_rank;
  bool all_annihilated;
  bool passed;
} WcqKernelReport;

typedef struct WcqRbCheckReport {
  size_t trials;
  uint64_t seed;
  size_t failures;
  bool passed;
} WcqRbCheckReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Free with [`wcq_string_free`].
char *wcq_last_error(void);

// # Safety
// `s` is null or a string returned by this library and not yet freed.
void wcq_string_free(char *s);

// Parses an element literal; unprefixed compositions are read in `basis`.
//
// # Safety
// `literal` is a NUL-terminated string and `out` is writable.
enum WcqStatus wcq_element_parse(const char *literal, enum WcqBasis basis, struct WcqElement **out);

// # Safety
// `u` is null or a handle returned by this library and not yet freed.
void wcq_element_free(struct WcqElement *u);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_basis(const struct WcqElement *u, enum WcqBasis *out);

// Product, in the basis of `u`.
//
// # Safety
// `u` and `v` are live handles and `out` is writable.
enum WcqStatus wcq_element_mul(const struct WcqElement *u,
                               const struct WcqElement *v,
                               struct WcqElement **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_antipode(const struct WcqElement *u, struct WcqElement **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_to_basis(const struct WcqElement *u,
                                    enum WcqBasis basis,
                                    struct WcqElement **out);

// Projection onto `QSym`, in the M basis.
//
// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_phi(const struct WcqElement *u, struct WcqElement **out);

// Counit as a decimal string.
//
// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_counit(const struct WcqElement *u, char **out);

// Whether `u` and `v` are the same element, whatever their bases.
//
// # Safety
// `u` and `v` are live handles and `out` is writable.
enum WcqStatus wcq_element_equal(const struct WcqElement *u, const struct WcqElement *v, bool *out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_to_string(const struct WcqElement *u, char **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_to_json(const struct WcqElement *u, char **out);

// Coproduct in the basis of `u`, as text.
//
// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_coproduct_string(const struct WcqElement *u, char **out);

// Coproduct in the basis of `u`, as JSON.
//
// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_element_coproduct_json(const struct WcqElement *u, char **out);

// Checks the kernel basis of the projection on compositions of length at most
// `max_len` with positive entries at most `max_entry`.
//
// # Safety
// `out` is writable.
enum WcqStatus wcq_kernel_check(size_t max_len, uint64_t max_entry, struct WcqKernelReport *out);

// # Safety
// `literal` is a NUL-terminated string and `out` is writable.
enum WcqStatus wcq_sha_parse(const char *literal, struct WcqShaElement **out);

// # Safety
// `u` is null or a handle returned by this library and not yet freed.
void wcq_sha_free(struct WcqShaElement *u);

// Augmented mixable shuffle product of weight `lambda`.
//
// # Safety
// `u` and `v` are live handles and `out` is writable.
enum WcqStatus wcq_sha_mul(const struct WcqShaElement *u,
                           const struct WcqShaElement *v,
                           int64_t lambda,
                           struct WcqShaElement **out);

// The Rota-Baxter operator `P`.
//
// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_sha_rb_operator(const struct WcqShaElement *u, struct WcqShaElement **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_sha_antipode(const struct WcqShaElement *u, struct WcqShaElement **out);

// # Safety
// `u` and `v` are live handles and `out` is writable.
enum WcqStatus wcq_sha_equal(const struct WcqShaElement *u,
                             const struct WcqShaElement *v,
                             bool *out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_sha_to_string(const struct WcqShaElement *u, char **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_sha_to_json(const struct WcqShaElement *u, char **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_sha_coproduct_string(const struct WcqShaElement *u, char **out);

// # Safety
// `u` is a live handle and `out` is writable.
enum WcqStatus wcq_sha_coproduct_json(const struct WcqShaElement *u, char **out);

// Checks the Rota-Baxter identity of weight `lambda` on `trials` seeded random pairs.
//
// # Safety
// `out` is writable.
enum WcqStatus wcq_rb_check(size_t trials,
                            uint64_t seed,
                            uint64_t max_head,
                            size_t max_len,
                            uint64_t max_entry,
                            int64_t lambda,
                            struct WcqRbCheckReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WCQSYM_H */
