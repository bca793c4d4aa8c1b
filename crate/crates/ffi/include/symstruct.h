#ifndef SYMSTRUCT_H
#define SYMSTRUCT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SymStatus {
  SYM_STATUS_OK = 0,
  SYM_STATUS_NULL_POINTER = 1,
  SYM_STATUS_INVALID_UTF8 = 2,
  SYM_STATUS_PARSE = 3,
  SYM_STATUS_DIMENSION = 4,
  SYM_STATUS_INVALID_ARGUMENT = 5,
  SYM_STATUS_CAPACITY = 6,
  SYM_STATUS_VERIFICATION_FAILED = 7,
  SYM_STATUS_INTERNAL = 8,
} SymStatus;

/**
 * Opaque decomposition over the integers.
 */
typedef struct SymDecomposition SymDecomposition;

/**
 * Opaque polynomial over the integers.
 */
typedef struct SymPolynomial SymPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `text` as a polynomial in `n` variables.
 *
 * # Safety
 * `text` must be a valid nul-terminated string; `out` must be writable.
 */
enum SymStatus sym_polynomial_parse(const char *text, size_t n, struct SymPolynomial **out);

/**
 * Reads the JSON wire form `{"n": .., "terms": [..]}`.
 *
 * # Safety
 * As for [`sym_polynomial_parse`].
 */
enum SymStatus sym_polynomial_from_json(const char *text, struct SymPolynomial **out);

/**
 * Canonical text form. Release with [`sym_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SymStatus sym_polynomial_to_string(const struct SymPolynomial *p, char **out);

/**
 * JSON wire form. Release with [`sym_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SymStatus sym_polynomial_to_json(const struct SymPolynomial *p, char **out);

/**
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void sym_polynomial_free(struct SymPolynomial *p);

/**
 * Decomposes `p` with the default generators.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SymStatus sym_decompose(const struct SymPolynomial *p, struct SymDecomposition **out);

/**
 * Expands a decomposition back into a polynomial.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SymStatus sym_recompose(const struct SymDecomposition *d, struct SymPolynomial **out);

/**
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SymStatus sym_decomposition_to_json(const struct SymDecomposition *d, char **out);

/**
 * Human-readable form such as `d1 ⊗ x1 − d2 ⊗ 1`, UTF-8 encoded.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SymStatus sym_decomposition_render(const struct SymDecomposition *d, char **out);

/**
 * Reads a decomposition JSON relative to the default generators.
 *
 * # Safety
 * `text` must be a valid nul-terminated string; `out` must be writable.
 */
enum SymStatus sym_decomposition_from_json(const char *text, struct SymDecomposition **out);

/**
 * # Safety
 * `d` must be null or a handle not yet freed.
 */
void sym_decomposition_free(struct SymDecomposition *d);

/**
 * Reduced form of a monomial given as text, e.g. `x2^2*x3^3`.
 *
 * # Safety
 * `text` must be a valid nul-terminated string; `out` must be writable.
 */
enum SymStatus sym_reduce_monomial(const char *text, size_t n, char **out);

/**
 * `dim V_I` for `I = members[0..len]`, which must contain `n`.
 *
 * # Safety
 * `members` must point to `len` readable values; `out` must be writable.
 */
enum SymStatus sym_module_dimension(size_t n, const size_t *members, size_t len, uint64_t *out);

/**
 * Runs the full oracle suite and writes its JSON report. Returns
 * `VerificationFailed` (with the report still written) when a check fails.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymStatus sym_verify_json(size_t n,
                               uint32_t max_degree,
                               uint64_t seed,
                               uint64_t trials,
                               char **out);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sym_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void sym_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMSTRUCT_H */
