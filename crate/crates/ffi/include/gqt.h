#ifndef GQT_H
#define GQT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Binary field operations for [`gqt_field_binop`].
 */
typedef enum GqtBinOp {
  GQT_BIN_OP_ADD = 0,
  GQT_BIN_OP_SUB = 1,
  GQT_BIN_OP_MUL = 2,
  GQT_BIN_OP_DIV = 3,
} GqtBinOp;

/**
 * Status codes. Zero is success; domain errors mirror the core error kinds.
 */
typedef enum GqtStatus {
  GQT_STATUS_OK = 0,
  GQT_STATUS_NULL_POINTER = 1,
  GQT_STATUS_INVALID_UTF8 = 2,
  GQT_STATUS_BUFFER_TOO_SMALL = 3,
  GQT_STATUS_OUT_OF_RANGE = 4,
  GQT_STATUS_PANIC = 5,
  GQT_STATUS_NOT_PRIME = 10,
  GQT_STATUS_REDUCIBLE = 11,
  GQT_STATUS_DEGREE_MISMATCH = 12,
  GQT_STATUS_FIELD_TOO_LARGE = 13,
  GQT_STATUS_INVALID_ELEMENT = 14,
  GQT_STATUS_DIVISION_BY_ZERO = 15,
  GQT_STATUS_FIELD_MISMATCH = 16,
  GQT_STATUS_NO_INVOLUTION = 17,
  GQT_STATUS_DIMENSION_MISMATCH = 20,
  GQT_STATUS_NOT_SQUARE = 21,
  GQT_STATUS_NOT_HERMITIAN = 22,
  GQT_STATUS_DEGENERATE_FORM = 23,
  GQT_STATUS_SINGULAR = 24,
  GQT_STATUS_ZERO_VECTOR = 25,
  GQT_STATUS_DEPENDENT_BASIS = 26,
  GQT_STATUS_TOO_LARGE = 30,
  GQT_STATUS_NOT_KERNEL_POINT = 31,
  GQT_STATUS_SELF_ORTHOGONAL_INPUT = 32,
  GQT_STATUS_NOT_UNIQUE = 33,
  GQT_STATUS_NOT_UNITARY = 34,
  GQT_STATUS_NOT_IN_SPAN = 40,
  GQT_STATUS_CHAR2_NOT_SUPPORTED = 41,
  GQT_STATUS_NOT_CHAR2 = 42,
  GQT_STATUS_ZERO_STATE = 43,
  GQT_STATUS_CHAR2_MESSAGE_UNSUPPORTED = 44,
  GQT_STATUS_NOT_BELL_RAY = 45,
  GQT_STATUS_EXHAUSTED_SEARCH = 50,
  GQT_STATUS_SELF_ORTHOGONAL_STATE = 51,
  GQT_STATUS_DEGENERATE_SPAN = 52,
  GQT_STATUS_MALFORMED_BITSTREAM = 53,
  GQT_STATUS_INVALID_ARGUMENT = 60,
} GqtStatus;

/**
 * Opaque finite field handle.
 */
typedef struct GqtField GqtField;

/**
 * Opaque enumerated quantum kernel handle.
 */
typedef struct GqtKernel GqtKernel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL
 * terminated, truncated to `len`). Returns the full message length, or 0
 * when there is no error.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t gqt_last_error_message(char *buf, size_t len);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library.
 */
void gqt_string_free(char *s);

/**
 * Builds GF(p^k) with the default modulus.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GqtStatus gqt_field_new(uint64_t p, uint32_t k, struct GqtField **out);

/**
 * # Safety
 * `f` must be null or a handle from [`gqt_field_new`] not yet freed.
 */
void gqt_field_free(struct GqtField *f);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live field handle.
 */
uint32_t gqt_field_order(const struct GqtField *f);

/**
 * Writes q for GF(q^2); fails with NoInvolution for odd k.
 *
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_field_q(const struct GqtField *f, uint32_t *out);

/**
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_field_binop(const struct GqtField *f,
                               enum GqtBinOp op,
                               uint32_t a,
                               uint32_t b,
                               uint32_t *out);

/**
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_field_inv(const struct GqtField *f, uint32_t a, uint32_t *out);

/**
 * a^e; negative exponents invert first.
 *
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_field_pow(const struct GqtField *f, uint32_t a, int64_t e, uint32_t *out);

/**
 * The involution x -> x^q.
 *
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_field_conj(const struct GqtField *f, uint32_t a, uint32_t *out);

/**
 * x^(q+1).
 *
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_field_norm(const struct GqtField *f, uint32_t a, uint32_t *out);

/**
 * Parses "t+1", "2" or "[1,1]" into an element index.
 *
 * # Safety
 * `f` must be a live field handle, `text` a NUL-terminated string and
 * `out` valid for writes.
 */
enum GqtStatus gqt_field_parse(const struct GqtField *f, const char *text, uint32_t *out);

/**
 * Polynomial text of an element, e.g. "t+1". Null on failure.
 *
 * # Safety
 * `f` must be a live field handle. Free the result with
 * [`gqt_string_free`].
 */
char *gqt_field_format(const struct GqtField *f, uint32_t a);

/**
 * Enumerates the kernel of the standard form in dimension `dim`.
 *
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_kernel_enumerate(const struct GqtField *f,
                                    size_t dim,
                                    bool guard_override,
                                    struct GqtKernel **out);

/**
 * # Safety
 * `k` must be null or a handle from [`gqt_kernel_enumerate`] not yet
 * freed.
 */
void gqt_kernel_free(struct GqtKernel *k);

/**
 * # Safety
 * `k` must be null or a live kernel handle.
 */
size_t gqt_kernel_point_count(const struct GqtKernel *k);

/**
 * # Safety
 * `k` must be null or a live kernel handle.
 */
size_t gqt_kernel_line_count(const struct GqtKernel *k);

/**
 * Normalized coordinates of point `i` as element indices.
 *
 * # Safety
 * `k` must be a live kernel handle and `out` valid for `len` writes.
 */
enum GqtStatus gqt_kernel_point(const struct GqtKernel *k, size_t i, uint32_t *out, size_t len);

/**
 * Sorted point indices of line `i`.
 *
 * # Safety
 * `k` must be a live kernel handle and `out` valid for `len` writes.
 */
enum GqtStatus gqt_kernel_line(const struct GqtKernel *k, size_t i, size_t *out, size_t len);

/**
 * Runs the One-or-All check; writes the number of violating
 * (point, line) pairs plus unique-line failures.
 *
 * # Safety
 * `k` must be a live kernel handle and `violations` valid for writes.
 */
enum GqtStatus gqt_kernel_one_or_all(const struct GqtKernel *k, uint64_t *violations);

/**
 * Point/line catalog as JSON. Null on failure.
 *
 * # Safety
 * `k` must be a live kernel handle. Free the result with
 * [`gqt_string_free`].
 */
char *gqt_kernel_catalog_json(const struct GqtKernel *k);

/**
 * Teleports α|0⟩ + β|1⟩ and writes the JSON transcript to `out_json`.
 * `char2` selects the characteristic-2 procedure.
 *
 * # Safety
 * `f` must be a live field handle and `out_json` valid for writes. Free
 * the transcript with [`gqt_string_free`].
 */
enum GqtStatus gqt_teleport(const struct GqtField *f,
                            uint32_t alpha,
                            uint32_t beta,
                            bool char2,
                            uint64_t seed,
                            char **out_json);

/**
 * Encodes a message (0 = "00", 1 = "01", 2 = "10", 3 = "11") on the
 * Bell state, measures and writes the decoded message.
 *
 * # Safety
 * `f` must be a live field handle and `out` valid for writes.
 */
enum GqtStatus gqt_sdc_roundtrip(const struct GqtField *f, uint32_t message, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GQT_H */
