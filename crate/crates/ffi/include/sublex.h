#ifndef SUBLEX_H
#define SUBLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum SublexStatus {
  SUBLEX_STATUS_OK = 0,
  SUBLEX_STATUS_NULL_POINTER = 1,
  SUBLEX_STATUS_INVALID_ARGUMENT = 2,
  SUBLEX_STATUS_PARSE_ERROR = 3,
  SUBLEX_STATUS_SEED_REJECTED = 4,
  SUBLEX_STATUS_BUFFER_TOO_SMALL = 5,
  SUBLEX_STATUS_INTERNAL = 6,
} SublexStatus;

// A constant dimension code.
typedef struct SublexCode SublexCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the last error message on this thread into `buf` (NUL
// terminated, truncated to `cap`) and returns its full length.
//
// # Safety
// `buf` must be null or valid for `cap` bytes.
size_t sublex_last_error(char *buf, size_t cap);

// Plain lexicode with parameters `(n, k, d)` over `F_q`.
//
// # Safety
// `out` must be valid for a write.
enum SublexStatus sublex_lexicode(uint32_t n,
                                  uint32_t k,
                                  uint32_t d,
                                  uint32_t q,
                                  uint32_t workers,
                                  struct SublexCode **out);

// Lexicode with the rank-metric seeds; `seed` may be null, or a code to
// extend instead. `prune` nonzero enables the pruning rules.
//
// # Safety
// `seed` must be null or a live handle; `out` must be valid for a write.
enum SublexStatus sublex_seeded(uint32_t n,
                                uint32_t k,
                                uint32_t d,
                                uint32_t q,
                                uint32_t workers,
                                int32_t prune,
                                const struct SublexCode *seed,
                                struct SublexCode **out);

// Multilevel construction on the default identifying vectors.
//
// # Safety
// `out` must be valid for a write.
enum SublexStatus sublex_ml(uint32_t n,
                            uint32_t k,
                            uint32_t d,
                            uint32_t q,
                            struct SublexCode **out);

// Parses a NUL-terminated code file.
//
// # Safety
// `text` must be a valid C string; `out` must be valid for a write.
enum SublexStatus sublex_code_parse(const char *text, struct SublexCode **out);

// Writes the code file text plus a NUL into `buf`. `needed` (if not null)
// receives the size including the NUL; a short buffer gives
// `BufferTooSmall` and leaves `buf` untouched.
//
// # Safety
// `code` must be a live handle, `buf` null or valid for `cap` bytes and
// `needed` null or valid for a write.
enum SublexStatus sublex_code_render(const struct SublexCode *code,
                                     char *buf,
                                     size_t cap,
                                     size_t *needed);

// Number of codewords.
//
// # Safety
// `code` must be a live handle and `len` valid for a write.
enum SublexStatus sublex_code_len(const struct SublexCode *code, size_t *len);

// `n`, `k`, `d` and `q` of a code; any output may be null.
//
// # Safety
// `code` must be a live handle; outputs null or valid for writes.
enum SublexStatus sublex_code_params(const struct SublexCode *code,
                                     uint32_t *n,
                                     uint32_t *k,
                                     uint32_t *d,
                                     uint32_t *q);

// Exact minimum subspace distance, or -1 for codes with fewer than two
// words.
//
// # Safety
// `code` must be a live handle and `min` valid for a write.
enum SublexStatus sublex_code_min_distance(const struct SublexCode *code,
                                           uint32_t workers,
                                           int64_t *min);

// Releases a handle; null is ignored.
//
// # Safety
// `code` must be null or a handle not yet freed.
void sublex_code_free(struct SublexCode *code);

// Subspace distance between the row spaces of two generator matrices over
// `F_q`, each row-major with `n` columns and entries in `0..q`.
//
// # Safety
// `a` must be valid for `rows_a * n` bytes, `b` for `rows_b * n` bytes and
// `out` for a write.
enum SublexStatus sublex_distance(uint32_t q,
                                  uint32_t n,
                                  const uint8_t *a,
                                  uint32_t rows_a,
                                  const uint8_t *b,
                                  uint32_t rows_b,
                                  uint32_t *out);

// `[n, k]_q`, the size of the Grassmannian.
//
// # Safety
// `out` must be valid for a write.
enum SublexStatus sublex_gaussian_binomial(uint32_t n, uint32_t k, uint32_t q, uint64_t *out);

// Version string of the library, NUL terminated and static.
const char *sublex_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBLEX_H */
