#ifndef SELFDUAL_H
#define SELFDUAL_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_ARGUMENT = 2,
  SD_STATUS_CAP_EXCEEDED = 3,
  SD_STATUS_MISMATCH = 4,
  SD_STATUS_BUFFER_TOO_SMALL = 5,
  SD_STATUS_OUT_OF_RANGE = 6,
  SD_STATUS_PANIC = 7,
} SdStatus;

/**
 * A materialized list of codes.
 */
typedef struct SdCodeList SdCodeList;

/**
 * A finite field F_{2^m}.
 */
typedef struct SdField SdField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * Valid until the next call into this library from the same thread.
 */
const char *sd_last_error(void);

/**
 * Creates F_{2^m}. `modulus` 0 selects the default irreducible polynomial.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SdStatus sd_field_new(uint32_t m, uint32_t modulus, struct SdField **out);

/**
 * # Safety
 * `field` must come from [`sd_field_new`] and not be used afterwards.
 */
void sd_field_free(struct SdField *field);

/**
 * # Safety
 * `field` and `out` must be valid pointers.
 */
enum SdStatus sd_field_modulus(const struct SdField *field, uint32_t *out);

/**
 * Number of self-dual cyclic codes of length 2^s, as a decimal string.
 *
 * # Safety
 * `buf` must hold `len` bytes (or be null); `needed` may be null.
 */
enum SdStatus sd_count_selfdual(uint32_t s, uint32_t m, char *buf, size_t len, size_t *needed);

/**
 * Number of cyclic codes of length 2^s, as a decimal string.
 *
 * # Safety
 * As for [`sd_count_selfdual`].
 */
enum SdStatus sd_count_all_cyclic(uint32_t s, uint32_t m, char *buf, size_t len, size_t *needed);

/**
 * Lists the self-dual codes of length 2^s in canonical order. Fails with
 * `CapExceeded` if there are more than `cap` (0 means the default cap).
 *
 * # Safety
 * `field` and `out` must be valid pointers.
 */
enum SdStatus sd_enumerate_selfdual(const struct SdField *field,
                                    uint32_t s,
                                    uint64_t cap,
                                    struct SdCodeList **out);

/**
 * # Safety
 * `list` must come from [`sd_enumerate_selfdual`] and not be used afterwards.
 */
void sd_code_list_free(struct SdCodeList *list);

/**
 * # Safety
 * `list` must be a valid pointer or null.
 */
size_t sd_code_list_len(const struct SdCodeList *list);

/**
 * The JSON record of code `index`, as printed by `selfdual enumerate`.
 *
 * # Safety
 * `list` must be valid; `buf` must hold `len` bytes (or be null).
 */
enum SdStatus sd_code_list_json(const struct SdCodeList *list,
                                size_t index,
                                char *buf,
                                size_t len,
                                size_t *needed);

/**
 * Checks code `index` for self-duality by brute force from its generators.
 *
 * # Safety
 * `list` and `out` must be valid pointers.
 */
enum SdStatus sd_code_list_is_self_dual(const struct SdCodeList *list, size_t index, bool *out);

/**
 * The parametrization of S_l^[delta], e.g. "(0, b1, b1, b3)".
 *
 * # Safety
 * `buf` must hold `len` bytes (or be null); `needed` may be null.
 */
enum SdStatus sd_space_describe(size_t l, size_t delta, char *buf, size_t len, size_t *needed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SELFDUAL_H */
