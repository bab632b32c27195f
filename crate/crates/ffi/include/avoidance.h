#ifndef AVOIDANCE_H
#define AVOIDANCE_H

/* Generated by cbindgen from avoidance-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum AvdStatus {
  // The call succeeded.
  AVD_STATUS_OK = 0,
  // A required pointer argument was null.
  AVD_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  AVD_STATUS_INVALID_UTF8 = 2,
  // The pattern or word text does not parse.
  AVD_STATUS_PARSE_ERROR = 3,
  // Arguments were structurally valid but out of range for the call.
  AVD_STATUS_INVALID_ARGUMENT = 4,
  // Enumeration hit its node budget before finishing.
  AVD_STATUS_BUDGET_EXCEEDED = 5,
  // An internal invariant failed; the result cannot be trusted.
  AVD_STATUS_INTERNAL_ERROR = 6,
} AvdStatus;

// Opaque pattern handle. Create with `avd_pattern_parse` or
// `avd_pattern_zimin`, release with `avd_pattern_free`.
typedef struct AvdPattern AvdPattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses pattern text (lowercase variable letters) into a new handle.
//
// On success writes the handle to `out` and returns `Ok`; on failure leaves
// `out` null.
//
// # Safety
// `text` must point to a nul-terminated string; `out` must be valid for one
// pointer write.
enum AvdStatus avd_pattern_parse(const char *text, struct AvdPattern **out);

// Builds the k-th sesquipower (the canonical unavoidable pattern of length
// 2^k - 1) as a new handle.
//
// # Safety
// `out` must be valid for one pointer write.
enum AvdStatus avd_pattern_zimin(uint32_t k, struct AvdPattern **out);

// Releases a pattern handle. Null is ignored.
//
// # Safety
// `p` must have come from this library and not been freed already.
void avd_pattern_free(struct AvdPattern *p);

// Returns the canonical text of the pattern as a new string, or null if the
// handle is null. Release with `avd_string_free`.
//
// # Safety
// `p` must be a live handle or null.
char *avd_pattern_canonical(const struct AvdPattern *p);

// Number of distinct variables, or 0 if the handle is null.
//
// # Safety
// `p` must be a live handle or null.
size_t avd_pattern_variables(const struct AvdPattern *p);

// Pattern length in symbols, or 0 if the handle is null.
//
// # Safety
// `p` must be a live handle or null.
size_t avd_pattern_length(const struct AvdPattern *p);

// Smallest number of times any variable occurs, or 0 if the handle is null.
//
// # Safety
// `p` must be a live handle or null.
size_t avd_pattern_min_occurrence(const struct AvdPattern *p);

// Writes the structural report for a pattern as a JSON document.
//
// # Safety
// `p` must be a live handle; `out` must be valid for one pointer write.
enum AvdStatus avd_analyze_json(const struct AvdPattern *p, char **out);

// Runs the certification pipeline for a pattern against `target_m` letters,
// checking the bound series through `order`, and writes the certificate as
// a JSON document.
//
// # Safety
// `p` must be a live handle; `out` must be valid for one pointer write.
enum AvdStatus avd_certify_json(const struct AvdPattern *p,
                                uint32_t target_m,
                                size_t order,
                                char **out);

// Computes the lower-bound series for a pattern over `m` letters through
// `order` and writes it, with its first sign change and minimum growth
// ratio, as a JSON document.
//
// # Safety
// `p` must be a live handle; `out` must be valid for one pointer write.
enum AvdStatus avd_golod_json(const struct AvdPattern *p, uint32_t m, size_t order, char **out);

// Tests whether a word (lowercase letters) contains any instance of the
// pattern, writing the answer to `out`.
//
// # Safety
// `word` must point to a nul-terminated string; `p` must be a live handle;
// `out` must be valid for one bool write.
enum AvdStatus avd_contains_instance(const char *word, const struct AvdPattern *p, bool *out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must have come from this library and not been freed already.
void avd_string_free(char *s);

// Static description of a status code. Never null; do not free.
const char *avd_status_message(enum AvdStatus status);

// Library version as a static string. Do not free.
const char *avd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AVOIDANCE_H */
