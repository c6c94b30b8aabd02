#ifndef CUBICQ_H
#define CUBICQ_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum CqStatus {
  CQ_STATUS_OK = 0,
  CQ_STATUS_NULL_POINTER = 1,
  CQ_STATUS_INVALID_UTF8 = 2,
  CQ_STATUS_PARSE_ERROR = 3,
  CQ_STATUS_COMPUTATION_ERROR = 4,
  CQ_STATUS_VERIFICATION_FAILED = 5,
  CQ_STATUS_INVALID_ARGUMENT = 6,
  CQ_STATUS_PANIC = 7,
} CqStatus;

/**
 * The three rewriting systems on three strands.
 */
typedef enum CqSystemKind {
  CQ_SYSTEM_KIND_POSITIVE = 0,
  CQ_SYSTEM_KIND_SIGNED1 = 1,
  CQ_SYSTEM_KIND_SIGNED2 = 2,
} CqSystemKind;

/**
 * Opaque element of the free algebra on the braid generators.
 */
typedef struct CqElement CqElement;

/**
 * Opaque rewriting system.
 */
typedef struct CqSystem CqSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread; empty after a success. The pointer stays valid
 * until the next call on the same thread.
 */
const char *cq_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library that was not yet freed.
 */
void cq_string_free(char *s);

/**
 * Parses an element expression such as `"[1 2] - a*[2 -1]"` on `strands` strands.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` a valid pointer.
 */
enum CqStatus cq_element_parse(const char *src, size_t strands, struct CqElement **out);

/**
 * Reads an element in the JSON element format.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum CqStatus cq_element_from_json(const char *json, struct CqElement **out);

/**
 * Writes an element in the JSON element format.
 *
 * # Safety
 * `el` must be a live element handle and `out` a valid pointer.
 */
enum CqStatus cq_element_to_json(const struct CqElement *el, char **out);

/**
 * Whether the element is zero.
 *
 * # Safety
 * `el` must be a live element handle and `out` a valid pointer.
 */
enum CqStatus cq_element_is_zero(const struct CqElement *el, bool *out);

/**
 * Releases an element handle.
 *
 * # Safety
 * `el` must be null or a handle from this library that was not yet freed.
 */
void cq_element_free(struct CqElement *el);

/**
 * Builds one of the rewriting systems.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CqStatus cq_system_new(enum CqSystemKind kind, struct CqSystem **out);

/**
 * Normal form of a three-strand element; the result is a new handle.
 *
 * # Safety
 * `sys` and `el` must be live handles and `out` a valid pointer.
 */
enum CqStatus cq_system_normal_form(const struct CqSystem *sys,
                                    const struct CqElement *el,
                                    struct CqElement **out);

/**
 * Releases a rewriting system.
 *
 * # Safety
 * `sys` must be null or a handle from this library that was not yet freed.
 */
void cq_system_free(struct CqSystem *sys);

/**
 * Decides whether a three-strand element lies in the defining ideal of the cubic quotient.
 *
 * # Safety
 * `el` must be a live element handle and `out` a valid pointer.
 */
enum CqStatus cq_ideal_member(const struct CqElement *el, bool *out);

/**
 * Runs a verification suite (or `"all"`) and writes its JSON report to `out`. Returns
 * `VerificationFailed` when some check fails; the report is written in that case too.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `out` a valid pointer.
 */
enum CqStatus cq_verify(const char *suite, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBICQ_H */
