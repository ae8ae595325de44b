#ifndef N4LP_H
#define N4LP_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which models [`n4_program_models`] keeps.
typedef enum N4ModelFilter {
  N4_MODEL_FILTER_ALL = 0,
  N4_MODEL_FILTER_MINIMAL = 1,
  N4_MODEL_FILTER_COMPLETE_MINIMAL = 2,
} N4ModelFilter;

// Stable-model procedure for [`n4_program_stable_json`].
typedef enum N4StableMethod {
  // Reduct-based check over all complete candidates.
  N4_STABLE_METHOD_REDUCT = 0,
  // Complete minimal N⁴ models.
  N4_STABLE_METHOD_MINIMAL = 1,
} N4StableMethod;

// Result code of every fallible call.
typedef enum N4Status {
  N4_STATUS_OK = 0,
  N4_STATUS_NULL_ARGUMENT = 1,
  N4_STATUS_INVALID_UTF8 = 2,
  N4_STATUS_PARSE = 3,
  N4_STATUS_INTERPRETATION = 4,
  N4_STATUS_EVAL = 5,
  N4_STATUS_INFINITE_UNIVERSE = 6,
  N4_STATUS_HERBRAND = 7,
  N4_STATUS_SEARCH_SPACE_TOO_LARGE = 8,
  N4_STATUS_MODEL = 9,
  N4_STATUS_OUT_OF_RANGE = 10,
  N4_STATUS_INTERNAL = 11,
} N4Status;

// A set of closed Herbrand models of a program.
typedef struct N4ModelSet N4ModelSet;

// A grounded program.
typedef struct N4Program N4Program;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or NULL. Owned by the library;
// valid until the next failing call on the same thread.
const char *n4_last_error(void);

// Library version as a static NUL-terminated string.
const char *n4_version(void);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void n4_string_free(char *s);

// Parses and grounds a program. `depth < 0` requires a finite Herbrand
// universe; otherwise terms are cut at that nesting depth.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum N4Status n4_program_parse(const char *text, int32_t depth, struct N4Program **out);

// # Safety
// `p` must be NULL or a handle from [`n4_program_parse`] not yet freed.
void n4_program_free(struct N4Program *p);

// Number of ground atoms, or 0 for NULL.
//
// # Safety
// `p` must be NULL or a live program handle.
size_t n4_program_atom_count(const struct N4Program *p);

// Name of ground atom `index` as a new string.
//
// # Safety
// `p` must be a live program handle; `out` must be writable.
enum N4Status n4_program_atom_name(const struct N4Program *p, size_t index, char **out);

// The ground program as text.
//
// # Safety
// `p` must be a live program handle; `out` must be writable.
enum N4Status n4_program_ground_text(const struct N4Program *p, char **out);

// Enumerates closed Herbrand models. `max_atoms == 0` keeps the default limit.
//
// # Safety
// `p` must be a live program handle; `out` must be writable.
enum N4Status n4_program_models(const struct N4Program *p,
                                enum N4ModelFilter filter,
                                size_t max_atoms,
                                struct N4ModelSet **out);

// # Safety
// `m` must be NULL or a handle from [`n4_program_models`] not yet freed.
void n4_model_set_free(struct N4ModelSet *m);

// Number of models, or 0 for NULL.
//
// # Safety
// `m` must be NULL or a live model-set handle.
size_t n4_model_set_len(const struct N4ModelSet *m);

// State of `atom` in model `index`: 0 neither `A` nor `¬²A`, 1 only `¬²A`,
// 2 both.
//
// # Safety
// `m` must be a live model-set handle; `state` must be writable.
enum N4Status n4_model_set_state(const struct N4ModelSet *m,
                                 size_t index,
                                 size_t atom,
                                 uint8_t *state);

// The model set in the CLI's JSON schema.
//
// # Safety
// `m` must be a live model-set handle; `out` must be writable.
enum N4Status n4_model_set_json(const struct N4ModelSet *m, char **out);

// Stable models as a JSON array of atom-name arrays.
//
// # Safety
// `p` must be a live program handle; `out` must be writable.
enum N4Status n4_program_stable_json(const struct N4Program *p,
                                     enum N4StableMethod method,
                                     size_t max_atoms,
                                     char **out);

// Evaluates a formula in an interpretation given as JSON. With `closed`, or
// when the formula has free variables, tests truth under every assignment.
//
// # Safety
// `formula` and `interpretation_json` must be NUL-terminated strings;
// `value` must be writable.
enum N4Status n4_eval(const char *formula,
                      const char *interpretation_json,
                      bool closed,
                      bool *value);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* N4LP_H */
