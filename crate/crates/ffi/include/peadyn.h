#ifndef PEADYN_H
#define PEADYN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Nonzero values other than the last two match the exit
 * codes of the command-line tool.
 */
typedef enum PeadynStatus {
  PEADYN_STATUS_OK = 0,
  PEADYN_STATUS_INVALID_INPUT = 2,
  PEADYN_STATUS_ORBIT_LIMIT_EXCEEDED = 3,
  PEADYN_STATUS_BUDGET_EXCEEDED = 4,
  PEADYN_STATUS_NULL_POINTER = 5,
  PEADYN_STATUS_PANIC = 6,
} PeadynStatus;

typedef struct PeadynCycleList PeadynCycleList;

typedef struct PeadynOrbit PeadynOrbit;

typedef struct PeadynWord PeadynWord;

typedef struct PeadynWordList PeadynWordList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next `peadyn_*` call on the same thread.
 */
const char *peadyn_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a pointer returned by `peadyn_word_to_string` or
 * `peadyn_length_bound`, not yet freed.
 */
void peadyn_string_free(char *s);

/**
 * Parses a NUL-terminated `0-9a-z` word in base `base`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer to write to.
 */
enum PeadynStatus peadyn_word_parse(uint32_t base, const char *text, struct PeadynWord **out);

/**
 * # Safety
 * `word` must be NULL or a handle from this library, not yet freed.
 */
void peadyn_word_free(struct PeadynWord *word);

/**
 * Number of letters; 0 for NULL.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
size_t peadyn_word_len(const struct PeadynWord *word);

/**
 * Base of the word; 0 for NULL.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
uint32_t peadyn_word_base(const struct PeadynWord *word);

/**
 * Text form of the word, to be released with `peadyn_string_free`.
 * NULL for a NULL handle.
 *
 * # Safety
 * `word` must be NULL or a live handle.
 */
char *peadyn_word_to_string(const struct PeadynWord *word);

/**
 * One application of the step map.
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer to write to.
 */
enum PeadynStatus peadyn_word_step(const struct PeadynWord *word, struct PeadynWord **out);

/**
 * # Safety
 * `word` must be NULL or a live handle.
 */
bool peadyn_word_is_fixed_point(const struct PeadynWord *word);

/**
 * Follows `word` until a word repeats, taking at most `max_steps` steps.
 *
 * # Safety
 * `word` must be a live handle and `out` a valid pointer to write to.
 */
enum PeadynStatus peadyn_orbit(const struct PeadynWord *word,
                               size_t max_steps,
                               struct PeadynOrbit **out);

/**
 * # Safety
 * `o` must be NULL or a live orbit handle.
 */
size_t peadyn_orbit_transient(const struct PeadynOrbit *o);

/**
 * # Safety
 * `o` must be NULL or a live orbit handle.
 */
size_t peadyn_orbit_period(const struct PeadynOrbit *o);

/**
 * # Safety
 * `o` must be NULL or a live orbit handle.
 */
size_t peadyn_orbit_steps_taken(const struct PeadynOrbit *o);

/**
 * Borrowed cycle word `index`, owned by the orbit; NULL when out of range.
 *
 * # Safety
 * `o` must be NULL or a live orbit handle.
 */
const struct PeadynWord *peadyn_orbit_cycle_word(const struct PeadynOrbit *o, size_t index);

/**
 * # Safety
 * `o` must be NULL or a live orbit handle.
 */
void peadyn_orbit_free(struct PeadynOrbit *o);

/**
 * All fixed points of `base`, sorted by length then lexicographically.
 *
 * # Safety
 * `out` must be a valid pointer to write to.
 */
enum PeadynStatus peadyn_fixed_points(uint32_t base, struct PeadynWordList **out);

/**
 * # Safety
 * `list` must be NULL or a live list handle.
 */
size_t peadyn_word_list_len(const struct PeadynWordList *list);

/**
 * Borrowed word `index`, owned by the list; NULL when out of range.
 *
 * # Safety
 * `list` must be NULL or a live list handle.
 */
const struct PeadynWord *peadyn_word_list_get(const struct PeadynWordList *list, size_t index);

/**
 * # Safety
 * `list` must be NULL or a live list handle.
 */
void peadyn_word_list_free(struct PeadynWordList *list);

/**
 * All cycles of period two or more whose words fit in `length_limit`
 * letters; 0 selects the eventual length bound of the base.
 *
 * # Safety
 * `out` must be a valid pointer to write to.
 */
enum PeadynStatus peadyn_cycles(uint32_t base, size_t length_limit, struct PeadynCycleList **out);

/**
 * # Safety
 * `list` must be NULL or a live cycle list handle.
 */
size_t peadyn_cycle_list_len(const struct PeadynCycleList *list);

/**
 * Period of cycle `index`; 0 when out of range.
 *
 * # Safety
 * `list` must be NULL or a live cycle list handle.
 */
size_t peadyn_cycle_list_period(const struct PeadynCycleList *list, size_t index);

/**
 * Borrowed word `position` of cycle `index`; NULL when out of range.
 *
 * # Safety
 * `list` must be NULL or a live cycle list handle.
 */
const struct PeadynWord *peadyn_cycle_list_word(const struct PeadynCycleList *list,
                                                size_t index,
                                                size_t position);

/**
 * # Safety
 * `list` must be NULL or a live cycle list handle.
 */
void peadyn_cycle_list_free(struct PeadynCycleList *list);

/**
 * Eventual length bound of `base`, and the number of words at or below
 * it as a decimal string (it overflows 64 bits for larger bases). Free
 * the string with `peadyn_string_free`.
 *
 * # Safety
 * Both out-pointers must be valid to write to.
 */
enum PeadynStatus peadyn_length_bound(uint32_t base,
                                      size_t *out_length_bound,
                                      char **out_word_count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PEADYN_H */
