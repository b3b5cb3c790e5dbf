#ifndef TILING_FORGE_H
#define TILING_FORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Search outcomes, numbered like the command-line exit codes.
typedef enum TfOutcome {
  TF_OUTCOME_FOUND = 0,
  TF_OUTCOME_BUDGET_EXCEEDED = 3,
  TF_OUTCOME_EXHAUSTED_NONE = 4,
} TfOutcome;

typedef enum TfStatus {
  TF_STATUS_OK = 0,
  TF_STATUS_NULL_ARGUMENT = 1,
  TF_STATUS_INVALID_ARGUMENT = 2,
  TF_STATUS_PARSE_ERROR = 3,
  TF_STATUS_INTERNAL = 4,
} TfStatus;

// A parsed, not necessarily valid, certificate.
typedef struct TfCertificate TfCertificate;

// A validated tile.
typedef struct TfTile TfTile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Owned by the library;
// valid until the next call that fails.
const char *tf_last_error(void);

// # Safety
// `s` must come from this library and not have been freed.
void tf_string_free(char *s);

// Parses `"a,b,c"` in the exact-number grammar and checks the 120° law.
//
// # Safety
// `sides` must be a nul-terminated string; `out` a valid pointer.
enum TfStatus tf_tile_new(const char *sides, struct TfTile **out);

// # Safety
// `tile` must come from `tf_tile_new` or be null.
void tf_tile_free(struct TfTile *tile);

// Exhaustive search. `*cert` is set only when the outcome is found.
//
// # Safety
// Pointers must be valid; `target` nul-terminated.
enum TfStatus tf_search(const struct TfTile *tile,
                        const char *target,
                        uint64_t node_budget,
                        uint32_t workers,
                        bool allow_mirror,
                        enum TfOutcome *outcome,
                        uint64_t *nodes,
                        struct TfCertificate **cert);

// # Safety
// `json` nul-terminated; `out` valid.
enum TfStatus tf_certificate_from_json(const char *json, struct TfCertificate **out);

// # Safety
// `cert` from this library; `out` valid. Free the string with `tf_string_free`.
enum TfStatus tf_certificate_to_json(const struct TfCertificate *cert, char **out);

// Number of placements, 0 for a null handle.
//
// # Safety
// `cert` from this library or null.
uint64_t tf_certificate_count(const struct TfCertificate *cert);

// Runs the independent checker. `*report` receives a JSON report.
//
// # Safety
// `cert` from this library; `valid` and `report` valid pointers.
enum TfStatus tf_certificate_check(const struct TfCertificate *cert, bool *valid, char **report);

// # Safety
// `cert` from this library; `out` valid.
enum TfStatus tf_certificate_render_svg(const struct TfCertificate *cert, char **out);

// # Safety
// `cert` from this library or null.
void tf_certificate_free(struct TfCertificate *cert);

// Runs the lemma checks named in the comma-separated `ids`, or all of them
// when `ids` is null.
//
// # Safety
// `ids` nul-terminated or null; `all_pass` and `out` valid.
enum TfStatus tf_lemmas_verify_json(const char *ids, bool *all_pass, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TILING_FORGE_H */
