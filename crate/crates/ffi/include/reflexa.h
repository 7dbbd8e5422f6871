#ifndef REFLEXA_H
#define REFLEXA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

// Result of every fallible call. Zero is success.
typedef enum ReflexaStatus {
  REFLEXA_STATUS_OK = 0,
  REFLEXA_STATUS_NULL_POINTER = 1,
  REFLEXA_STATUS_INVALID_UTF8 = 2,
  // Malformed ring, module or polynomial input.
  REFLEXA_STATUS_INVALID_INPUT = 3,
  // Modules over different algebras, or mismatched dimensions.
  REFLEXA_STATUS_MISMATCH = 4,
  REFLEXA_STATUS_BUDGET_EXCEEDED = 5,
  // Certified verdicts contradicted each other.
  REFLEXA_STATUS_INCONSISTENT = 6,
  // A Rust panic was caught at the boundary.
  REFLEXA_STATUS_INTERNAL = 7,
} ReflexaStatus;

// A ring `k[x…]/I`.
typedef struct ReflexaAlgebra ReflexaAlgebra;

// A finitely generated module over a [`ReflexaAlgebra`].
typedef struct ReflexaModule ReflexaModule;

// Message of the last failure on this thread, or null. Valid until the next
// failing call on the same thread; do not free.
const char *reflexa_last_error(void);

// Library version, static.
const char *reflexa_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` is null or was returned by this library and not yet freed.
void reflexa_string_free(char *s);

// Builds a ring from a name (`lam`, `ex56`, `gor415`, `kxn:N`, `power:M,N`)
// or from JSON `{"field": "Q", "vars": [...], "ideal": [...], "order": "grevlex"}`.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum ReflexaStatus reflexa_algebra_new(const char *text, struct ReflexaAlgebra **out);

// # Safety
// `alg` is null or a live handle; it is invalid afterwards.
void reflexa_algebra_free(struct ReflexaAlgebra *alg);

// `k`-dimension of the ring.
//
// # Safety
// `alg` is a live handle; `out` is writable.
enum ReflexaStatus reflexa_algebra_length(const struct ReflexaAlgebra *alg, size_t *out);

// Invariants, certificate and standard monomials as JSON.
//
// # Safety
// `alg` is a live handle; `out` is writable.
enum ReflexaStatus reflexa_algebra_report_json(const struct ReflexaAlgebra *alg, char **out);

// Builds a module over `alg` from `k`, `m`, `R`, `R:n`, `omega`, or a JSON
// module description such as
// `{"builder": "presentation", "rows": 1, "matrix": [["x", "y"]]}`.
//
// # Safety
// `alg` is a live handle; `text` is a NUL-terminated string; `out` is writable.
enum ReflexaStatus reflexa_module_new(const struct ReflexaAlgebra *alg,
                                      const char *text,
                                      struct ReflexaModule **out);

// # Safety
// `m` is null or a live handle; it is invalid afterwards.
void reflexa_module_free(struct ReflexaModule *m);

// Length and minimal number of generators.
//
// # Safety
// `m` is a live handle; `length` and `mu` are writable.
enum ReflexaStatus reflexa_module_size(const struct ReflexaModule *m, size_t *length, size_t *mu);

// `Hom_R(M, R)` as a new module handle.
//
// # Safety
// `m` is a live handle; `out` is writable.
enum ReflexaStatus reflexa_module_dual(const struct ReflexaModule *m, struct ReflexaModule **out);

// Whether the natural map into the bidual is injective and surjective.
//
// # Safety
// `m` is a live handle; `torsionless` and `reflexive` are writable.
enum ReflexaStatus reflexa_module_reflexivity(const struct ReflexaModule *m,
                                              bool *torsionless,
                                              bool *reflexive);

// Verdicts for every predicate, scanning Ext up to `bound` (at least 2).
//
// # Safety
// `m` is a live handle; `out` is writable.
enum ReflexaStatus reflexa_classify_json(const struct ReflexaModule *m,
                                         size_t bound,
                                         size_t budget,
                                         char **out);

// Betti numbers through `steps` and Ext lengths through `steps - 1`.
// Returns `BudgetExceeded`, with the partial report still written, when the
// budget cut the resolution short.
//
// # Safety
// `m` is a live handle; `out` is writable.
enum ReflexaStatus reflexa_resolve_json(const struct ReflexaModule *m,
                                        size_t steps,
                                        size_t budget,
                                        char **out);

// Lengths of `M, M*, M**, …` through `depth`; `BudgetExceeded` as for
// [`reflexa_resolve_json`].
//
// # Safety
// `m` is a live handle; `out` is writable.
enum ReflexaStatus reflexa_tower_json(const struct ReflexaModule *m,
                                      size_t depth,
                                      size_t budget,
                                      char **out);

#endif  /* REFLEXA_H */
