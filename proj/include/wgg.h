/* wgg - weighted-gain-graph engine: C API.
 *
 * Exact combinatorics on gain graphs with semigroup vertex weights:
 * dichromatic polynomials, forest expansions, Mobius tables, proper
 * coloration counts, and lattice-point counts in orthotopes outside
 * affinographic arrangements.
 *
 * All functions return a wgg_status; results come back through out
 * parameters.  Strings returned through char** are heap-allocated and must
 * be released with wgg_string_free().  Handles are opaque and freed with
 * their matching _free function.  On failure, wgg_last_error() describes
 * the problem (thread-local).
 */

#ifndef WGG_H
#define WGG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wgg_status {
  WGG_OK = 0,
  WGG_ERR_PARSE = 1,    /* input does not parse */
  WGG_ERR_SEMANTIC = 2, /* input parses but violates a contract */
  WGG_ERR_VERIFY = 3    /* a verification suite reported failures */
} wgg_status;

typedef enum wgg_format { WGG_FORMAT_HUMAN = 0, WGG_FORMAT_MACHINE = 1 } wgg_format;

typedef struct wgg_graph wgg_graph;             /* weighted gain graph */
typedef struct wgg_arrangement wgg_arrangement; /* affinographic arrangement */

const char* wgg_last_error(void);
void wgg_string_free(char* s);

/* Graph JSON: {"d":1,"n":2,"edges":[{"type":"link","tail":1,"head":2,
 * "gain":[0]},...],"semigroup":"max-zd","weights":[[2,0],[-1,3]]}.
 * Vertices are 1-based.  Weights are optional for operations that ignore
 * them (mobius).  */
wgg_status wgg_graph_parse(const char* json, wgg_graph** out);
void wgg_graph_free(wgg_graph* g);

/* Re-tags vector weights between "max-zd" and "sum-zd". */
wgg_status wgg_graph_set_semigroup(wgg_graph* g, const char* tag);

/* Arrangement JSON: {"n":2,"d":1,"hyperplanes":[{"i":1,"j":2,"a":[0]}]}. */
wgg_status wgg_arrangement_parse(const char* json, wgg_arrangement** out);
void wgg_arrangement_free(wgg_arrangement* a);

/* Total dichromatic polynomial, computed by both the subset expansion and
 * deletion-contraction and checked equal. */
wgg_status wgg_qpoly(const wgg_graph* g, wgg_format format, char** out);

/* Spanning-forest expansion for an edge ordering (1-based permutation of
 * the edges; NULL for the index order).  The polynomial is in u and y. */
wgg_status wgg_forest(const wgg_graph* g, const int* order, int order_len, wgg_format format,
                      char** out);

/* The semilattice of closed balanced edge sets with Mobius values. */
wgg_status wgg_mobius(const wgg_graph* g, wgg_format format, char** out);

/* Proper colorations under an optional filter (JSON array, one entry per
 * vertex: {"ideal":[...]}, {"set":[[...],...]}, {"cone":{...}} or "all";
 * NULL means no filter).  The Mobius count is cross-checked against the
 * dichromatic-polynomial evaluation before returning. */
wgg_status wgg_chi(const wgg_graph* g, const char* filter_json, long long* out);

/* Lattice points of [0,m_1] x ... x [0,m_n] avoiding the arrangement. */
wgg_status wgg_count_orthotope(const wgg_arrangement* a, const long long* m, int n,
                               long long* out);

/* Points of finite per-coordinate lists avoiding the arrangement; JSON
 * lists like [[0,2,5],[1,2]]. */
wgg_status wgg_count_lists(const wgg_arrangement* a, const char* lists_json, long long* out);

/* Bounded variant: lists may be "all" (every nonnegative integer). */
wgg_status wgg_count_lists_bounded(const wgg_arrangement* a, const char* lists_json,
                                   const long long* m, int n, long long* out);

/* Integer n x d matrices H <= X <= M avoiding every row subspace; bounds
 * are row-major n*d arrays. */
wgg_status wgg_count_matrix(const wgg_arrangement* a, const long long* h, const long long* m,
                            long long* out);

/* Piecewise chromatic evaluation at the row-major n*d bound matrix:
 * reports the value, the polynomiality threshold, whether the bound clears
 * it, and the multilinear chamber polynomial. */
wgg_status wgg_piecewise(const wgg_graph* g, const long long* m, int len, wgg_format format,
                         char** out);

/* Runs the randomized oracle-equivalence suites.  Returns WGG_ERR_VERIFY
 * (with the report still written) when any check fails. */
wgg_status wgg_verify(unsigned long long seed, int max_n, int max_e, int max_d,
                      wgg_format format, char** report);

#ifdef __cplusplus
}
#endif

#endif /* WGG_H */
