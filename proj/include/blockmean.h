/* C interface to the blockmean library.
 *
 * Every function returns a bm_status. On failure the message is available from
 * bm_last_error() on the same thread until the next call. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * bm_free_string. Handles are released with their matching *_free function.
 */
#ifndef BLOCKMEAN_H
#define BLOCKMEAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(BLOCKMEAN_BUILDING_LIBRARY)
#define BM_API __attribute__((visibility("default")))
#else
#define BM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BM_OK = 0,
  BM_VERDICT_FAILED = 1, /* a checked statement did not hold; the report is still produced */
  BM_INVALID_INPUT = 2,
  BM_PRECONDITION = 3,
  BM_INTERNAL = 4
} bm_status;

typedef enum { BM_FORMAT_TABLE = 0, BM_FORMAT_JSON = 1, BM_FORMAT_CSV = 2 } bm_format;

typedef struct bm_graph bm_graph;
typedef struct bm_ktree bm_ktree;

BM_API const char* bm_version(void);
BM_API const char* bm_last_error(void);
BM_API void bm_free_string(char* s);

/* edges holds 2*m vertex ids. */
BM_API bm_status bm_graph_from_edges(int n, const int* edges, size_t m, bm_graph** out);
/* Edge-list text: "n m" then m lines "u v"; '#' comments. */
BM_API bm_status bm_graph_parse(const char* text, bm_graph** out);
/* name is one of path, complete, cycle, star, broom, caterpillar, spider;
 * params as for the matching constructor (broom takes s,t; caterpillar and
 * spider take one entry per spine vertex or leg). */
BM_API bm_status bm_graph_family(const char* name, const int* params, size_t count, bm_graph** out);
BM_API void bm_graph_free(bm_graph* g);
BM_API int bm_graph_order(const bm_graph* g);
BM_API bm_status bm_graph_to_edge_list(const bm_graph* g, char** out);
BM_API bm_status bm_graph_cert_hex(const bm_graph* g, char** out);
/* Requires a connected graph. */
BM_API bm_status bm_graph_is_block_graph(const bm_graph* g, int* out);
/* Mean CIS order as "num/den". Requires a connected graph. */
BM_API bm_status bm_graph_mean(const bm_graph* g, char** out);

/* Polynomial, N, W, M and per-vertex local means and mu. */
BM_API bm_status bm_compute(const bm_graph* g, bm_format format, char** out);
/* Steps of the mean-decreasing descent from a block graph to the path. */
BM_API bm_status bm_descent(const bm_graph* g, bm_format format, char** out);

typedef struct {
  int max_n;
  const char* statement; /* NULL or "" for all statements */
  int workers;
  bm_format format;
} bm_verify_options;

/* Sweep over every connected block graph of order 1..max_n. */
BM_API bm_status bm_verify(const bm_verify_options* options, char** out);

typedef struct {
  const char* family; /* "block" or "connected" */
  int n_min, n_max;
  int workers;
  bm_format format;
} bm_search_options;

/* One extremal scan per order. BM_VERDICT_FAILED if any minimum or maximum
 * check fails. */
BM_API bm_status bm_search(const bm_search_options* options, char** out);

typedef struct {
  const char* kind; /* "vertex", "edge" or "stretch" */
  const bm_graph* host;
  int u; /* anchor vertex of the host */
  int v; /* second anchor, edge family only */
  int n;
  bm_format format;
} bm_family_options;

BM_API bm_status bm_family(const bm_family_options* options, char** out);

BM_API bm_status bm_ktree_from_graph(const bm_graph* g, int k, bm_ktree** out);
BM_API bm_status bm_ktree_random(int k, int n, uint64_t seed, bm_ktree** out);
BM_API void bm_ktree_free(bm_ktree* t);
BM_API int bm_ktree_order(const bm_ktree* t);
/* Dual block graph and mean sub-k-tree order, with the enumeration oracle
 * when the order allows. BM_VERDICT_FAILED if the two disagree. */
BM_API bm_status bm_ktree_report(const bm_ktree* t, bm_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
