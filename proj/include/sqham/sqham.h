/* C interface to the sqham library. Results are JSON documents returned as
 * heap strings; release them with sqham_string_free. On failure a function
 * returns a nonzero status and sqham_last_error() describes the cause. */
#ifndef SQHAM_H
#define SQHAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SQHAM_API __declspec(dllexport)
#else
#define SQHAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sqham_graph sqham_graph;

enum sqham_status {
  SQHAM_OK = 0,
  SQHAM_ERR_PARSE = 1,        /* malformed edge list */
  SQHAM_ERR_PRECONDITION = 2, /* input violates a documented precondition */
  SQHAM_ERR_ARGUMENT = 3,     /* null pointer or unknown option */
  SQHAM_ERR_INTERNAL = 4      /* unexpected failure, including oversized searches */
};

SQHAM_API const char* sqham_version(void);
/* Message for the last failing call on this thread; empty if none. */
SQHAM_API const char* sqham_last_error(void);
SQHAM_API void sqham_string_free(char* s);

/* Edge-list text: one "u v" pair or a lone vertex per line, '#' comments. */
SQHAM_API int sqham_graph_parse(const char* text, sqham_graph** out);
SQHAM_API void sqham_graph_free(sqham_graph* g);
SQHAM_API size_t sqham_graph_order(const sqham_graph* g);
SQHAM_API size_t sqham_graph_size(const sqham_graph* g);
SQHAM_API int sqham_graph_edgelist(const sqham_graph* g, char** out);
/* DOT text; the consecutive pairs of `seq` (closed when `cyclic`) are drawn bold. */
SQHAM_API int sqham_graph_dot(const sqham_graph* g, const int64_t* seq, size_t len, int cyclic, char** out);
SQHAM_API int sqham_square(const sqham_graph* g, sqham_graph** out);

SQHAM_API int sqham_decompose_json(const sqham_graph* g, char** out);
SQHAM_API int sqham_bc_tree_dot(const sqham_graph* g, char** out);

/* Verdicts: {"input": ..., "verdict": ...}. */
SQHAM_API int sqham_check_ham_json(const sqham_graph* g, char** out);
SQHAM_API int sqham_check_hc_json(const sqham_graph* g, char** out);

/* Constructed witnesses: {"input", "verdict", "witness"}; the witness is null
 * when the verdict is not positive. */
SQHAM_API int sqham_construct_cycle_json(const sqham_graph* g, char** out);
SQHAM_API int sqham_construct_path_json(const sqham_graph* g, int64_t x, int64_t y, char** out);

/* `condition` is "4", "5", "6" or "hc". {"input", "verdict", "counterexample"}. */
SQHAM_API int sqham_counterexample_json(const sqham_graph* g, const char* condition, uint64_t node_budget,
                                        char** out);

/* Exhaustive search in the square. `mode` is "cycle", "path" or "hc"; x and y
 * are used in "path" mode. node_budget 0 means unlimited. */
SQHAM_API int sqham_oracle_json(const sqham_graph* g, const char* mode, int64_t x, int64_t y, uint64_t node_budget,
                                char** out);

#ifdef __cplusplus
}
#endif

#endif
