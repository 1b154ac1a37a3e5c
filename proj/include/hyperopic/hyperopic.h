#ifndef HYPEROPIC_HYPEROPIC_H
#define HYPEROPIC_HYPEROPIC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HYP_API __attribute__((visibility("default")))
#else
#define HYP_API
#endif

typedef enum hyp_status {
  HYP_OK = 0,
  HYP_ERR_INVALID_ARGUMENT = 1,
  HYP_ERR_PARSE = 2,
  HYP_ERR_PRECONDITION = 3,
  HYP_ERR_LIMIT = 4, /* state or node cap reached; result undecided */
  HYP_ERR_IO = 5,
  HYP_ERR_INTERNAL = 6
} hyp_status;

typedef struct hyp_graph hyp_graph;

/* Message for the last failing call on this thread; never NULL. */
HYP_API const char* hyp_last_error(void);

/* Frees any string returned through a char** out parameter. */
HYP_API void hyp_string_free(char* s);

/* Graphs. Vertices are 0..n-1. */
HYP_API hyp_status hyp_graph_from_graph6(const char* text, hyp_graph** out);
/* One "u v" pair per line; "#" comments; optional "n <count>" line. */
HYP_API hyp_status hyp_graph_from_edge_list(const char* text, hyp_graph** out);
/* family: path, cycle, complete, complete_bipartite, caterpillar, spider,
   t_hat, g_k, t_family, tree_diam10, subdivision. base is used by
   subdivision only; eccentric_attach selects the alternate t_family mode. */
HYP_API hyp_status hyp_graph_generate(const char* family, const int* params, size_t num_params,
                                      const hyp_graph* base, int eccentric_attach, hyp_graph** out);
HYP_API void hyp_graph_free(hyp_graph* g);
HYP_API int hyp_graph_order(const hyp_graph* g);
HYP_API int hyp_graph_size(const hyp_graph* g);
HYP_API hyp_status hyp_graph_to_graph6(const hyp_graph* g, char** out);
HYP_API hyp_status hyp_graph_to_edge_list(const hyp_graph* g, char** out);
/* {"n","m","diameter","radius","matching_number","caterpillar",...} */
HYP_API hyp_status hyp_graph_stats_json(const hyp_graph* g, char** out);

/* rule: "hyperopic" (uses k), "zero" or "classic". max_cops <= 0 picks a
   bound that always suffices. jobs <= 0 uses every core. cache_path may be
   NULL. On HYP_OK or HYP_ERR_LIMIT, *out_json holds the record, which also
   carries "cache_hit" and "warnings". */
HYP_API hyp_status hyp_copnum_json(const hyp_graph* g, const char* rule, int k, int max_cops, int jobs,
                                   const char* cache_path, char** out_json);

/* policy: matching, tree2, pendant, stationary, neardiam, outerplanar.
   k parametrises pendant, stationary and neardiam. HYP_ERR_LIMIT on a
   verifier timeout, with *out_json set. */
HYP_API hyp_status hyp_verify_json(const hyp_graph* g, const char* policy, const char* rule, int k,
                                   char** out_json);

typedef void (*hyp_line_fn)(const char* json_line, void* user);

/* Streams one JSON line per instance through on_line, in a fixed order, then
   stores the summary in *summary_json. n_max <= 0 uses the claim default. */
HYP_API hyp_status hyp_audit(const char* claim, int n_max, int jobs, const char* cache_path,
                             hyp_line_fn on_line, void* user, char** summary_json);

/* Newline-separated audit claim ids. */
HYP_API hyp_status hyp_audit_claims(char** out);

#ifdef __cplusplus
}
#endif

#endif
