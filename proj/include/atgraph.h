/* atgraph: Alon-Tarsi orientation toolkit for small graphs.
 *
 * C API over the C++ core.  All functions return an atg_status; results are
 * passed back through out-parameters.  Strings returned through char** are
 * heap-allocated and must be released with atg_str_free.  Graph handles are
 * opaque and must be released with atg_graph_free.
 *
 * Thread safety: handles are immutable after creation and may be shared
 * across threads; atg_last_error is thread-local.
 */

#ifndef ATGRAPH_H
#define ATGRAPH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct atg_graph atg_graph;

typedef enum atg_status {
    ATG_OK = 0,
    ATG_ERR_PARSE = 1,    /* malformed input text */
    ATG_ERR_INVALID = 2,  /* argument violates a precondition */
    ATG_ERR_GUARD = 3,    /* size guard exceeded */
    ATG_ERR_CLAIM = 4,    /* a certificate failed to prove its claim */
    ATG_ERR_INTERNAL = 5
} atg_status;

/* Human-readable detail for the most recent failure on this thread. */
const char* atg_last_error(void);

void atg_str_free(char* s);

/* ---- graphs ---- */

/* Parses one line of graph6 text. */
atg_status atg_graph_from_g6(const char* text, atg_graph** out);
void atg_graph_free(atg_graph* g);
int atg_graph_vertex_count(const atg_graph* g);
int atg_graph_edge_count(const atg_graph* g);
atg_status atg_graph_to_g6(const atg_graph* g, char** out);
/* Canonical form: equal strings iff isomorphic (n <= 10). */
atg_status atg_graph_canonical_g6(const atg_graph* g, char** out);

/* ---- classification and oracles ----
 *
 * Labels select the marked vertices: pass x >= 0 and y < 0 for h_x, both
 * >= 0 for h_{x,y}.  JSON results follow the schemas documented in the
 * project README.
 */

#define ATG_CLASSIFY_CERTIFY 1 /* attach a constructive certificate */
#define ATG_CLASSIFY_ORACLE 2  /* confirm the verdict by brute force */

/* Theorem-based classification of (G, h_x); JSON verdict:
 * {"graph6","x","at","case","witness",...}. */
atg_status atg_classify(const atg_graph* g, int x, int flags, char** json_out);

/* Brute-force AT decision for (G, h) with h encoded by marked vertices.
 * JSON: {"at": bool, "certificate": {...}?}. */
atg_status atg_pair_at(const atg_graph* g, int x, int y, char** json_out);

/* Exhaustive choosability / paintability for (G, h). */
atg_status atg_pair_choosable(const atg_graph* g, int x, int y, char** json_out);
atg_status atg_pair_paintable(const atg_graph* g, int x, int y, char** json_out);

/* ---- sweeps (the verification harness) ----
 *
 * scope: degree_at | main_lemma | thm_1connected | hx_equivalence |
 * lemma_suite.  The report JSON lands in *json_out even when mismatches
 * were found; *ok_out is 1 iff the mismatch list is empty.
 */
atg_status atg_verify_sweep(const char* scope, int n_max, int jobs,
                            const char* checkpoint_path_or_null, char** json_out,
                            int* ok_out);

/* mode: at | choosable | paintable. */
atg_status atg_search_two_marked(const char* mode, int n_max, int two_connected,
                                 int unstretched, int jobs,
                                 const char* checkpoint_path_or_null,
                                 char** json_out);

/* ---- certificates ---- */

/* Re-checks an orientation or bad-list certificate from scratch.
 * *ok_out is 1 iff the certificate proves its claim; the diagnosis JSON is
 * always returned. */
atg_status atg_verify_certificate(const char* cert_json, char** json_out,
                                  int* ok_out);
atg_status atg_verify_lists(const char* cert_json, char** json_out, int* ok_out);

#ifdef __cplusplus
}
#endif

#endif /* ATGRAPH_H */
