/* flow3: mod-3 orientations, Z3 group connectivity, and the gadget
 * constructions behind them, as a C library over opaque handles.
 *
 * Conventions
 *   - Vertices are identified by uint32 ids; arrays indexed "by vertex" use
 *     the position of the vertex in the graph's vertex order (ascending ids).
 *   - An orientation is an int8 array indexed by edge id: 0 directs an edge
 *     from its first stored endpoint to its second, 1 the other way, and -1
 *     marks an undecided edge in partial orientations.
 *   - A boundary is a uint8 array of values in {0,1,2} by vertex position.
 *   - Functions return F3_OK or an error code; f3_last_error() describes the
 *     most recent failure on the calling thread. Out-parameters are only
 *     written on F3_OK.
 *   - Searches that can legitimately come up empty (an orientation solver, a
 *     splitting search) report through an int* found flag instead of an
 *     error.
 *   - Cap arguments bound the exhaustive scans; 0 picks the built-in default.
 */

#ifndef FLOW3_H
#define FLOW3_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum f3_status {
  F3_OK = 0,
  F3_ERR_INVALID = 1,       /* unknown ids, malformed values */
  F3_ERR_PRECONDITION = 2,  /* operation preconditions not met */
  F3_ERR_PARSE = 3,         /* text input rejected */
  F3_ERR_BUDGET = 4,        /* an exhaustive scan above its cap */
  F3_ERR_INTERNAL = 5,      /* a theory-guaranteed structure is missing */
  F3_ERR_IO = 6
} f3_status;

#define F3_EDGE_DELETED UINT32_MAX

const char* f3_status_name(f3_status status);
/* message for the last failing call on this thread; empty if none */
const char* f3_last_error(void);

typedef struct f3_graph f3_graph;
typedef struct f3_cuts f3_cuts;
typedef struct f3_verdict f3_verdict;
typedef struct f3_graphlist f3_graphlist;
typedef struct f3_hbuild f3_hbuild;
typedef struct f3_zbuild f3_zbuild;
typedef struct f3_fourcut f3_fourcut;
typedef struct f3_apex f3_apex;
typedef struct f3_hypotheses f3_hypotheses;
typedef struct f3_embedding f3_embedding;
typedef struct f3_dual f3_dual;

/* ---- graphs ---- */

/* endpoints holds 2*edge_count vertex ids below vertex_count */
f3_status f3_graph_create(uint32_t vertex_count, const uint32_t* endpoints,
                          size_t edge_count, f3_graph** out);
f3_status f3_graph_read_file(const char* path, f3_graph** out);
f3_status f3_graph_read_string(const char* text, f3_graph** out);
f3_status f3_graph_write_file(const f3_graph* g, const char* path);
f3_status f3_graph_write_string(const f3_graph* g, char** out);
void f3_string_free(char* s);
void f3_graph_free(f3_graph* g);

size_t f3_graph_vertex_count(const f3_graph* g);
size_t f3_graph_edge_count(const f3_graph* g);
uint32_t f3_graph_vertex_at(const f3_graph* g, size_t position);
f3_status f3_graph_edge_endpoints(const f3_graph* g, uint32_t edge, uint32_t* u, uint32_t* v);
f3_status f3_graph_degree(const f3_graph* g, uint32_t v, size_t* out);
int f3_graph_connected(const f3_graph* g);

/* edge_map (edge_count entries) takes new ids or F3_EDGE_DELETED; vertex_map
 * (vertex_count entries, by position) takes the surviving vertex id */
f3_status f3_graph_contract(const f3_graph* g, const uint32_t* set, size_t set_size,
                            f3_graph** out, uint32_t* edge_map, uint32_t* vertex_map);
f3_status f3_graph_delete_vertex(const f3_graph* g, uint32_t x, f3_graph** out);

/* ---- file formats beyond graphs ---- */

f3_status f3_boundary_read_file(const f3_graph* g, const char* path, uint8_t* beta);
f3_status f3_preorient_read_file(const f3_graph* g, const char* path, int8_t* dirs);

/* ---- cuts ---- */

f3_status f3_edge_connectivity(const f3_graph* g, uint32_t cut_cap, size_t* out);
f3_status f3_essential_edge_connectivity(const f3_graph* g, uint32_t cut_cap, size_t* out);
f3_status f3_enumerate_small_cuts(const f3_graph* g, size_t k, uint32_t cut_cap,
                                  f3_cuts** out);
f3_status f3_critical_sets(const f3_graph* g, size_t k, uint32_t cut_cap, f3_cuts** out);

size_t f3_cuts_count(const f3_cuts* c);
size_t f3_cuts_side_size(const f3_cuts* c, size_t i);
f3_status f3_cuts_side(const f3_cuts* c, size_t i, uint32_t* buf);
size_t f3_cuts_boundary_size(const f3_cuts* c, size_t i);
int f3_cuts_critical(const f3_cuts* c, size_t i);
void f3_cuts_free(f3_cuts* c);

f3_status f3_apex_augment(const f3_graph* g, size_t k, const size_t* multiplicities,
                          size_t count, uint32_t cut_cap, f3_graph** out, uint32_t* apex);
f3_status f3_mader_split(const f3_graph* g, uint32_t z, size_t k, uint32_t cut_cap,
                         int* found, f3_graph** out);

/* ---- orientations ---- */

f3_status f3_deficiency(const f3_graph* g, const int8_t* dirs, uint32_t v, int* out);
f3_status f3_is_beta_orientation(const f3_graph* g, const int8_t* dirs, const uint8_t* beta,
                                 int* out);
/* fixed may be NULL; dirs_out receives edge_count entries when found */
f3_status f3_find_beta_orientation(const f3_graph* g, const uint8_t* beta,
                                   const int8_t* fixed, int* found, int8_t* dirs_out);
f3_status f3_count_beta_orientations(const f3_graph* g, const uint8_t* beta,
                                     uint32_t edge_cap, uint64_t* out);
f3_status f3_minor_edge(const f3_graph* g, const int8_t* dirs, uint32_t x, uint32_t* out);
f3_status f3_is_mod3_orientable(const f3_graph* g, int* out);

/* ---- group connectivity ---- */

f3_status f3_z3_connected(const f3_graph* g, int exhaustive, uint64_t samples, uint64_t seed,
                          uint32_t vertex_cap, unsigned jobs, f3_verdict** out);

int f3_verdict_holds(const f3_verdict* v);
int f3_verdict_has_witness(const f3_verdict* v);
f3_status f3_verdict_witness(const f3_verdict* v, uint8_t* beta);
uint64_t f3_verdict_boundaries_tested(const f3_verdict* v);
uint64_t f3_verdict_solver_calls(const f3_verdict* v);
int f3_verdict_exhaustive(const f3_verdict* v);
uint64_t f3_verdict_samples(const f3_verdict* v);
uint64_t f3_verdict_seed(const f3_verdict* v);
void f3_verdict_free(f3_verdict* v);

/* method: 0 via deletion, 1 direct re-enumeration; the two always agree */
f3_status f3_z3_extendable(const f3_graph* g, uint32_t x, int direct_method,
                           uint32_t vertex_cap, int* out);
f3_status f3_m3_extendable(const f3_graph* g, uint32_t x, int* out);
f3_status f3_z3_reduced(const f3_graph* g, uint32_t vertex_cap, int* out);
f3_status f3_hunt_z3_reduced(unsigned min_degree, unsigned max_vertices, int simple_only,
                             unsigned jobs, f3_graphlist** out);

size_t f3_graphlist_count(const f3_graphlist* l);
const f3_graph* f3_graphlist_get(const f3_graphlist* l, size_t i);
void f3_graphlist_free(f3_graphlist* l);

/* ---- gadget constructions ---- */

f3_status f3_wheel(f3_graph** out);
f3_status f3_wheel_minor_edge_check(int* holds, uint64_t* scanned, uint64_t* compliant);
f3_status f3_wheel_sink_check(int* holds, uint64_t* scanned, uint64_t* compliant);

/* dx decides exactly the five edges at x, balanced mod 3; shifts may be NULL
 * for the unshifted construction */
f3_status f3_mod3_replacement_build(const f3_graph* g, uint32_t x, const int8_t* dx,
                                    const unsigned* shifts, f3_hbuild** out);
const f3_graph* f3_hbuild_graph(const f3_hbuild* h);
f3_status f3_hbuild_write_provenance(const f3_hbuild* h, const char* path);
/* h_dirs orients the replacement graph; g_dirs_out receives the recovered
 * mod 3-orientation of the original graph */
f3_status f3_mod3_replacement_extract(const f3_hbuild* h, const int8_t* h_dirs,
                                      int8_t* g_dirs_out);
void f3_hbuild_free(f3_hbuild* h);

/* beta1 is a boundary of g minus z, by position in that graph */
f3_status f3_z3_replacement_build(const f3_graph* g, uint32_t z, const uint8_t* beta1,
                                  f3_zbuild** out);
const f3_graph* f3_zbuild_graph(const f3_zbuild* zb);
f3_status f3_zbuild_beta_star(const f3_zbuild* zb, uint8_t* out);
f3_status f3_zbuild_beta(const f3_zbuild* zb, uint8_t* out);
f3_status f3_zbuild_preorientation(const f3_zbuild* zb, int8_t* out);
f3_status f3_zbuild_write_provenance(const f3_zbuild* zb, const char* path);
f3_status f3_z3_replacement_extract(const f3_zbuild* zb, const int8_t* h_dirs,
                                    int8_t* g_dirs_out);
void f3_zbuild_free(f3_zbuild* zb);

/* d1 orients the contraction of g by the set (a mod 3-orientation) */
f3_status f3_four_cut_reduce(const f3_graph* g, const uint32_t* set, size_t set_size,
                             const int8_t* d1, f3_fourcut** out);
const f3_graph* f3_fourcut_graph(const f3_fourcut* fc);
uint32_t f3_fourcut_vertex(const f3_fourcut* fc);
f3_status f3_fourcut_preorientation(const f3_fourcut* fc, int8_t* out);
f3_status f3_four_cut_recombine(const f3_fourcut* fc, const int8_t* d3, int8_t* g_dirs_out);
void f3_fourcut_free(f3_fourcut* fc);

f3_status f3_crossing_reduction(const f3_graph* g, uint32_t e1, uint32_t e2,
                                int alt_doubling, f3_graph** out);

/* ---- extension machinery ---- */

f3_status f3_tau(const f3_graph* g, const uint8_t* beta, const uint32_t* set,
                 size_t set_size, int* out);

f3_status f3_extension_check(const f3_graph* g, const uint8_t* beta, uint32_t z,
                             const int8_t* dz, uint32_t cut_cap, f3_hypotheses** out);
int f3_hypotheses_pass(const f3_hypotheses* h);
int f3_hypotheses_order_ok(const f3_hypotheses* h);
int f3_hypotheses_vertex_ok(const f3_hypotheses* h);
int f3_hypotheses_cuts_ok(const f3_hypotheses* h);
size_t f3_hypotheses_degree_z(const f3_hypotheses* h);
int f3_hypotheses_tau_z(const f3_hypotheses* h);
int f3_hypotheses_has_violating_set(const f3_hypotheses* h);
size_t f3_hypotheses_violating_size(const f3_hypotheses* h);
f3_status f3_hypotheses_violating_set(const f3_hypotheses* h, uint32_t* buf);
size_t f3_hypotheses_violating_degree(const f3_hypotheses* h);
int f3_hypotheses_violating_tau(const f3_hypotheses* h);
void f3_hypotheses_free(f3_hypotheses* h);

f3_status f3_extension_extend(const f3_graph* g, const uint8_t* beta, uint32_t z,
                              const int8_t* dz, uint32_t cut_cap, int8_t* dirs_out);

f3_status f3_four_cut_apex_build(const f3_graph* g, const uint8_t* beta, uint32_t cut_cap,
                                 f3_apex** out);
int f3_apex_degenerate(const f3_apex* a);
const f3_graph* f3_apex_graph(const f3_apex* a);
uint32_t f3_apex_vertex(const f3_apex* a);
size_t f3_apex_critical_count(const f3_apex* a);
size_t f3_apex_critical_size(const f3_apex* a, size_t i);
f3_status f3_apex_critical_set(const f3_apex* a, size_t i, uint32_t* buf);
f3_status f3_apex_boundary(const f3_apex* a, uint8_t* out);
f3_status f3_apex_preorientation(const f3_apex* a, int8_t* out);
void f3_apex_free(f3_apex* a);

/* full pipeline: apex, extend, restrict back to g */
f3_status f3_four_cut_apex_solve(const f3_graph* g, const uint8_t* beta, uint32_t cut_cap,
                                 int8_t* dirs_out);

f3_status f3_five_cut_check(const f3_graph* g, int exhaustive, uint64_t samples,
                            uint64_t seed, uint32_t vertex_cap, unsigned jobs,
                            f3_verdict** out);

/* ---- plane embeddings ---- */

f3_status f3_embedding_read_file(const char* path, f3_embedding** out);
const f3_graph* f3_embedding_graph(const f3_embedding* e);
f3_status f3_embedding_face_count(const f3_embedding* e, size_t* out);
f3_status f3_embedding_dual(const f3_embedding* e, f3_dual** out);
void f3_embedding_free(f3_embedding* e);

const f3_graph* f3_dual_graph(const f3_dual* d);
size_t f3_dual_face_count(const f3_dual* d);
f3_status f3_dual_edge_image(const f3_dual* d, uint32_t primal_edge, uint32_t* dual_edge);
void f3_dual_free(f3_dual* d);

/* colors receives vertex_count entries in {0,1,2} when found */
f3_status f3_chromatic3(const f3_graph* g, int* found, uint8_t* colors);
f3_status f3_duality_check(const f3_embedding* e, int* mod3_orientable,
                           int* dual_three_colorable);

/* ---- corpus generation ---- */

f3_status f3_corpus_random(uint64_t seed, size_t count, size_t max_n, size_t max_m,
                           f3_graphlist** out);
size_t f3_curated_count(void);
const char* f3_curated_name(size_t i);
f3_status f3_curated_graph(size_t i, f3_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* FLOW3_H */
