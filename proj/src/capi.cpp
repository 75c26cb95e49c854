#include "flow3/flow3.h"

#include <cstring>
#include <fstream>
#include <optional>
#include <string>

#include "flow3/corpus.hpp"
#include "flow3/cuts.hpp"
#include "flow3/extension.hpp"
#include "flow3/gadgets.hpp"
#include "flow3/groupconn.hpp"
#include "flow3/io.hpp"
#include "flow3/planar.hpp"

using namespace flow3;

struct f3_graph {
  Multigraph g;
};
struct f3_cuts {
  std::vector<CutReport> reports;
};
struct f3_verdict {
  Verdict v;
};
struct f3_graphlist {
  std::vector<f3_graph> graphs;
};
struct f3_hbuild {
  f3_graph h;
  HProvenance prov;
  Multigraph g;
  Vertex x;
  PartialOrientation dx;
};
struct f3_zbuild {
  f3_graph h;
  Z3Replacement rep;
  Multigraph g;
  Vertex z;
};
struct f3_fourcut {
  f3_graph g3;
  FourCutReduction red;
  Multigraph g;
  VertexSet a;
  Orientation d1;
};
struct f3_apex {
  FourCutApex apex;
  f3_graph graph;
};
struct f3_hypotheses {
  HypothesisReport report;
};
struct f3_embedding {
  Embedding emb;
  f3_graph graph;
};
struct f3_dual {
  DualCorrespondence d;
  f3_graph graph;
};

namespace {

thread_local std::string last_error;

f3_status status_of(const Error& e) {
  last_error = e.what();
  switch (e.kind()) {
    case ErrorKind::invalid_argument:
      return F3_ERR_INVALID;
    case ErrorKind::precondition:
      return F3_ERR_PRECONDITION;
    case ErrorKind::parse:
      return F3_ERR_PARSE;
    case ErrorKind::budget:
      return F3_ERR_BUDGET;
    case ErrorKind::internal:
      return F3_ERR_INTERNAL;
    case ErrorKind::io:
      return F3_ERR_IO;
  }
  return F3_ERR_INTERNAL;
}

template <typename Fn>
f3_status guarded(Fn&& fn) {
  try {
    fn();
    return F3_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    last_error = e.what();
    return F3_ERR_INTERNAL;
  }
}

Budget budget_with_cut_cap(uint32_t cap) {
  Budget b;
  if (cap) b.cut_vertex_cap = cap;
  return b;
}

Budget budget_with_z3_cap(uint32_t cap) {
  Budget b;
  if (cap) b.z3_vertex_cap = cap;
  return b;
}

Orientation orientation_from(const Multigraph& g, const int8_t* dirs) {
  Orientation d;
  d.dir.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (dirs[e] != 0 && dirs[e] != 1)
      fail(ErrorKind::invalid_argument, "orientation entries must be 0 or 1");
    d.dir.push_back(static_cast<Dir>(dirs[e]));
  }
  return d;
}

PartialOrientation partial_from(const Multigraph& g, const int8_t* dirs) {
  PartialOrientation p = PartialOrientation::all_undecided(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (dirs[e] > 1 || dirs[e] < -1)
      fail(ErrorKind::invalid_argument, "partial orientation entries must be -1, 0 or 1");
    p.dir[e] = dirs[e];
  }
  return p;
}

Boundary boundary_from(const Multigraph& g, const uint8_t* beta) {
  Boundary b;
  b.value.assign(beta, beta + g.vertex_count());
  return b;
}

void copy_dirs(const Orientation& d, int8_t* out) {
  for (std::size_t e = 0; e < d.dir.size(); ++e) out[e] = static_cast<int8_t>(d.dir[e]);
}

void copy_partial(const PartialOrientation& p, int8_t* out) {
  std::memcpy(out, p.dir.data(), p.dir.size());
}

VertexSet set_from(const uint32_t* set, size_t n) {
  VertexSet s(set, set + n);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void write_provenance(const HProvenance& prov, const char* path) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::io, std::string("cannot open ") + path + " for writing");
  f << "hub " << prov.hub << "\n";
  f << "base-vertices";
  for (Vertex v : prov.base_vertices) f << " " << v;
  f << "\nbase-edges";
  for (EdgeId e : prov.base_edges) f << " " << e;
  f << "\nhub-edges";
  for (EdgeId e : prov.hub_edge) f << " " << e;
  f << "\n";
  for (int c = 0; c < 6; ++c) {
    f << "copy " << c;
    for (Vertex v : prov.copy_vertex[c]) f << " " << v;
    f << "\ncopy-edges " << c;
    for (EdgeId e : prov.copy_edge[c]) f << " " << e;
    f << "\n";
  }
  for (const auto& we : prov.wheel_edges)
    f << "wheel-edge " << int(we.wu) << " " << int(we.wv) << " " << we.h_edge << " "
      << int(we.label_u) << " " << int(we.label_v) << "\n";
}

}  // namespace

extern "C" {

const char* f3_status_name(f3_status status) {
  switch (status) {
    case F3_OK: return "ok";
    case F3_ERR_INVALID: return "invalid-argument";
    case F3_ERR_PRECONDITION: return "precondition";
    case F3_ERR_PARSE: return "parse";
    case F3_ERR_BUDGET: return "budget";
    case F3_ERR_INTERNAL: return "internal";
    case F3_ERR_IO: return "io";
  }
  return "unknown";
}

const char* f3_last_error(void) { return last_error.c_str(); }

/* ---- graphs ---- */

f3_status f3_graph_create(uint32_t vertex_count, const uint32_t* endpoints,
                          size_t edge_count, f3_graph** out) {
  return guarded([&] {
    std::vector<Edge> es;
    es.reserve(edge_count);
    for (size_t e = 0; e < edge_count; ++e) {
      uint32_t u = endpoints[2 * e], v = endpoints[2 * e + 1];
      if (u >= vertex_count || v >= vertex_count)
        fail(ErrorKind::invalid_argument, "endpoint out of range");
      es.push_back({u, v});
    }
    *out = new f3_graph{Multigraph::with_vertex_count(vertex_count, std::move(es))};
  });
}

f3_status f3_graph_read_file(const char* path, f3_graph** out) {
  return guarded([&] { *out = new f3_graph{read_graph_file(path)}; });
}

f3_status f3_graph_read_string(const char* text, f3_graph** out) {
  return guarded([&] { *out = new f3_graph{read_graph_string(text)}; });
}

f3_status f3_graph_write_file(const f3_graph* g, const char* path) {
  return guarded([&] { write_graph_file(path, g->g); });
}

f3_status f3_graph_write_string(const f3_graph* g, char** out) {
  return guarded([&] {
    std::string s = write_graph_string(g->g);
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void f3_string_free(char* s) { delete[] s; }
void f3_graph_free(f3_graph* g) { delete g; }

size_t f3_graph_vertex_count(const f3_graph* g) { return g->g.vertex_count(); }
size_t f3_graph_edge_count(const f3_graph* g) { return g->g.edge_count(); }
uint32_t f3_graph_vertex_at(const f3_graph* g, size_t position) {
  return g->g.vertices().at(position);
}

f3_status f3_graph_edge_endpoints(const f3_graph* g, uint32_t edge, uint32_t* u, uint32_t* v) {
  return guarded([&] {
    Edge e = g->g.edge(edge);
    *u = e.a;
    *v = e.b;
  });
}

f3_status f3_graph_degree(const f3_graph* g, uint32_t v, size_t* out) {
  return guarded([&] { *out = g->g.degree(v); });
}

int f3_graph_connected(const f3_graph* g) { return g->g.connected() ? 1 : 0; }

f3_status f3_graph_contract(const f3_graph* g, const uint32_t* set, size_t set_size,
                            f3_graph** out, uint32_t* edge_map, uint32_t* vertex_map) {
  return guarded([&] {
    auto [q, map] = contract(g->g, set_from(set, set_size));
    if (edge_map)
      for (std::size_t e = 0; e < map.edge_to_new.size(); ++e) edge_map[e] = map.edge_to_new[e];
    if (vertex_map)
      for (std::size_t i = 0; i < map.vertex_to_new.size(); ++i)
        vertex_map[i] = map.vertex_to_new[i].second;
    *out = new f3_graph{std::move(q)};
  });
}

f3_status f3_graph_delete_vertex(const f3_graph* g, uint32_t x, f3_graph** out) {
  return guarded([&] { *out = new f3_graph{delete_vertex(g->g, x)}; });
}

/* ---- file formats ---- */

f3_status f3_boundary_read_file(const f3_graph* g, const char* path, uint8_t* beta) {
  return guarded([&] {
    Boundary b = read_boundary_file(path, g->g);
    std::memcpy(beta, b.value.data(), b.value.size());
  });
}

f3_status f3_preorient_read_file(const f3_graph* g, const char* path, int8_t* dirs) {
  return guarded([&] {
    PartialOrientation p = read_preorientation_file(path, g->g);
    copy_partial(p, dirs);
  });
}

/* ---- cuts ---- */

f3_status f3_edge_connectivity(const f3_graph* g, uint32_t cut_cap, size_t* out) {
  return guarded([&] { *out = edge_connectivity(g->g, budget_with_cut_cap(cut_cap)); });
}

f3_status f3_essential_edge_connectivity(const f3_graph* g, uint32_t cut_cap, size_t* out) {
  return guarded(
      [&] { *out = essential_edge_connectivity(g->g, budget_with_cut_cap(cut_cap)); });
}

f3_status f3_enumerate_small_cuts(const f3_graph* g, size_t k, uint32_t cut_cap,
                                  f3_cuts** out) {
  return guarded([&] {
    *out = new f3_cuts{enumerate_small_cuts(g->g, k, budget_with_cut_cap(cut_cap))};
  });
}

f3_status f3_critical_sets(const f3_graph* g, size_t k, uint32_t cut_cap, f3_cuts** out) {
  return guarded([&] {
    auto sets = critical_sets(g->g, k, budget_with_cut_cap(cut_cap));
    auto reports = std::vector<CutReport>();
    for (auto& s : sets) {
      std::size_t d = cut_size(g->g, s);
      reports.push_back({std::move(s), d, true});
    }
    *out = new f3_cuts{std::move(reports)};
  });
}

size_t f3_cuts_count(const f3_cuts* c) { return c->reports.size(); }
size_t f3_cuts_side_size(const f3_cuts* c, size_t i) { return c->reports.at(i).side.size(); }
f3_status f3_cuts_side(const f3_cuts* c, size_t i, uint32_t* buf) {
  return guarded([&] {
    const auto& side = c->reports.at(i).side;
    std::copy(side.begin(), side.end(), buf);
  });
}
size_t f3_cuts_boundary_size(const f3_cuts* c, size_t i) { return c->reports.at(i).size; }
int f3_cuts_critical(const f3_cuts* c, size_t i) { return c->reports.at(i).critical ? 1 : 0; }
void f3_cuts_free(f3_cuts* c) { delete c; }

f3_status f3_apex_augment(const f3_graph* g, size_t k, const size_t* multiplicities,
                          size_t count, uint32_t cut_cap, f3_graph** out, uint32_t* apex) {
  return guarded([&] {
    std::vector<std::size_t> mult(multiplicities, multiplicities + count);
    auto [aug, x] = apex_augment(g->g, k, mult, budget_with_cut_cap(cut_cap));
    if (apex) *apex = x;
    *out = new f3_graph{std::move(aug)};
  });
}

f3_status f3_mader_split(const f3_graph* g, uint32_t z, size_t k, uint32_t cut_cap,
                         int* found, f3_graph** out) {
  return guarded([&] {
    auto got = mader_complete_split(g->g, z, k, budget_with_cut_cap(cut_cap));
    *found = got.has_value() ? 1 : 0;
    if (got) *out = new f3_graph{std::move(*got)};
  });
}

/* ---- orientations ---- */

f3_status f3_deficiency(const f3_graph* g, const int8_t* dirs, uint32_t v, int* out) {
  return guarded([&] { *out = deficiency(g->g, orientation_from(g->g, dirs), v); });
}

f3_status f3_is_beta_orientation(const f3_graph* g, const int8_t* dirs, const uint8_t* beta,
                                 int* out) {
  return guarded([&] {
    *out = is_beta_orientation(g->g, orientation_from(g->g, dirs), boundary_from(g->g, beta))
               ? 1
               : 0;
  });
}

f3_status f3_find_beta_orientation(const f3_graph* g, const uint8_t* beta,
                                   const int8_t* fixed, int* found, int8_t* dirs_out) {
  return guarded([&] {
    PartialOrientation p = fixed ? partial_from(g->g, fixed)
                                 : PartialOrientation::all_undecided(g->g.edge_count());
    auto got = find_beta_orientation(g->g, boundary_from(g->g, beta), p);
    *found = got.has_value() ? 1 : 0;
    if (got) copy_dirs(*got, dirs_out);
  });
}

f3_status f3_count_beta_orientations(const f3_graph* g, const uint8_t* beta,
                                     uint32_t edge_cap, uint64_t* out) {
  return guarded([&] {
    Budget b;
    if (edge_cap) b.oracle_edge_cap = edge_cap;
    *out = count_beta_orientations(g->g, boundary_from(g->g, beta), b);
  });
}

f3_status f3_minor_edge(const f3_graph* g, const int8_t* dirs, uint32_t x, uint32_t* out) {
  return guarded([&] { *out = minor_edge(g->g, orientation_from(g->g, dirs), x); });
}

f3_status f3_is_mod3_orientable(const f3_graph* g, int* out) {
  return guarded([&] { *out = is_mod3_orientable(g->g) ? 1 : 0; });
}

/* ---- group connectivity ---- */

f3_status f3_z3_connected(const f3_graph* g, int exhaustive, uint64_t samples, uint64_t seed,
                          uint32_t vertex_cap, unsigned jobs, f3_verdict** out) {
  return guarded([&] {
    ZMode mode = exhaustive ? ZMode{} : ZMode::sample(samples, seed);
    *out = new f3_verdict{is_z3_connected(g->g, mode, budget_with_z3_cap(vertex_cap),
                                          jobs ? jobs : 1)};
  });
}

int f3_verdict_holds(const f3_verdict* v) { return v->v.holds ? 1 : 0; }
int f3_verdict_has_witness(const f3_verdict* v) { return v->v.witness.has_value() ? 1 : 0; }
f3_status f3_verdict_witness(const f3_verdict* v, uint8_t* beta) {
  return guarded([&] {
    if (!v->v.witness) fail(ErrorKind::invalid_argument, "verdict has no witness");
    std::memcpy(beta, v->v.witness->value.data(), v->v.witness->value.size());
  });
}
uint64_t f3_verdict_boundaries_tested(const f3_verdict* v) {
  return v->v.stats.boundaries_tested;
}
uint64_t f3_verdict_solver_calls(const f3_verdict* v) { return v->v.stats.solver_calls; }
int f3_verdict_exhaustive(const f3_verdict* v) { return v->v.exhaustive ? 1 : 0; }
uint64_t f3_verdict_samples(const f3_verdict* v) { return v->v.samples; }
uint64_t f3_verdict_seed(const f3_verdict* v) { return v->v.seed; }
void f3_verdict_free(f3_verdict* v) { delete v; }

f3_status f3_z3_extendable(const f3_graph* g, uint32_t x, int direct_method,
                           uint32_t vertex_cap, int* out) {
  return guarded([&] {
    ExtendMethod m = direct_method ? ExtendMethod::direct : ExtendMethod::via_deletion;
    *out = is_z3_extendable_at(g->g, x, m, budget_with_z3_cap(vertex_cap)) ? 1 : 0;
  });
}

f3_status f3_m3_extendable(const f3_graph* g, uint32_t x, int* out) {
  return guarded([&] { *out = is_m3_extendable_at(g->g, x) ? 1 : 0; });
}

f3_status f3_z3_reduced(const f3_graph* g, uint32_t vertex_cap, int* out) {
  return guarded([&] { *out = is_z3_reduced(g->g, budget_with_z3_cap(vertex_cap)) ? 1 : 0; });
}

f3_status f3_hunt_z3_reduced(unsigned min_degree, unsigned max_vertices, int simple_only,
                             unsigned jobs, f3_graphlist** out) {
  return guarded([&] {
    auto got = hunt_z3_reduced(min_degree, max_vertices, simple_only != 0, Budget{},
                               jobs ? jobs : 1);
    auto list = new f3_graphlist{};
    for (auto& g : got) list->graphs.push_back({std::move(g)});
    *out = list;
  });
}

size_t f3_graphlist_count(const f3_graphlist* l) { return l->graphs.size(); }
const f3_graph* f3_graphlist_get(const f3_graphlist* l, size_t i) { return &l->graphs.at(i); }
void f3_graphlist_free(f3_graphlist* l) { delete l; }

/* ---- gadgets ---- */

f3_status f3_wheel(f3_graph** out) {
  return guarded([&] { *out = new f3_graph{doubled_wheel()}; });
}

f3_status f3_wheel_minor_edge_check(int* holds, uint64_t* scanned, uint64_t* compliant) {
  return guarded([&] {
    WheelScan scan;
    *holds = wheel_minor_edge_check(&scan) ? 1 : 0;
    if (scanned) *scanned = scan.scanned;
    if (compliant) *compliant = scan.compliant;
  });
}

f3_status f3_wheel_sink_check(int* holds, uint64_t* scanned, uint64_t* compliant) {
  return guarded([&] {
    WheelScan scan;
    *holds = wheel_sink_check(&scan) ? 1 : 0;
    if (scanned) *scanned = scan.scanned;
    if (compliant) *compliant = scan.compliant;
  });
}

f3_status f3_mod3_replacement_build(const f3_graph* g, uint32_t x, const int8_t* dx,
                                    const unsigned* shifts, f3_hbuild** out) {
  return guarded([&] {
    std::array<unsigned, 6> sh{0, 0, 0, 0, 0, 0};
    if (shifts) std::copy(shifts, shifts + 6, sh.begin());
    PartialOrientation p = partial_from(g->g, dx);
    auto [h, prov] = build_mod3_replacement(g->g, x, p, sh);
    *out = new f3_hbuild{{std::move(h)}, std::move(prov), g->g, x, std::move(p)};
  });
}

const f3_graph* f3_hbuild_graph(const f3_hbuild* h) { return &h->h; }

f3_status f3_hbuild_write_provenance(const f3_hbuild* h, const char* path) {
  return guarded([&] { write_provenance(h->prov, path); });
}

f3_status f3_mod3_replacement_extract(const f3_hbuild* h, const int8_t* h_dirs,
                                      int8_t* g_dirs_out) {
  return guarded([&] {
    Orientation d = orientation_from(h->h.g, h_dirs);
    Orientation got = extract_mod3_orientation(h->h.g, d, h->prov, h->g, h->x, h->dx);
    copy_dirs(got, g_dirs_out);
  });
}

void f3_hbuild_free(f3_hbuild* h) { delete h; }

f3_status f3_z3_replacement_build(const f3_graph* g, uint32_t z, const uint8_t* beta1,
                                  f3_zbuild** out) {
  return guarded([&] {
    Multigraph base = delete_vertex(g->g, z);
    Boundary b1;
    b1.value.assign(beta1, beta1 + base.vertex_count());
    Z3Replacement rep = build_z3_replacement(g->g, z, b1);
    auto zb = new f3_zbuild{{rep.h}, std::move(rep), g->g, z};
    *out = zb;
  });
}

const f3_graph* f3_zbuild_graph(const f3_zbuild* zb) { return &zb->h; }

f3_status f3_zbuild_beta_star(const f3_zbuild* zb, uint8_t* out) {
  return guarded([&] {
    std::memcpy(out, zb->rep.beta_star.value.data(), zb->rep.beta_star.value.size());
  });
}

f3_status f3_zbuild_beta(const f3_zbuild* zb, uint8_t* out) {
  return guarded(
      [&] { std::memcpy(out, zb->rep.beta.value.data(), zb->rep.beta.value.size()); });
}

f3_status f3_zbuild_preorientation(const f3_zbuild* zb, int8_t* out) {
  return guarded([&] { copy_partial(zb->rep.dz, out); });
}

f3_status f3_zbuild_write_provenance(const f3_zbuild* zb, const char* path) {
  return guarded([&] { write_provenance(zb->rep.prov, path); });
}

f3_status f3_z3_replacement_extract(const f3_zbuild* zb, const int8_t* h_dirs,
                                    int8_t* g_dirs_out) {
  return guarded([&] {
    Orientation d = orientation_from(zb->h.g, h_dirs);
    Orientation got =
        extract_beta_orientation(zb->h.g, d, zb->rep.prov, zb->g, zb->z, zb->rep.beta);
    copy_dirs(got, g_dirs_out);
  });
}

void f3_zbuild_free(f3_zbuild* zb) { delete zb; }

f3_status f3_four_cut_reduce(const f3_graph* g, const uint32_t* set, size_t set_size,
                             const int8_t* d1, f3_fourcut** out) {
  return guarded([&] {
    VertexSet a = set_from(set, set_size);
    auto [g1, m1] = contract(g->g, a);
    Orientation o1 = orientation_from(g1, d1);
    FourCutReduction red = four_cut_reduction(g->g, a, o1);
    auto fc = new f3_fourcut{{red.g3}, std::move(red), g->g, std::move(a), std::move(o1)};
    *out = fc;
  });
}

const f3_graph* f3_fourcut_graph(const f3_fourcut* fc) { return &fc->g3; }
uint32_t f3_fourcut_vertex(const f3_fourcut* fc) { return fc->red.x; }

f3_status f3_fourcut_preorientation(const f3_fourcut* fc, int8_t* out) {
  return guarded([&] { copy_partial(fc->red.pre, out); });
}

f3_status f3_four_cut_recombine(const f3_fourcut* fc, const int8_t* d3, int8_t* g_dirs_out) {
  return guarded([&] {
    Orientation o3 = orientation_from(fc->red.g3, d3);
    Orientation got = four_cut_recombine(fc->g, fc->a, fc->d1, fc->red, o3);
    copy_dirs(got, g_dirs_out);
  });
}

void f3_fourcut_free(f3_fourcut* fc) { delete fc; }

f3_status f3_crossing_reduction(const f3_graph* g, uint32_t e1, uint32_t e2,
                                int alt_doubling, f3_graph** out) {
  return guarded(
      [&] { *out = new f3_graph{crossing_reduction(g->g, e1, e2, alt_doubling != 0)}; });
}

/* ---- extension machinery ---- */

f3_status f3_tau(const f3_graph* g, const uint8_t* beta, const uint32_t* set,
                 size_t set_size, int* out) {
  return guarded(
      [&] { *out = tau(g->g, boundary_from(g->g, beta), set_from(set, set_size)); });
}

f3_status f3_extension_check(const f3_graph* g, const uint8_t* beta, uint32_t z,
                             const int8_t* dz, uint32_t cut_cap, f3_hypotheses** out) {
  return guarded([&] {
    *out = new f3_hypotheses{check_extension_hypotheses(g->g, boundary_from(g->g, beta), z,
                                                        partial_from(g->g, dz),
                                                        budget_with_cut_cap(cut_cap))};
  });
}

int f3_hypotheses_pass(const f3_hypotheses* h) { return h->report.pass() ? 1 : 0; }
int f3_hypotheses_order_ok(const f3_hypotheses* h) { return h->report.order_ok ? 1 : 0; }
int f3_hypotheses_vertex_ok(const f3_hypotheses* h) { return h->report.vertex_ok ? 1 : 0; }
int f3_hypotheses_cuts_ok(const f3_hypotheses* h) { return h->report.cuts_ok ? 1 : 0; }
size_t f3_hypotheses_degree_z(const f3_hypotheses* h) { return h->report.degree_z; }
int f3_hypotheses_tau_z(const f3_hypotheses* h) { return h->report.tau_z; }
int f3_hypotheses_has_violating_set(const f3_hypotheses* h) {
  return h->report.violating_set.has_value() ? 1 : 0;
}
size_t f3_hypotheses_violating_size(const f3_hypotheses* h) {
  return h->report.violating_set ? h->report.violating_set->size() : 0;
}
f3_status f3_hypotheses_violating_set(const f3_hypotheses* h, uint32_t* buf) {
  return guarded([&] {
    if (!h->report.violating_set)
      fail(ErrorKind::invalid_argument, "no violating set in this report");
    std::copy(h->report.violating_set->begin(), h->report.violating_set->end(), buf);
  });
}
size_t f3_hypotheses_violating_degree(const f3_hypotheses* h) {
  return h->report.violating_degree;
}
int f3_hypotheses_violating_tau(const f3_hypotheses* h) { return h->report.violating_tau; }
void f3_hypotheses_free(f3_hypotheses* h) { delete h; }

f3_status f3_extension_extend(const f3_graph* g, const uint8_t* beta, uint32_t z,
                              const int8_t* dz, uint32_t cut_cap, int8_t* dirs_out) {
  return guarded([&] {
    Orientation got = extend_preorientation(g->g, boundary_from(g->g, beta), z,
                                            partial_from(g->g, dz),
                                            budget_with_cut_cap(cut_cap));
    copy_dirs(got, dirs_out);
  });
}

f3_status f3_four_cut_apex_build(const f3_graph* g, const uint8_t* beta, uint32_t cut_cap,
                                 f3_apex** out) {
  return guarded([&] {
    FourCutApex apex =
        build_four_cut_apex(g->g, boundary_from(g->g, beta), budget_with_cut_cap(cut_cap));
    auto a = new f3_apex{apex, {apex.graph}};
    *out = a;
  });
}

int f3_apex_degenerate(const f3_apex* a) { return a->apex.degenerate ? 1 : 0; }
const f3_graph* f3_apex_graph(const f3_apex* a) { return &a->graph; }
uint32_t f3_apex_vertex(const f3_apex* a) { return a->apex.apex; }
size_t f3_apex_critical_count(const f3_apex* a) { return a->apex.critical.size(); }
size_t f3_apex_critical_size(const f3_apex* a, size_t i) {
  return a->apex.critical.at(i).size();
}
f3_status f3_apex_critical_set(const f3_apex* a, size_t i, uint32_t* buf) {
  return guarded([&] {
    const auto& s = a->apex.critical.at(i);
    std::copy(s.begin(), s.end(), buf);
  });
}
f3_status f3_apex_boundary(const f3_apex* a, uint8_t* out) {
  return guarded(
      [&] { std::memcpy(out, a->apex.boundary.value.data(), a->apex.boundary.value.size()); });
}
f3_status f3_apex_preorientation(const f3_apex* a, int8_t* out) {
  return guarded([&] { copy_partial(a->apex.preorientation, out); });
}
void f3_apex_free(f3_apex* a) { delete a; }

f3_status f3_four_cut_apex_solve(const f3_graph* g, const uint8_t* beta, uint32_t cut_cap,
                                 int8_t* dirs_out) {
  return guarded([&] {
    Orientation got = beta_orientation_via_apex(g->g, boundary_from(g->g, beta),
                                                budget_with_cut_cap(cut_cap));
    copy_dirs(got, dirs_out);
  });
}

f3_status f3_five_cut_check(const f3_graph* g, int exhaustive, uint64_t samples,
                            uint64_t seed, uint32_t vertex_cap, unsigned jobs,
                            f3_verdict** out) {
  return guarded([&] {
    ZMode mode = exhaustive ? ZMode{} : ZMode::sample(samples, seed);
    *out = new f3_verdict{five_cut_apex_check(g->g, mode, budget_with_z3_cap(vertex_cap),
                                              jobs ? jobs : 1)};
  });
}

/* ---- plane embeddings ---- */

f3_status f3_embedding_read_file(const char* path, f3_embedding** out) {
  return guarded([&] {
    Embedding emb = read_embedding_file(path);
    auto e = new f3_embedding{std::move(emb), {}};
    e->graph.g = e->emb.graph;
    *out = e;
  });
}

const f3_graph* f3_embedding_graph(const f3_embedding* e) { return &e->graph; }

f3_status f3_embedding_face_count(const f3_embedding* e, size_t* out) {
  return guarded([&] { *out = faces(e->emb.rotation, e->emb.graph).size(); });
}

f3_status f3_embedding_dual(const f3_embedding* e, f3_dual** out) {
  return guarded([&] {
    DualCorrespondence d = dual(e->emb.rotation, e->emb.graph);
    auto dd = new f3_dual{std::move(d), {}};
    dd->graph.g = dd->d.dual_graph;
    *out = dd;
  });
}

void f3_embedding_free(f3_embedding* e) { delete e; }

const f3_graph* f3_dual_graph(const f3_dual* d) { return &d->graph; }
size_t f3_dual_face_count(const f3_dual* d) { return d->d.face_count; }
f3_status f3_dual_edge_image(const f3_dual* d, uint32_t primal_edge, uint32_t* dual_edge) {
  return guarded([&] { *dual_edge = d->d.primal_to_dual.at(primal_edge); });
}
void f3_dual_free(f3_dual* d) { delete d; }

f3_status f3_chromatic3(const f3_graph* g, int* found, uint8_t* colors) {
  return guarded([&] {
    auto got = chromatic_3(g->g);
    *found = got.has_value() ? 1 : 0;
    if (got) std::memcpy(colors, got->data(), got->size());
  });
}

f3_status f3_duality_check(const f3_embedding* e, int* mod3_orientable,
                           int* dual_three_colorable) {
  return guarded([&] {
    DualityVerdict v = duality_check(e->emb.rotation, e->emb.graph);
    *mod3_orientable = v.mod3_orientable ? 1 : 0;
    *dual_three_colorable = v.dual_three_colorable ? 1 : 0;
  });
}

/* ---- corpus ---- */

f3_status f3_corpus_random(uint64_t seed, size_t count, size_t max_n, size_t max_m,
                           f3_graphlist** out) {
  return guarded([&] {
    auto got = random_corpus(seed, count, max_n, max_m);
    auto list = new f3_graphlist{};
    for (auto& g : got) list->graphs.push_back({std::move(g)});
    *out = list;
  });
}

size_t f3_curated_count(void) { return curated_graphs().size(); }

const char* f3_curated_name(size_t i) {
  static thread_local std::string name;
  auto all = curated_graphs();
  if (i >= all.size()) return nullptr;
  name = all[i].first;
  return name.c_str();
}

f3_status f3_curated_graph(size_t i, f3_graph** out) {
  return guarded([&] {
    auto all = curated_graphs();
    if (i >= all.size()) fail(ErrorKind::invalid_argument, "curated index out of range");
    *out = new f3_graph{std::move(all[i].second)};
  });
}

}  // extern "C"
