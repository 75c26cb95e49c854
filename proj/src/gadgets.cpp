#include "flow3/gadgets.hpp"

#include <algorithm>
#include <string>

#include "flow3/cuts.hpp"

namespace flow3 {

namespace {
inline int mod3(int x) { return ((x % 3) + 3) % 3; }
}  // namespace

Multigraph doubled_wheel() {
  std::vector<Edge> es;
  const Vertex cycle[5][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}};
  for (const auto& c : cycle) {
    es.push_back({c[0], c[1]});
    es.push_back({c[0], c[1]});
  }
  for (Vertex i = 1; i <= 5; ++i) es.push_back({0, i});
  return Multigraph::with_vertex_count(6, std::move(es));
}

namespace {

// Deficiencies of the wheel for one orientation mask (bit e set = reversed).
void wheel_deficiencies(const Multigraph& w, std::uint32_t mask, int def[6]) {
  std::fill(def, def + 6, 0);
  for (EdgeId e = 0; e < 15; ++e) {
    const Edge& ed = w.edges()[e];
    bool rev = (mask >> e) & 1u;
    def[rev ? ed.b : ed.a] += 1;
    def[rev ? ed.a : ed.b] -= 1;
  }
}

int wheel_outs_at(const Multigraph& w, std::uint32_t mask, Vertex v) {
  int outs = 0;
  for (EdgeId e : w.incident(v)) {
    const Edge& ed = w.edges()[e];
    bool rev = (mask >> e) & 1u;
    outs += (rev ? ed.b : ed.a) == v;
  }
  return outs;
}

}  // namespace

bool wheel_minor_edge_check(WheelScan* scan) {
  Multigraph w = doubled_wheel();
  WheelScan local;
  bool ok = true;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    ++local.scanned;
    int def[6];
    wheel_deficiencies(w, mask, def);
    bool mod3_orient = true;
    for (int v = 0; v < 6; ++v)
      if (mod3(def[v]) != 0) {
        mod3_orient = false;
        break;
      }
    if (!mod3_orient) continue;
    ++local.compliant;
    // degree-5 vertices balanced mod 3 must split 4-1
    for (int v = 0; v < 6; ++v)
      if (def[v] != 3 && def[v] != -3) ok = false;
    bool found = false;
    for (Vertex k = 1; k <= 5 && !found; ++k) {
      EdgeId spoke = 9 + k;
      // spoke is stored (0, k): forward means 0 -> k, so out at k iff reversed
      bool spoke_out_at_k = ((mask >> spoke) & 1u) != 0;
      int outs = wheel_outs_at(w, mask, k);
      if ((spoke_out_at_k && outs == 1) || (!spoke_out_at_k && outs == 4)) found = true;
    }
    if (!found) ok = false;
  }
  if (scan) *scan = local;
  return ok;
}

bool wheel_sink_check(WheelScan* scan) {
  Multigraph w = doubled_wheel();
  WheelScan local;
  bool ok = true;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    ++local.scanned;
    int def[6];
    wheel_deficiencies(w, mask, def);
    bool beta_one = true;
    for (int v = 0; v < 6; ++v)
      if (mod3(def[v]) != 1) {
        beta_one = false;
        break;
      }
    if (!beta_one) continue;
    ++local.compliant;
    int sinks = 0;
    for (int v = 0; v < 6; ++v) {
      if (def[v] != 1 && def[v] != -5) ok = false;  // the only residues a 5-vertex allows
      if (def[v] == -5) ++sinks;
    }
    if (sinks != 1) ok = false;
  }
  if (scan) *scan = local;
  return ok;
}

namespace {

// Shared construction: six copies of G - hub glued along the wheel. The
// caller fixes the attachment labels (which hub edge each wheel edge-end
// stands for); this routine places the edges. Wheel edge ids come first in H
// so the solver settles the skeleton before walking each copy.
std::pair<Multigraph, HProvenance> build_replacement(const Multigraph& g, Vertex hub,
                                                     const std::array<EdgeId, 5>& hub_edge,
                                                     const std::array<unsigned, 6>& shifts) {
  if (g.degree(hub) != 5)
    fail(ErrorKind::precondition,
         "replacement needs a 5-vertex, degree is " + std::to_string(g.degree(hub)));
  if (shifts[0] > 4)
    fail(ErrorKind::invalid_argument, "copy-0 shift must be in 0..4");
  for (int j = 1; j < 6; ++j)
    if (shifts[j] > 3) fail(ErrorKind::invalid_argument, "cycle shifts must be in 0..3");

  HProvenance prov;
  prov.hub = hub;
  prov.hub_edge = hub_edge;
  prov.base_vertices = complement_set(g, {hub});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    if (ed.a != hub && ed.b != hub) prov.base_edges.push_back(e);
  }
  const std::size_t nb = prov.base_vertices.size();
  const std::size_t mb = prov.base_edges.size();

  auto base_index = [&](Vertex v) {
    auto it = std::lower_bound(prov.base_vertices.begin(), prov.base_vertices.end(), v);
    return static_cast<std::size_t>(it - prov.base_vertices.begin());
  };
  Vertex label_vertex[5];
  for (int l = 0; l < 5; ++l) label_vertex[l] = g.other_end(hub_edge[l], hub);

  for (int c = 0; c < 6; ++c) {
    prov.copy_vertex[c].resize(nb);
    for (std::size_t p = 0; p < nb; ++p)
      prov.copy_vertex[c][p] = static_cast<Vertex>(c * nb + p);
  }
  auto attach = [&](int copy, int label) {
    return prov.copy_vertex[copy][base_index(label_vertex[label])];
  };

  Multigraph wheel = doubled_wheel();
  std::vector<Edge> hedges;
  hedges.reserve(15 + 6 * mb);
  for (EdgeId we = 0; we < 15; ++we) {
    const Edge& wd = wheel.edges()[we];
    int cu = wd.a, cv = wd.b;
    int label_u, label_v;
    if (cu == 0) {  // spoke (0, k)
      int k = cv;
      label_u = static_cast<int>((k - 1 + shifts[0]) % 5);
      label_v = 0;
    } else {
      // cycle edge; rank the four cycle ends at a vertex by (neighbor, copy)
      int parallel = we % 2;  // doubled pairs are adjacent in wheel edge order
      auto cycle_rank = [&](int at, int nb_vertex) {
        int n1 = at == 1 ? 2 : at - 1;  // the two cycle neighbors, ascending
        int n2 = at == 5 ? 4 : at + 1;
        if (at == 1) n2 = 5;
        if (n1 > n2) std::swap(n1, n2);
        return (nb_vertex == n1 ? 0 : 2) + parallel;
      };
      label_u = 1 + static_cast<int>((cycle_rank(cu, cv) + shifts[cu]) % 4);
      label_v = 1 + static_cast<int>((cycle_rank(cv, cu) + shifts[cv]) % 4);
    }
    prov.wheel_edges.push_back({static_cast<std::uint8_t>(cu), static_cast<std::uint8_t>(cv),
                                we, static_cast<std::uint8_t>(label_u),
                                static_cast<std::uint8_t>(label_v)});
    hedges.push_back({attach(cu, label_u), attach(cv, label_v)});
  }
  for (int c = 0; c < 6; ++c) {
    prov.copy_edge[c].resize(mb);
    for (std::size_t j = 0; j < mb; ++j) {
      const Edge& ed = g.edges()[prov.base_edges[j]];
      prov.copy_edge[c][j] = static_cast<EdgeId>(hedges.size());
      hedges.push_back({prov.copy_vertex[c][base_index(ed.a)],
                        prov.copy_vertex[c][base_index(ed.b)]});
    }
  }
  return {Multigraph::with_vertex_count(6 * nb, std::move(hedges)), std::move(prov)};
}

// Orientation of the wheel obtained by contracting every copy.
std::array<Dir, 15> contracted_wheel_orientation(const Orientation& d,
                                                 const HProvenance& prov) {
  std::array<Dir, 15> wdir{};
  for (std::size_t i = 0; i < prov.wheel_edges.size(); ++i)
    wdir[i] = d.dir[prov.wheel_edges[i].h_edge];
  return wdir;
}

int wheel_def(const std::array<Dir, 15>& wdir, const HProvenance& prov, int v) {
  int def = 0;
  for (std::size_t i = 0; i < prov.wheel_edges.size(); ++i) {
    const auto& we = prov.wheel_edges[i];
    if (we.wu == v) def += wdir[i] == Dir::forward ? 1 : -1;
    if (we.wv == v) def += wdir[i] == Dir::forward ? -1 : 1;
  }
  return def;
}

int wheel_outs(const std::array<Dir, 15>& wdir, const HProvenance& prov, int v) {
  int outs = 0;
  for (std::size_t i = 0; i < prov.wheel_edges.size(); ++i) {
    const auto& we = prov.wheel_edges[i];
    if (we.wu == v && wdir[i] == Dir::forward) ++outs;
    if (we.wv == v && wdir[i] == Dir::reverse) ++outs;
  }
  return outs;
}

// Direction a wheel-edge image gives to the hub edge of G at (copy, label):
// the far end of the wheel edge plays the hub, so "toward the copy" means
// "out of the hub".
Dir hub_edge_direction(const Multigraph& g, Vertex hub, const HProvenance& prov,
                       const Orientation& d, int copy, int label) {
  for (const auto& we : prov.wheel_edges) {
    bool at_u = we.wu == copy && we.label_u == label;
    bool at_v = we.wv == copy && we.label_v == label;
    if (!at_u && !at_v) continue;
    Dir hd = d.dir[we.h_edge];
    bool toward_copy = at_u ? (hd == Dir::reverse) : (hd == Dir::forward);
    EdgeId ge = prov.hub_edge[label];
    const Edge& ged = g.edges()[ge];
    bool hub_first = ged.a == hub;
    // toward_copy = out of hub
    return (toward_copy == hub_first) ? Dir::forward : Dir::reverse;
  }
  fail(ErrorKind::internal, "no wheel edge attached at copy " + std::to_string(copy) +
                                " label " + std::to_string(label));
}

void require_decides_exactly_hub(const Multigraph& g, Vertex hub,
                                 const PartialOrientation& p) {
  if (p.dir.size() != g.edge_count())
    fail(ErrorKind::invalid_argument, "pre-orientation does not match the graph");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    bool at_hub = ed.a == hub || ed.b == hub;
    if (at_hub && !p.decided(e))
      fail(ErrorKind::precondition, "pre-orientation leaves a hub edge undecided");
    if (!at_hub && p.decided(e))
      fail(ErrorKind::precondition, "pre-orientation decides an edge away from the hub");
  }
}

}  // namespace

std::pair<Multigraph, HProvenance> build_mod3_replacement(const Multigraph& g, Vertex x,
                                                          const PartialOrientation& dx,
                                                          const std::array<unsigned, 6>& shifts) {
  if (!g.has_vertex(x))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(x));
  if (g.degree(x) != 5)
    fail(ErrorKind::precondition, "replacement needs a 5-vertex");
  require_decides_exactly_hub(g, x, dx);
  if (mod3(partial_deficiency(g, dx, x)) != 0)
    fail(ErrorKind::precondition, "pre-orientation at the vertex is not balanced mod 3");

  EdgeId minor = minor_edge(g, dx, x);
  std::array<EdgeId, 5> labels{};
  labels[0] = minor;
  int next = 1;
  for (EdgeId e : g.incident(x))
    if (e != minor) labels[next++] = e;
  return build_replacement(g, x, labels, shifts);
}

Orientation extract_mod3_orientation(const Multigraph& h, const Orientation& d,
                                     const HProvenance& prov, const Multigraph& g, Vertex x,
                                     const PartialOrientation& dx) {
  if (!is_beta_orientation(h, d, Boundary::zero(h)))
    fail(ErrorKind::precondition, "not a mod 3-orientation of the replacement graph");

  auto wdir = contracted_wheel_orientation(d, prov);
  for (int v = 0; v < 6; ++v)
    if (mod3(wheel_def(wdir, prov, v)) != 0)
      fail(ErrorKind::internal, "contracted wheel orientation is not balanced mod 3");

  int k = 0;
  for (int cand = 1; cand <= 5 && k == 0; ++cand) {
    // spoke (0, cand) is wheel edge 9 + cand; out at cand iff reversed
    bool spoke_out = wdir[9 + cand] == Dir::reverse;
    int outs = wheel_outs(wdir, prov, cand);
    if ((spoke_out && outs == 1) || (!spoke_out && outs == 4)) k = cand;
  }
  if (k == 0)
    fail(ErrorKind::internal, "no spoke is the minor-edge at its cycle vertex");

  Orientation res;
  res.dir.assign(g.edge_count(), Dir::forward);
  for (std::size_t j = 0; j < prov.base_edges.size(); ++j)
    res.dir[prov.base_edges[j]] = d.dir[prov.copy_edge[k][j]];
  for (int label = 0; label < 5; ++label)
    res.dir[prov.hub_edge[label]] = hub_edge_direction(g, x, prov, d, k, label);

  auto agrees = [&](const Orientation& o) {
    for (EdgeId e : g.incident(x))
      if (o.dir[e] != dx.at(e)) return false;
    return true;
  };
  if (!agrees(res)) {
    res = reversed(res);
    if (!agrees(res))
      fail(ErrorKind::internal, "extracted orientation disagrees with the pre-orientation");
  }
  if (!is_beta_orientation(g, res, Boundary::zero(g)))
    fail(ErrorKind::internal, "extracted orientation is not balanced mod 3");
  return res;
}

Z3Replacement build_z3_replacement(const Multigraph& g, Vertex z, const Boundary& beta1) {
  if (!g.has_vertex(z))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(z));
  if (g.degree(z) != 5)
    fail(ErrorKind::precondition, "replacement needs a 5-vertex");
  Multigraph base = delete_vertex(g, z);
  require_valid_boundary(base, beta1);

  Z3Replacement out;
  std::array<EdgeId, 5> labels{};
  const auto& inc = g.incident(z);
  for (int l = 0; l < 5; ++l) labels[l] = inc[l];

  // all-outward pre-orientation and the discharged boundary
  out.dz = PartialOrientation::all_undecided(g.edge_count());
  out.beta = Boundary::zero(g);
  out.beta.value[g.index_of(z)] = 2;
  for (std::size_t p = 0; p < base.vertex_count(); ++p) {
    Vertex v = base.vertices()[p];
    out.beta.value[g.index_of(v)] = beta1.value[p];
  }
  for (EdgeId e : inc) {
    const Edge& ed = g.edges()[e];
    out.dz.set(e, ed.a == z ? Dir::forward : Dir::reverse);
    Vertex u = g.other_end(e, z);
    std::size_t iu = g.index_of(u);
    out.beta.value[iu] = static_cast<std::uint8_t>(mod3(int(out.beta.value[iu]) - 1));
  }
  if (!boundary_valid(g, out.beta))
    fail(ErrorKind::internal, "derived boundary does not sum to zero");

  auto [h, prov] = build_replacement(g, z, labels, {0, 0, 0, 0, 0, 0});
  out.prov = std::move(prov);

  out.beta_star = Boundary::zero(h);
  for (int c = 0; c < 6; ++c)
    for (std::size_t p = 0; p < out.prov.base_vertices.size(); ++p)
      out.beta_star.value[out.prov.copy_vertex[c][p]] =
          out.beta.value[g.index_of(out.prov.base_vertices[p])];
  if (!boundary_valid(h, out.beta_star))
    fail(ErrorKind::internal, "copied boundary does not sum to zero");
  out.h = std::move(h);
  return out;
}

Orientation extract_beta_orientation(const Multigraph& h, const Orientation& dstar,
                                     const HProvenance& prov, const Multigraph& g, Vertex z,
                                     const Boundary& beta) {
  // rebuild beta* from beta to validate the input orientation
  Boundary beta_star = Boundary::zero(h);
  for (int c = 0; c < 6; ++c)
    for (std::size_t p = 0; p < prov.base_vertices.size(); ++p)
      beta_star.value[prov.copy_vertex[c][p]] = beta.value[g.index_of(prov.base_vertices[p])];
  if (!is_beta_orientation(h, dstar, beta_star))
    fail(ErrorKind::precondition, "not a beta*-orientation of the replacement graph");

  auto wdir = contracted_wheel_orientation(dstar, prov);
  for (int v = 0; v < 6; ++v)
    if (mod3(wheel_def(wdir, prov, v)) != 1)
      fail(ErrorKind::internal, "contracted wheel deficiencies are not all 1 mod 3");

  int sink = -1;
  for (int v = 0; v < 6 && sink < 0; ++v)
    if (wheel_outs(wdir, prov, v) == 0) sink = v;
  if (sink < 0) fail(ErrorKind::internal, "no contracted vertex has in-degree 5");

  Orientation res;
  res.dir.assign(g.edge_count(), Dir::forward);
  for (std::size_t j = 0; j < prov.base_edges.size(); ++j)
    res.dir[prov.base_edges[j]] = dstar.dir[prov.copy_edge[sink][j]];
  for (int label = 0; label < 5; ++label) {
    Dir hd = hub_edge_direction(g, z, prov, dstar, sink, label);
    // the sink has in-degree 5, so every hub edge leaves z
    EdgeId ge = prov.hub_edge[label];
    Dir expect = g.edges()[ge].a == z ? Dir::forward : Dir::reverse;
    if (hd != expect)
      fail(ErrorKind::internal, "a hub edge does not point out of the contracted sink");
    res.dir[ge] = hd;
  }
  if (!is_beta_orientation(g, res, beta))
    fail(ErrorKind::internal, "extracted orientation does not meet the boundary");
  return res;
}

namespace {

// d1 indexes the edges of contract(g, a).first. Checks it and hands back the
// boundary edges of a with their direction relative to the complement side.
struct BoundaryView {
  std::vector<EdgeId> edges;      // G edge ids crossing the cut, ascending
  std::vector<char> into_comp;    // oriented into A^c under d1
};

BoundaryView boundary_under_d1(const Multigraph& g, const VertexSet& a, const Orientation& d1) {
  auto [g1, m1] = contract(g, a);
  if (d1.dir.size() != g1.edge_count())
    fail(ErrorKind::precondition, "orientation does not match the contracted graph");
  if (!is_beta_orientation(g1, d1, Boundary::zero(g1)))
    fail(ErrorKind::precondition, "not a mod 3-orientation of the contracted graph");

  auto in_a = [&](Vertex v) { return std::binary_search(a.begin(), a.end(), v); };
  BoundaryView view;
  int into = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    if (in_a(ed.a) == in_a(ed.b)) continue;
    view.edges.push_back(e);
    EdgeId e1 = m1.edge_to_new[e];  // contraction keeps endpoint order, so Dir carries over
    Vertex head = d1.dir[e1] == Dir::forward ? ed.b : ed.a;
    bool ic = !in_a(head);
    view.into_comp.push_back(ic ? 1 : 0);
    into += ic;
  }
  if (view.edges.size() != 4)
    fail(ErrorKind::precondition, "the set does not span a 4-cut");
  if (into != 2)
    fail(ErrorKind::internal, "a balanced degree-4 contraction must be oriented 2-in 2-out");
  return view;
}

}  // namespace

FourCutReduction four_cut_reduction(const Multigraph& g, const VertexSet& a,
                                    const Orientation& d1) {
  if (cut_size(g, a) != 4) fail(ErrorKind::precondition, "the set does not span a 4-cut");
  BoundaryView view = boundary_under_d1(g, a, d1);

  VertexSet comp = complement_set(g, a);
  auto [g2, m2] = contract(g, comp);
  const Vertex x = comp.front();

  EdgeId replaced = static_cast<EdgeId>(-1);
  for (std::size_t i = 0; i < view.edges.size(); ++i)
    if (view.into_comp[i]) {
      replaced = view.edges[i];  // smallest ingoing edge: ids are ascending
      break;
    }

  auto in_a = [&](Vertex v) { return std::binary_search(a.begin(), a.end(), v); };
  const Edge& red = g.edges()[replaced];
  Vertex w = in_a(red.a) ? red.a : red.b;  // the A-side endpoint

  FourCutReduction out;
  out.x = x;
  out.replaced_edge = replaced;
  std::vector<Edge> es;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (m2.edge_to_new[e] == EdgeMap::deleted || e == replaced) continue;
    Vertex na = in_a(g.edges()[e].a) ? g.edges()[e].a : x;
    Vertex nb = in_a(g.edges()[e].b) ? g.edges()[e].b : x;
    out.g3_edge_source.push_back(e);
    es.push_back({na, nb});
  }
  out.g3_edge_source.push_back(FourCutReduction::doubled);
  out.g3_edge_source.push_back(FourCutReduction::doubled);
  es.push_back({x, w});
  es.push_back({x, w});
  out.g3 = Multigraph(g2.vertices(), std::move(es));

  if (out.g3.degree(x) != 5)
    fail(ErrorKind::internal, "contracted vertex does not have degree 5 after doubling");

  // boundary edges keep their d1 direction; endpoint order survives both
  // contractions, so the Dir value can be copied straight across
  out.pre = PartialOrientation::all_undecided(out.g3.edge_count());
  auto [g1, m1] = contract(g, a);
  for (EdgeId e3 = 0; e3 < out.g3.edge_count(); ++e3) {
    EdgeId src = out.g3_edge_source[e3];
    if (src == FourCutReduction::doubled) {
      out.pre.set(e3, Dir::forward);  // stored (x, w): out of x
      continue;
    }
    if (!std::binary_search(view.edges.begin(), view.edges.end(), src)) continue;
    out.pre.set(e3, d1.dir[m1.edge_to_new[src]]);
  }
  if (mod3(partial_deficiency(out.g3, out.pre, x)) != 0)
    fail(ErrorKind::internal, "pre-orientation at the contracted vertex is not balanced");
  return out;
}

Orientation four_cut_recombine(const Multigraph& g, const VertexSet& a, const Orientation& d1,
                               const FourCutReduction& red, const Orientation& d3) {
  if (!is_beta_orientation(red.g3, d3, Boundary::zero(red.g3)))
    fail(ErrorKind::precondition, "not a mod 3-orientation of the reduced graph");
  for (EdgeId e3 = 0; e3 < red.g3.edge_count(); ++e3)
    if (red.pre.decided(e3) && d3.dir[e3] != red.pre.at(e3))
      fail(ErrorKind::precondition, "orientation does not extend the pre-orientation");

  auto [g1, m1] = contract(g, a);
  if (!is_beta_orientation(g1, d1, Boundary::zero(g1)))
    fail(ErrorKind::precondition, "not a mod 3-orientation of the contracted graph");

  Orientation res;
  res.dir.assign(g.edge_count(), Dir::forward);
  // everything outside A, boundary included, follows d1
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (m1.edge_to_new[e] != EdgeMap::deleted) res.dir[e] = d1.dir[m1.edge_to_new[e]];
  // edges inside A follow d3
  for (EdgeId e3 = 0; e3 < red.g3.edge_count(); ++e3) {
    EdgeId src = red.g3_edge_source[e3];
    if (src == FourCutReduction::doubled) continue;
    if (m1.edge_to_new[src] == EdgeMap::deleted) res.dir[src] = d3.dir[e3];
  }
  if (!is_beta_orientation(g, res, Boundary::zero(g)))
    fail(ErrorKind::internal, "recombined orientation is not balanced mod 3");
  return res;
}

Multigraph crossing_reduction(const Multigraph& g, EdgeId e1, EdgeId e2, bool alt_doubling) {
  if (e1 >= g.edge_count() || e2 >= g.edge_count())
    fail(ErrorKind::invalid_argument, "unknown edge id");
  if (e1 == e2) fail(ErrorKind::invalid_argument, "the two edges must be distinct");
  const Edge f = g.edge(e1);
  const Edge s = g.edge(e2);
  const Vertex z = g.vertices().back() + 1;

  VertexSet vs = g.vertices();
  vs.push_back(z);
  std::vector<Edge> es;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != e1 && e != e2) es.push_back(g.edges()[e]);
  es.push_back({z, f.a});
  es.push_back({z, f.b});
  if (alt_doubling) {
    es.push_back({z, s.a});
    es.push_back({z, s.a});
    es.push_back({z, s.b});
  } else {
    es.push_back({z, s.a});
    es.push_back({z, s.b});
    es.push_back({z, s.b});
  }
  return Multigraph(std::move(vs), std::move(es));
}

}  // namespace flow3
