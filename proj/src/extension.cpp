#include "flow3/extension.hpp"

#include <algorithm>
#include <string>

#include "flow3/cuts.hpp"

namespace flow3 {

namespace {
inline int mod3(int x) { return ((x % 3) + 3) % 3; }

int beta_sum(const Multigraph& g, const Boundary& beta, const VertexSet& a) {
  int sum = 0;
  for (Vertex v : a) sum += beta.value[g.index_of(v)];
  return mod3(sum);
}

int tau_of(std::size_t cut, int residue) {
  if (cut % 2 == 0) {
    if (residue == 0) return 0;
    return residue == 2 ? 2 : -2;
  }
  if (residue == 1) return 1;
  if (residue == 2) return -1;
  return 3;  // both +-3 fit; the positive one is the convention
}
}  // namespace

int tau(const Multigraph& g, const Boundary& beta, const VertexSet& a) {
  if (a.empty() || a.size() >= g.vertex_count())
    fail(ErrorKind::invalid_argument, "tau needs a nonempty proper vertex set");
  require_valid_boundary(g, beta);
  return tau_of(cut_size(g, a), beta_sum(g, beta, a));
}

HypothesisReport check_extension_hypotheses(const Multigraph& g, const Boundary& beta,
                                            Vertex z, const PartialOrientation& dz,
                                            const Budget& budget) {
  require_valid_boundary(g, beta);
  if (!g.has_vertex(z))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(z));
  if (dz.dir.size() != g.edge_count())
    fail(ErrorKind::invalid_argument, "pre-orientation does not match the graph");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    bool at_z = ed.a == z || ed.b == z;
    if (at_z && !dz.decided(e))
      fail(ErrorKind::invalid_argument, "pre-orientation leaves an edge at z undecided");
    if (!at_z && dz.decided(e))
      fail(ErrorKind::invalid_argument, "pre-orientation decides an edge away from z");
  }
  const std::size_t n = g.vertex_count();
  if (n - 1 > budget.cut_vertex_cap)
    fail(ErrorKind::budget, "hypothesis scan above the subset cap");

  HypothesisReport report;
  report.order_ok = n >= 3;

  report.degree_z = g.degree(z);
  report.tau_z = tau_of(report.degree_z, beta.value[g.index_of(z)]);
  bool balanced = mod3(partial_deficiency(g, dz, z)) == beta.value[g.index_of(z)];
  report.vertex_ok =
      report.degree_z <= 4 + static_cast<std::size_t>(std::abs(report.tau_z)) && balanced;

  report.cuts_ok = true;
  // positions of V - {z}, scanned as bitmasks ascending
  std::vector<Vertex> others;
  for (Vertex v : g.vertices())
    if (v != z) others.push_back(v);
  std::vector<std::size_t> pos;
  for (Vertex v : others) pos.push_back(g.index_of(v));

  std::vector<std::pair<std::size_t, std::size_t>> edge_pos;
  for (const Edge& ed : g.edges())
    edge_pos.emplace_back(g.index_of(ed.a), g.index_of(ed.b));
  std::vector<int> in_mask(n, 0);

  const std::uint64_t top = others.empty() ? 0 : (std::uint64_t{1} << others.size());
  for (std::uint64_t mask = 1; mask + 1 < top; ++mask) {  // skip all of V - {z}
    for (std::size_t i = 0; i < others.size(); ++i) in_mask[pos[i]] = (mask >> i) & 1u;
    std::size_t d = 0;
    for (const auto& [pa, pb] : edge_pos) d += in_mask[pa] != in_mask[pb];
    int residue = 0;
    for (std::size_t i = 0; i < others.size(); ++i)
      if ((mask >> i) & 1u) residue += beta.value[pos[i]];
    int t = tau_of(d, mod3(residue));
    if (d < 4 + static_cast<std::size_t>(std::abs(t))) {
      report.cuts_ok = false;
      VertexSet bad;
      for (std::size_t i = 0; i < others.size(); ++i)
        if ((mask >> i) & 1u) bad.push_back(others[i]);
      report.violating_set = bad;
      report.violating_degree = d;
      report.violating_tau = t;
      break;
    }
  }
  return report;
}

Orientation extend_preorientation(const Multigraph& g, const Boundary& beta, Vertex z,
                                  const PartialOrientation& dz, const Budget& budget) {
  HypothesisReport report = check_extension_hypotheses(g, beta, z, dz, budget);
  if (!report.pass()) {
    std::string what = "extension hypotheses fail:";
    if (!report.order_ok) what += " fewer than three vertices;";
    if (!report.vertex_ok) what += " the vertex condition fails at z;";
    if (report.violating_set) {
      what += " cut condition fails at {";
      for (Vertex v : *report.violating_set) what += std::to_string(v) + " ";
      what += "} with d=" + std::to_string(report.violating_degree) +
              " tau=" + std::to_string(report.violating_tau) + ";";
    }
    fail(ErrorKind::precondition, what);
  }
  auto found = find_beta_orientation(g, beta, dz);
  if (!found)
    fail(ErrorKind::internal,
         "hypotheses hold but no extension was found; the solver or the scan is wrong");
  return *found;
}

FourCutApex build_four_cut_apex(const Multigraph& g, const Boundary& beta,
                                const Budget& budget) {
  require_valid_boundary(g, beta);
  if (g.vertex_count() < 2 || edge_connectivity(g, budget) < 4)
    fail(ErrorKind::precondition, "graph is not 4-edge-connected");
  std::size_t four_cuts = 0, five_cuts = 0;
  for (const CutReport& c : enumerate_small_cuts(g, 5, budget)) {
    four_cuts += c.size == 4;
    five_cuts += c.size == 5;
  }
  if (four_cuts > 5)
    fail(ErrorKind::precondition,
         "more than five 4-cuts: " + std::to_string(four_cuts));
  if (five_cuts > 0)
    fail(ErrorKind::precondition, std::to_string(five_cuts) + " 5-cuts present");

  FourCutApex out;
  out.critical = critical_sets(g, 4, budget);
  if (out.critical.empty()) {
    out.degenerate = true;
    out.graph = g;
    out.boundary = beta;
    out.preorientation = PartialOrientation::all_undecided(g.edge_count());
    return out;
  }

  const Vertex z = g.vertices().back() + 1;
  out.apex = z;
  VertexSet vs = g.vertices();
  vs.push_back(z);
  std::vector<Edge> es = g.edges();

  out.boundary = beta;
  out.boundary.value.push_back(0);  // z, fixed below by the zero-sum constraint

  std::vector<Dir> apex_dirs;
  int def_z = 0;
  for (const VertexSet& set : out.critical) {
    int t = tau(g, beta, set);
    if (t != 0 && t != 2 && t != -2)
      fail(ErrorKind::internal, "a 4-critical set has odd tau");
    Vertex target = set.front();
    es.push_back({z, target});
    bool outward = (t == 0 || t == 2);
    apex_dirs.push_back(outward ? Dir::forward : Dir::reverse);
    def_z += outward ? 1 : -1;
    std::size_t ti = g.index_of(target);
    int adjusted = int(out.boundary.value[ti]) + (outward ? -1 : 1);
    out.boundary.value[ti] = static_cast<std::uint8_t>(mod3(adjusted));
  }
  out.graph = Multigraph(std::move(vs), std::move(es));

  int sum = 0;
  for (std::size_t i = 0; i + 1 < out.boundary.value.size(); ++i)
    sum += out.boundary.value[i];
  out.boundary.value.back() = static_cast<std::uint8_t>(mod3(-sum));
  if (out.boundary.value.back() != static_cast<std::uint8_t>(mod3(def_z)))
    fail(ErrorKind::internal, "apex boundary does not match the apex pre-orientation");

  out.preorientation = PartialOrientation::all_undecided(out.graph.edge_count());
  for (std::size_t i = 0; i < apex_dirs.size(); ++i)
    out.preorientation.set(static_cast<EdgeId>(g.edge_count() + i), apex_dirs[i]);

  // the construction's defining identity, checked for every critical set
  for (const VertexSet& set : out.critical) {
    std::size_t d = cut_size(out.graph, set);
    int t = tau(out.graph, out.boundary, set);
    if (d != 4 + static_cast<std::size_t>(std::abs(t)))
      fail(ErrorKind::internal, "apex construction misses d = 4 + |tau| on a critical set");
  }
  HypothesisReport rep =
      check_extension_hypotheses(out.graph, out.boundary, z, out.preorientation, budget);
  if (!rep.pass()) {
    std::string what = "apex construction fails the extension hypotheses";
    if (rep.violating_set) {
      what += " at {";
      for (Vertex v : *rep.violating_set) what += std::to_string(v) + " ";
      what += "}";
    }
    fail(ErrorKind::precondition, what);
  }
  return out;
}

Orientation beta_orientation_via_apex(const Multigraph& g, const Boundary& beta,
                                      const Budget& budget) {
  FourCutApex apex = build_four_cut_apex(g, beta, budget);
  if (apex.degenerate) {
    auto found = find_beta_orientation(g, beta);
    if (!found) fail(ErrorKind::internal, "no 4-cuts yet the direct solve failed");
    return *found;
  }
  Orientation extended =
      extend_preorientation(apex.graph, apex.boundary, apex.apex, apex.preorientation, budget);
  Orientation res;
  res.dir.assign(g.edge_count(), Dir::forward);
  for (EdgeId e = 0; e < g.edge_count(); ++e) res.dir[e] = extended.dir[e];
  if (!is_beta_orientation(g, res, beta))
    fail(ErrorKind::internal, "restriction to the original graph misses the boundary");
  return res;
}

Verdict five_cut_apex_check(const Multigraph& g, const ZMode& mode, const Budget& budget,
                            unsigned jobs) {
  if (g.vertex_count() < 2 || edge_connectivity(g, budget) < 5)
    fail(ErrorKind::precondition, "graph is not 5-edge-connected");
  std::vector<VertexSet> crit = critical_sets(g, 5, budget);
  if (crit.size() > 7)
    fail(ErrorKind::precondition,
         std::to_string(crit.size()) + " 5-critical cuts, more than seven");
  if (!crit.empty()) {
    // degree-7 apex over the critical sets, padding the first set
    std::vector<std::size_t> mult(crit.size(), 1);
    mult[0] = 8 - crit.size();
    auto [augmented, apex] = apex_augment(g, 5, mult, budget);
    if (augmented.degree(apex) != 7)
      fail(ErrorKind::internal, "apex degree is not 7");
  }
  return is_z3_connected(g, mode, budget, jobs);
}

}  // namespace flow3
