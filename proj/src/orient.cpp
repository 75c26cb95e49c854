#include "flow3/orient.hpp"

#include <algorithm>
#include <string>

namespace flow3 {

namespace {
inline int mod3(int x) { return ((x % 3) + 3) % 3; }
}  // namespace

std::size_t PartialOrientation::decided_count() const {
  std::size_t n = 0;
  for (std::int8_t d : dir) n += (d >= 0);
  return n;
}

bool boundary_valid(const Multigraph& g, const Boundary& beta) {
  if (beta.value.size() != g.vertex_count()) return false;
  int sum = 0;
  for (std::uint8_t v : beta.value) {
    if (v > 2) return false;
    sum += v;
  }
  return mod3(sum) == 0;
}

void require_valid_boundary(const Multigraph& g, const Boundary& beta) {
  if (beta.value.size() != g.vertex_count())
    fail(ErrorKind::invalid_argument, "boundary size does not match the graph");
  for (std::uint8_t v : beta.value)
    if (v > 2) fail(ErrorKind::invalid_argument, "boundary value out of Z3");
  int sum = 0;
  for (std::uint8_t v : beta.value) sum += v;
  if (mod3(sum) != 0)
    fail(ErrorKind::invalid_argument, "boundary does not sum to 0 mod 3");
}

Boundary negated(const Multigraph& g, const Boundary& beta) {
  Boundary out;
  out.value.reserve(g.vertex_count());
  for (std::uint8_t v : beta.value) out.value.push_back(static_cast<std::uint8_t>(mod3(-int(v))));
  return out;
}

int deficiency(const Multigraph& g, const Orientation& d, Vertex v) {
  if (d.dir.size() != g.edge_count())
    fail(ErrorKind::invalid_argument, "orientation does not match the graph");
  int def = 0;
  for (EdgeId e : g.incident(v)) {
    const Edge& ed = g.edges()[e];
    bool out = (d.dir[e] == Dir::forward) ? (ed.a == v) : (ed.b == v);
    def += out ? 1 : -1;
  }
  return def;
}

std::vector<int> deficiencies(const Multigraph& g, const Orientation& d) {
  if (d.dir.size() != g.edge_count())
    fail(ErrorKind::invalid_argument, "orientation does not match the graph");
  std::vector<int> def(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    Vertex from = d.dir[e] == Dir::forward ? ed.a : ed.b;
    Vertex to = d.dir[e] == Dir::forward ? ed.b : ed.a;
    def[g.index_of(from)] += 1;
    def[g.index_of(to)] -= 1;
  }
  return def;
}

int partial_deficiency(const Multigraph& g, const PartialOrientation& d, Vertex v) {
  int def = 0;
  for (EdgeId e : g.incident(v)) {
    if (!d.decided(e)) continue;
    const Edge& ed = g.edges()[e];
    bool out = (d.at(e) == Dir::forward) ? (ed.a == v) : (ed.b == v);
    def += out ? 1 : -1;
  }
  return def;
}

bool is_beta_orientation(const Multigraph& g, const Orientation& d, const Boundary& beta) {
  if (beta.value.size() != g.vertex_count())
    fail(ErrorKind::invalid_argument, "boundary does not match the graph");
  std::vector<int> def = deficiencies(g, d);
  for (std::size_t i = 0; i < def.size(); ++i)
    if (mod3(def[i]) != beta.value[i]) return false;
  return true;
}

namespace {

// Backtracking state for find_beta_orientation. Assignments are recorded on a
// trail so forced propagation unwinds together with the branch.
struct Solver {
  const Multigraph& g;
  std::vector<std::int8_t> dir;  // -1 undecided
  std::vector<int> delta;        // deficiency over decided edges, by position
  std::vector<int> rem;          // undecided incident edges, by position
  const std::vector<std::uint8_t>& beta;
  std::vector<EdgeId> trail;

  Solver(const Multigraph& graph, const Boundary& b)
      : g(graph),
        dir(graph.edge_count(), -1),
        delta(graph.vertex_count(), 0),
        rem(graph.vertex_count(), 0),
        beta(b.value) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      rem[i] = static_cast<int>(g.incident(g.vertices()[i]).size());
  }

  // A vertex stays satisfiable iff some s with |s| <= rem, s == rem (mod 2)
  // has delta + s == beta (mod 3). For rem >= 2 that is always the case, so
  // only the last one or two edges at a vertex can prune or force.
  bool assign(EdgeId e, Dir d) {
    dir[e] = static_cast<std::int8_t>(d);
    trail.push_back(e);
    const Edge& ed = g.edges()[e];
    std::size_t ia = g.index_of(ed.a), ib = g.index_of(ed.b);
    int sa = d == Dir::forward ? 1 : -1;
    delta[ia] += sa;
    delta[ib] -= sa;
    --rem[ia];
    --rem[ib];
    return propagate(ia) && propagate(ib);
  }

  bool force_out_of(std::size_t iv, EdgeId e, bool out) {
    const Edge& ed = g.edges()[e];
    bool v_is_a = g.index_of(ed.a) == iv;
    Dir d = (out == v_is_a) ? Dir::forward : Dir::reverse;
    return assign(e, d);
  }

  bool propagate(std::size_t iv) {
    if (rem[iv] == 0) return mod3(delta[iv]) == beta[iv];
    if (rem[iv] > 2) return true;
    int need = mod3(int(beta[iv]) - delta[iv]);
    Vertex v = g.vertices()[iv];
    if (rem[iv] == 1) {
      if (need == 0) return false;  // delta +- 1 cannot hit beta
      for (EdgeId e : g.incident(v))
        if (dir[e] < 0) return force_out_of(iv, e, need == 1);
      fail(ErrorKind::internal, "undecided count out of sync");
    }
    // rem == 2: s in {-2, 0, 2}; only s = +-2 forces both edges.
    if (need == 0) return true;
    bool out = (need == 2);
    EdgeId pending[2];
    int found = 0;
    for (EdgeId e : g.incident(v)) {
      if (dir[e] < 0) {
        pending[found++] = e;
        if (found == 2) break;
      }
    }
    if (found != 2) fail(ErrorKind::internal, "undecided count out of sync");
    if (!force_out_of(iv, pending[0], out)) return false;
    // the first forced assignment may have decided the second already
    if (dir[pending[1]] < 0) return force_out_of(iv, pending[1], out);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      EdgeId e = trail.back();
      trail.pop_back();
      const Edge& ed = g.edges()[e];
      std::size_t ia = g.index_of(ed.a), ib = g.index_of(ed.b);
      int sa = dir[e] == 0 ? 1 : -1;
      delta[ia] -= sa;
      delta[ib] += sa;
      ++rem[ia];
      ++rem[ib];
      dir[e] = -1;
    }
  }

  // Solve the undecided subgraph. When it splits into vertex-disjoint
  // components their constraints are independent, so each is solved on its
  // own: a later component can never repair an earlier one, and the
  // combination of per-component first solutions is still the first solution
  // in lexicographic edge order.
  bool search() {
    std::vector<EdgeId> open;
    for (EdgeId e = 0; e < dir.size(); ++e)
      if (dir[e] < 0) open.push_back(e);
    if (open.empty()) return true;

    std::vector<std::size_t> root(g.vertex_count());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (EdgeId e : open) {
      std::size_t a = find(g.index_of(g.edges()[e].a));
      std::size_t b = find(g.index_of(g.edges()[e].b));
      if (a != b) root[a] = b;
    }
    // components keyed by their smallest edge, visited in that order
    std::vector<std::pair<std::size_t, std::vector<EdgeId>>> comps;
    for (EdgeId e : open) {
      std::size_t r = find(g.index_of(g.edges()[e].a));
      bool placed = false;
      for (auto& [key, edges] : comps)
        if (key == r) {
          edges.push_back(e);
          placed = true;
          break;
        }
      if (!placed) comps.push_back({r, {e}});
    }
    for (auto& [key, edges] : comps)
      if (!search_component(edges, 0)) return false;
    return true;
  }

  bool search_component(const std::vector<EdgeId>& comp, std::size_t at) {
    while (at < comp.size() && dir[comp[at]] >= 0) ++at;
    if (at == comp.size()) return true;
    EdgeId e = comp[at];
    for (Dir d : {Dir::forward, Dir::reverse}) {
      std::size_t mark = trail.size();
      if (assign(e, d) && split_or_continue(comp, at + 1)) return true;
      undo_to(mark);
    }
    return false;
  }

  // propagation may have disconnected the component; re-split when it pays
  bool split_or_continue(const std::vector<EdgeId>& comp, std::size_t at) {
    std::size_t open = 0;
    for (std::size_t i = at; i < comp.size(); ++i) open += dir[comp[i]] < 0;
    if (open > 8) {
      std::vector<std::size_t> root(g.vertex_count());
      for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
      auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      std::size_t first_root = static_cast<std::size_t>(-1);
      bool split = false;
      for (std::size_t i = at; i < comp.size(); ++i) {
        if (dir[comp[i]] >= 0) continue;
        std::size_t a = find(g.index_of(g.edges()[comp[i]].a));
        std::size_t b = find(g.index_of(g.edges()[comp[i]].b));
        if (a != b) root[a] = b;
      }
      for (std::size_t i = at; i < comp.size(); ++i) {
        if (dir[comp[i]] >= 0) continue;
        std::size_t r = find(g.index_of(g.edges()[comp[i]].a));
        if (first_root == static_cast<std::size_t>(-1)) first_root = r;
        else if (r != first_root) split = true;
      }
      if (split) {
        std::vector<std::pair<std::size_t, std::vector<EdgeId>>> comps;
        for (std::size_t i = at; i < comp.size(); ++i) {
          if (dir[comp[i]] >= 0) continue;
          std::size_t r = find(g.index_of(g.edges()[comp[i]].a));
          bool placed = false;
          for (auto& [key, edges] : comps)
            if (key == r) {
              edges.push_back(comp[i]);
              placed = true;
              break;
            }
          if (!placed) comps.push_back({r, {comp[i]}});
        }
        for (auto& [key, edges] : comps)
          if (!search_component(edges, 0)) return false;
        return true;
      }
    }
    return search_component(comp, at);
  }
};

}  // namespace

std::optional<Orientation> find_beta_orientation(const Multigraph& g, const Boundary& beta,
                                                 const PartialOrientation& fixed) {
  require_valid_boundary(g, beta);
  if (fixed.dir.size() != g.edge_count())
    fail(ErrorKind::invalid_argument, "partial orientation does not match the graph");

  Solver s(g, beta);
  // vertices with no edges never reach propagate; they must carry beta = 0
  for (std::size_t iv = 0; iv < g.vertex_count(); ++iv)
    if (s.rem[iv] == 0 && beta.value[iv] != 0) return std::nullopt;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!fixed.decided(e)) continue;
    if (s.dir[e] >= 0) {
      // already forced by propagation; it must agree
      if (s.dir[e] != fixed.dir[e]) return std::nullopt;
      continue;
    }
    if (!s.assign(e, fixed.at(e))) return std::nullopt;
  }
  if (!s.search()) return std::nullopt;

  Orientation out;
  out.dir.reserve(g.edge_count());
  for (std::int8_t d : s.dir) out.dir.push_back(static_cast<Dir>(d));
  return out;
}

std::optional<Orientation> find_beta_orientation(const Multigraph& g, const Boundary& beta) {
  return find_beta_orientation(g, beta, PartialOrientation::all_undecided(g.edge_count()));
}

std::uint64_t count_beta_orientations(const Multigraph& g, const Boundary& beta,
                                      const Budget& budget) {
  require_valid_boundary(g, beta);
  const std::size_t m = g.edge_count();
  if (m > budget.oracle_edge_cap)
    fail(ErrorKind::budget, "edge count " + std::to_string(m) + " above the oracle cap " +
                                std::to_string(budget.oracle_edge_cap));

  // Gray-code walk over all orientations; each step flips one edge and
  // touches two vertices, keeping a running count of violated vertices.
  std::vector<int> delta(g.vertex_count(), 0);
  for (const Edge& ed : g.edges()) {
    delta[g.index_of(ed.a)] += 1;  // start from the all-forward orientation
    delta[g.index_of(ed.b)] -= 1;
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (mod3(delta[i]) != beta.value[i]) ++bad;

  std::vector<std::size_t> ea(m), eb(m);
  for (EdgeId e = 0; e < m; ++e) {
    ea[e] = g.index_of(g.edges()[e].a);
    eb[e] = g.index_of(g.edges()[e].b);
  }
  std::vector<char> rev(m, 0);

  auto touch = [&](std::size_t iv, int d) {
    bool was = mod3(delta[iv]) != beta.value[iv];
    delta[iv] += d;
    bool now = mod3(delta[iv]) != beta.value[iv];
    bad += std::size_t(now) - std::size_t(was);
  };

  std::uint64_t count = (bad == 0) ? 1 : 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    unsigned e = static_cast<unsigned>(__builtin_ctzll(i));  // bit flipped by gray code
    int s = rev[e] ? 1 : -1;  // flipping to reverse moves 2 units of deficiency
    rev[e] ^= 1;
    touch(ea[e], 2 * s);
    touch(eb[e], -2 * s);
    if (bad == 0) ++count;
  }
  return count;
}

Orientation reversed(const Orientation& d) {
  Orientation out;
  out.dir.reserve(d.dir.size());
  for (Dir x : d.dir) out.dir.push_back(flipped(x));
  return out;
}

namespace {

template <typename DirAt>
EdgeId minor_edge_impl(const Multigraph& g, Vertex x, DirAt dir_at) {
  if (g.degree(x) != 5)
    fail(ErrorKind::precondition,
         "minor-edge requires a 5-vertex, degree is " + std::to_string(g.degree(x)));
  EdgeId out_edge[5], in_edge[5];
  int outs = 0, ins = 0;
  for (EdgeId e : g.incident(x)) {
    const Edge& ed = g.edges()[e];
    bool out = (dir_at(e) == Dir::forward) ? (ed.a == x) : (ed.b == x);
    if (out)
      out_edge[outs++] = e;
    else
      in_edge[ins++] = e;
  }
  if (outs == 1 && ins == 4) return out_edge[0];
  if (ins == 1 && outs == 4) return in_edge[0];
  fail(ErrorKind::precondition, "no minor-edge: split at the vertex is " +
                                    std::to_string(outs) + "-" + std::to_string(ins) +
                                    ", not 4-1");
}

}  // namespace

EdgeId minor_edge(const Multigraph& g, const Orientation& d, Vertex x) {
  if (d.dir.size() != g.edge_count())
    fail(ErrorKind::invalid_argument, "orientation does not match the graph");
  return minor_edge_impl(g, x, [&](EdgeId e) { return d.dir[e]; });
}

EdgeId minor_edge(const Multigraph& g, const PartialOrientation& d, Vertex x) {
  for (EdgeId e : g.incident(x))
    if (!d.decided(e))
      fail(ErrorKind::precondition, "minor-edge needs every edge at the vertex decided");
  return minor_edge_impl(g, x, [&](EdgeId e) { return d.at(e); });
}

bool is_mod3_orientable(const Multigraph& g) {
  return find_beta_orientation(g, Boundary::zero(g)).has_value();
}

}  // namespace flow3
