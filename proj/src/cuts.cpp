#include "flow3/cuts.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace flow3 {

namespace {

void require_subset_nonempty_proper(const Multigraph& g, const VertexSet& a) {
  if (a.empty()) fail(ErrorKind::invalid_argument, "vertex set is empty");
  if (!is_vertex_subset(g, a)) fail(ErrorKind::invalid_argument, "unknown vertex in set");
  if (a.size() >= g.vertex_count())
    fail(ErrorKind::invalid_argument, "vertex set is not a proper subset");
}

// Edge endpoints as vertex positions, precomputed once per scan.
struct PositionedEdges {
  std::vector<std::uint32_t> pa, pb;
  explicit PositionedEdges(const Multigraph& g) {
    pa.reserve(g.edge_count());
    pb.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      pa.push_back(static_cast<std::uint32_t>(g.index_of(e.a)));
      pb.push_back(static_cast<std::uint32_t>(g.index_of(e.b)));
    }
  }
  std::size_t cut(std::uint64_t mask) const {
    std::size_t d = 0;
    for (std::size_t e = 0; e < pa.size(); ++e)
      d += ((mask >> pa[e]) ^ (mask >> pb[e])) & 1u;
    return d;
  }
};

void require_cut_cap(const Multigraph& g, const Budget& budget) {
  if (g.vertex_count() > budget.cut_vertex_cap)
    fail(ErrorKind::budget, "vertex count " + std::to_string(g.vertex_count()) +
                                " above the exhaustive cut cap " +
                                std::to_string(budget.cut_vertex_cap));
}

VertexSet mask_to_set(const Multigraph& g, std::uint64_t mask) {
  VertexSet s;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if ((mask >> i) & 1u) s.push_back(g.vertices()[i]);
  return s;
}

// All nonempty proper subsets (both sides) with d(A) <= k, as (mask, d).
std::vector<std::pair<std::uint64_t, std::size_t>> small_cut_masks(const Multigraph& g,
                                                                   std::size_t k) {
  PositionedEdges pe(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<std::uint64_t, std::size_t>> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::size_t d = pe.cut(mask);
    if (d <= k) out.emplace_back(mask, d);
  }
  return out;
}

bool contains_proper_small_subset(
    const std::vector<std::pair<std::uint64_t, std::size_t>>& small, std::uint64_t mask) {
  for (const auto& [b, bd] : small)
    if (b != mask && (mask & b) == b) return true;
  return false;
}

}  // namespace

std::size_t cut_size(const Multigraph& g, const VertexSet& a) {
  require_subset_nonempty_proper(g, a);
  auto in_a = [&](Vertex v) { return std::binary_search(a.begin(), a.end(), v); };
  std::size_t d = 0;
  for (const Edge& e : g.edges()) d += in_a(e.a) != in_a(e.b);
  return d;
}

std::vector<EdgeId> boundary_edges(const Multigraph& g, const VertexSet& a) {
  require_subset_nonempty_proper(g, a);
  auto in_a = [&](Vertex v) { return std::binary_search(a.begin(), a.end(), v); };
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_a(g.edges()[e].a) != in_a(g.edges()[e].b)) out.push_back(e);
  return out;
}

std::size_t edge_connectivity_exhaustive(const Multigraph& g, const Budget& budget) {
  if (g.vertex_count() < 2)
    fail(ErrorKind::precondition, "edge connectivity needs at least two vertices");
  require_cut_cap(g, budget);
  PositionedEdges pe(g);
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // one representative per complementary pair: sides containing position 0
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 0; rest < top; ++rest) {
    std::uint64_t mask = (rest << 1) | 1u;
    if (mask == ((std::uint64_t{1} << n) - 1)) continue;
    best = std::min(best, pe.cut(mask));
  }
  return best;
}

std::size_t edge_connectivity_maxflow(const Multigraph& g) {
  if (g.vertex_count() < 2)
    fail(ErrorKind::precondition, "edge connectivity needs at least two vertices");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> base(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    std::size_t a = g.index_of(e.a), b = g.index_of(e.b);
    base[a][b] += 1;
    base[b][a] += 1;
  }
  auto max_flow = [&](std::size_t s, std::size_t t) {
    std::vector<std::vector<int>> cap = base;
    int flow = 0;
    for (;;) {
      std::vector<int> parent(n, -1);
      parent[s] = static_cast<int>(s);
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty() && parent[t] < 0) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v)
          if (parent[v] < 0 && cap[u][v] > 0) {
            parent[v] = static_cast<int>(u);
            q.push(v);
          }
      }
      if (parent[t] < 0) return flow;
      int aug = std::numeric_limits<int>::max();
      for (std::size_t v = t; v != s; v = parent[v])
        aug = std::min(aug, cap[parent[v]][v]);
      for (std::size_t v = t; v != s; v = parent[v]) {
        cap[parent[v]][v] -= aug;
        cap[v][parent[v]] += aug;
      }
      flow += aug;
    }
  };
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t t = 1; t < n; ++t)
    best = std::min(best, static_cast<std::size_t>(max_flow(0, t)));
  return best;
}

std::size_t edge_connectivity(const Multigraph& g, const Budget& budget) {
  if (g.vertex_count() <= budget.cut_vertex_cap) return edge_connectivity_exhaustive(g, budget);
  return edge_connectivity_maxflow(g);
}

std::size_t essential_edge_connectivity(const Multigraph& g, const Budget& budget) {
  if (g.vertex_count() < 3)
    fail(ErrorKind::precondition, "essential edge connectivity needs at least three vertices");
  require_cut_cap(g, budget);
  PositionedEdges pe(g);
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 1; rest < top; ++rest) {
    std::uint64_t mask = (rest << 1) | 1u;
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < 2 || size > n - 2) continue;
    best = std::min(best, pe.cut(mask));
  }
  return best;  // SIZE_MAX when no nontrivial bipartition exists
}

std::vector<CutReport> enumerate_small_cuts(const Multigraph& g, std::size_t k,
                                            const Budget& budget) {
  require_cut_cap(g, budget);
  if (g.vertex_count() < 2) return {};
  auto small = small_cut_masks(g, k);
  std::vector<CutReport> out;
  for (const auto& [mask, d] : small) {
    if (!(mask & 1u)) continue;  // canonical side holds the smallest vertex
    out.push_back({mask_to_set(g, mask), d, !contains_proper_small_subset(small, mask)});
  }
  return out;
}

std::vector<VertexSet> critical_sets(const Multigraph& g, std::size_t k, const Budget& budget) {
  require_cut_cap(g, budget);
  if (edge_connectivity(g, budget) < k)
    fail(ErrorKind::precondition, "graph is not " + std::to_string(k) + "-edge-connected");
  auto small = small_cut_masks(g, k);
  std::vector<VertexSet> out;
  for (const auto& [mask, d] : small)
    if (!contains_proper_small_subset(small, mask)) out.push_back(mask_to_set(g, mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Multigraph, Vertex> apex_augment(const Multigraph& g, std::size_t k,
                                           const std::vector<std::size_t>& multiplicities,
                                           const Budget& budget) {
  auto crit = critical_sets(g, k, budget);
  if (crit.empty())
    fail(ErrorKind::precondition, "no critical sets: an isolated apex would be added");
  if (multiplicities.size() != crit.size())
    fail(ErrorKind::invalid_argument,
         "expected " + std::to_string(crit.size()) + " multiplicities, got " +
             std::to_string(multiplicities.size()));
  const Vertex apex = g.vertices().back() + 1;
  std::vector<Edge> extra;
  bool uniform = true;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    if (multiplicities[i] < 1)
      fail(ErrorKind::invalid_argument, "multiplicities must be at least 1");
    if (multiplicities[i] != 1) uniform = false;
    for (std::size_t c = 0; c < multiplicities[i]; ++c)
      extra.push_back({apex, crit[i].front()});
  }
  VertexSet vs = g.vertices();
  vs.push_back(apex);
  std::vector<Edge> es = g.edges();
  es.insert(es.end(), extra.begin(), extra.end());
  Multigraph out(std::move(vs), std::move(es));

  // cut bound of the construction, verified when the uniform case applies
  if (uniform && out.vertex_count() <= 14) {
    PositionedEdges pe(out);
    const std::size_t n = out.vertex_count();
    const std::size_t apex_pos = out.index_of(apex);
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    for (std::uint64_t rest = 0; rest < top; ++rest) {
      std::uint64_t mask = (rest << 1) | 1u;
      if (mask == ((std::uint64_t{1} << n) - 1)) continue;
      std::uint64_t side = mask;
      std::size_t size = static_cast<std::size_t>(__builtin_popcountll(side));
      bool is_apex_cut = (side == (std::uint64_t{1} << apex_pos)) ||
                         (size == n - 1 && !((side >> apex_pos) & 1u));
      if (is_apex_cut) continue;
      if (pe.cut(mask) < k + 1)
        fail(ErrorKind::internal, "augmented graph has a cut below k+1 away from the apex");
    }
  }
  return {std::move(out), apex};
}

namespace {

struct SplitSearch {
  const Multigraph& g;
  Vertex z;
  std::size_t k;
  const Budget& budget;
  std::vector<EdgeId> ends;  // unpaired edges at z, ascending
  std::vector<std::pair<Vertex, Vertex>> pairs;

  std::optional<Multigraph> run() {
    if (ends.empty()) return build();
    EdgeId first = ends.front();
    Vertex u = g.other_end(first, z);
    std::vector<EdgeId> rest(ends.begin() + 1, ends.end());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      Vertex v = g.other_end(rest[i], z);
      if (u == v) continue;  // would form a loop
      std::vector<EdgeId> remaining;
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (j != i) remaining.push_back(rest[j]);
      pairs.push_back({u, v});
      SplitSearch child{g, z, k, budget, std::move(remaining), pairs};
      if (auto got = child.run()) return got;
      pairs.pop_back();
    }
    return std::nullopt;
  }

  std::optional<Multigraph> build() const {
    VertexSet vs = complement_set(g, {z});
    std::vector<Edge> es;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges()[e];
      if (ed.a == z || ed.b == z) continue;
      es.push_back(ed);
    }
    for (const auto& [u, v] : pairs) es.push_back({u, v});
    Multigraph candidate(std::move(vs), std::move(es));
    if (!candidate.connected()) return std::nullopt;
    if (candidate.vertex_count() >= 2 && edge_connectivity(candidate, budget) < k)
      return std::nullopt;
    return candidate;
  }
};

}  // namespace

std::optional<Multigraph> mader_complete_split(const Multigraph& g, Vertex z, std::size_t k,
                                               const Budget& budget) {
  if (!g.has_vertex(z))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(z));
  if (g.degree(z) % 2 != 0)
    fail(ErrorKind::precondition, "complete splitting needs an even degree at the vertex");
  if (edge_connectivity(g, budget) < k)
    fail(ErrorKind::precondition, "graph is not " + std::to_string(k) + "-edge-connected");
  SplitSearch search{g, z, k, budget, g.incident(z), {}};
  return search.run();
}

}  // namespace flow3
