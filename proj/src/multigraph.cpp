#include "flow3/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace flow3 {

Multigraph::Multigraph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail(ErrorKind::invalid_argument, "duplicate vertex identifier");
  incident_.resize(vertices_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.a == ed.b)
      fail(ErrorKind::invalid_argument,
           "loop edge " + std::to_string(ed.a) + "-" + std::to_string(ed.b));
    incident_[index_of(ed.a)].push_back(e);
    incident_[index_of(ed.b)].push_back(e);
  }
}

Multigraph Multigraph::with_vertex_count(std::size_t n, std::vector<Edge> edges) {
  VertexSet vs(n);
  std::iota(vs.begin(), vs.end(), Vertex{0});
  return Multigraph(std::move(vs), std::move(edges));
}

Multigraph Multigraph::complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j});
  return with_vertex_count(n, std::move(es));
}

Edge Multigraph::edge(EdgeId e) const {
  if (e >= edges_.size())
    fail(ErrorKind::invalid_argument, "unknown edge id " + std::to_string(e));
  return edges_[e];
}

bool Multigraph::has_vertex(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Multigraph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Multigraph::degree(Vertex v) const { return incident_[index_of(v)].size(); }

const std::vector<EdgeId>& Multigraph::incident(Vertex v) const {
  return incident_[index_of(v)];
}

Vertex Multigraph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edge(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  fail(ErrorKind::invalid_argument, "edge " + std::to_string(e) + " is not at vertex " +
                                        std::to_string(v));
}

bool Multigraph::connected() const {
  if (vertices_.size() <= 1) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t p = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[p]) {
      std::size_t q = index_of(other_end(e, vertices_[p]));
      if (!seen[q]) {
        seen[q] = 1;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  return reached == vertices_.size();
}

Vertex EdgeMap::vertex_image(Vertex old) const {
  for (const auto& [from, to] : vertex_to_new)
    if (from == old) return to;
  fail(ErrorKind::invalid_argument, "vertex " + std::to_string(old) + " not in map");
}

static void require_subset(const Multigraph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!g.has_vertex(v))
      fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(v));
}

bool is_vertex_subset(const Multigraph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!g.has_vertex(v)) return false;
  return true;
}

VertexSet complement_set(const Multigraph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : g.vertices())
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  return out;
}

std::pair<Multigraph, EdgeMap> contract(const Multigraph& g, const VertexSet& s) {
  if (s.empty()) fail(ErrorKind::invalid_argument, "contract: empty vertex set");
  require_subset(g, s);
  const Vertex merged = s.front();  // s is sorted
  auto in_s = [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); };

  EdgeMap map;
  map.edge_to_new.assign(g.edge_count(), EdgeMap::deleted);
  for (Vertex v : g.vertices())
    map.vertex_to_new.emplace_back(v, in_s(v) ? merged : v);

  VertexSet vs;
  for (Vertex v : g.vertices())
    if (!in_s(v) || v == merged) vs.push_back(v);

  std::vector<Edge> es;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge ed = g.edges()[e];
    Vertex na = in_s(ed.a) ? merged : ed.a;
    Vertex nb = in_s(ed.b) ? merged : ed.b;
    if (na == nb) continue;  // internal edge, dropped (graphs stay loop-free)
    map.edge_to_new[e] = static_cast<EdgeId>(es.size());
    es.push_back({na, nb});
  }
  return {Multigraph(std::move(vs), std::move(es)), std::move(map)};
}

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s) {
  require_subset(g, s);
  auto in_s = [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
  std::vector<Edge> es;
  for (const Edge& ed : g.edges())
    if (in_s(ed.a) && in_s(ed.b)) es.push_back(ed);
  return Multigraph(s, std::move(es));
}

Multigraph delete_vertex(const Multigraph& g, Vertex x) {
  if (!g.has_vertex(x))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(x));
  return induced_subgraph(g, complement_set(g, {x}));
}

Multigraph add_edges(const Multigraph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> es = g.edges();
  es.insert(es.end(), extra.begin(), extra.end());
  return Multigraph(g.vertices(), std::move(es));
}

}  // namespace flow3
