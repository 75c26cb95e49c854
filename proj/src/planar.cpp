#include "flow3/planar.hpp"

#include <algorithm>
#include <string>

#include "flow3/orient.hpp"

namespace flow3 {

namespace {

// Darts are directed edge traversals: dart 2e + t leaves from end t of edge e.
std::size_t dart_id(const EdgeEnd& from) { return 2 * std::size_t(from.edge) + from.end; }

struct RotationIndex {
  // for each edge end: the vertex position it sits at and its slot in the rotation
  std::vector<std::size_t> at_vertex;  // by dart id of the end
  std::vector<std::size_t> slot;

  RotationIndex(const RotationSystem& rot, const Multigraph& g) {
    if (rot.order.size() != g.vertex_count())
      fail(ErrorKind::invalid_argument, "rotation does not cover every vertex");
    at_vertex.assign(2 * g.edge_count(), static_cast<std::size_t>(-1));
    slot.assign(2 * g.edge_count(), 0);
    for (std::size_t vi = 0; vi < rot.order.size(); ++vi) {
      Vertex v = g.vertices()[vi];
      for (std::size_t s = 0; s < rot.order[vi].size(); ++s) {
        const EdgeEnd& end = rot.order[vi][s];
        if (end.edge >= g.edge_count() || end.end > 1)
          fail(ErrorKind::invalid_argument, "rotation lists an unknown edge end");
        const Edge& ed = g.edges()[end.edge];
        Vertex expect = end.end == 0 ? ed.a : ed.b;
        if (expect != v)
          fail(ErrorKind::invalid_argument,
               "edge end " + std::to_string(end.edge) + (end.end ? "b" : "a") +
                   " listed at the wrong vertex");
        std::size_t id = dart_id(end);
        if (at_vertex[id] != static_cast<std::size_t>(-1))
          fail(ErrorKind::invalid_argument, "edge end listed twice in the rotation");
        at_vertex[id] = vi;
        slot[id] = s;
      }
    }
    for (std::size_t id = 0; id < at_vertex.size(); ++id)
      if (at_vertex[id] == static_cast<std::size_t>(-1))
        fail(ErrorKind::invalid_argument, "rotation misses an edge end");
  }
};

}  // namespace

std::vector<Face> faces(const RotationSystem& rot, const Multigraph& g) {
  if (!g.connected()) fail(ErrorKind::precondition, "embedding needs a connected graph");
  RotationIndex index(rot, g);

  auto next_dart = [&](EdgeEnd from) -> EdgeEnd {
    EdgeEnd arrive{from.edge, static_cast<std::uint8_t>(1 - from.end)};
    std::size_t id = dart_id(arrive);
    std::size_t vi = index.at_vertex[id];
    const auto& ring = rot.order[vi];
    std::size_t s = (index.slot[id] + 1) % ring.size();
    return ring[s];
  };

  std::vector<char> used(2 * g.edge_count(), 0);
  std::vector<Face> out;
  for (std::size_t start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    Face face;
    EdgeEnd d{static_cast<EdgeId>(start / 2), static_cast<std::uint8_t>(start % 2)};
    while (!used[dart_id(d)]) {
      used[dart_id(d)] = 1;
      face.darts.push_back(d);
      d = next_dart(d);
    }
    out.push_back(std::move(face));
  }

  long euler = long(g.vertex_count()) - long(g.edge_count()) + long(out.size());
  if (euler != 2)
    fail(ErrorKind::precondition,
         "not genus 0: V - E + F = " + std::to_string(euler) + " with F = " +
             std::to_string(out.size()));
  return out;
}

DualCorrespondence dual(const RotationSystem& rot, const Multigraph& g) {
  std::vector<Face> fs = faces(rot, g);
  std::vector<std::size_t> face_of(2 * g.edge_count(), 0);
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (const EdgeEnd& d : fs[f].darts) face_of[dart_id(d)] = f;

  std::vector<Edge> dual_edges;
  dual_edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::size_t f0 = face_of[2 * std::size_t(e)];
    std::size_t f1 = face_of[2 * std::size_t(e) + 1];
    if (f0 == f1)
      fail(ErrorKind::precondition,
           "edge " + std::to_string(e) + " is a bridge: its dual would be a loop");
    dual_edges.push_back({static_cast<Vertex>(f0), static_cast<Vertex>(f1)});
  }

  DualCorrespondence out;
  out.face_count = fs.size();
  out.dual_graph = Multigraph::with_vertex_count(fs.size(), std::move(dual_edges));
  out.primal_to_dual.resize(g.edge_count());
  out.dual_to_primal.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.primal_to_dual[e] = e;  // dual edges are built in primal edge order
    out.dual_to_primal[e] = e;
  }
  return out;
}

std::optional<std::vector<std::uint8_t>> chromatic_3(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    std::size_t a = g.index_of(e.a), b = g.index_of(e.b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  std::vector<std::uint8_t> color(n, 3);
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::uint8_t c = 0; c < 3; ++c) {
      bool ok = true;
      for (std::size_t u : adj[v])
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
    }
    color[v] = 3;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return color;
}

DualityVerdict duality_check(const RotationSystem& rot, const Multigraph& g) {
  DualCorrespondence d = dual(rot, g);
  DualityVerdict verdict;
  verdict.mod3_orientable = is_mod3_orientable(g);
  verdict.dual_three_colorable = chromatic_3(d.dual_graph).has_value();
  return verdict;
}

}  // namespace flow3
