#pragma once

#include <utility>
#include <vector>

#include "flow3/common.hpp"

namespace flow3 {

/// An undirected edge; the endpoint order (a, b) is part of the value and is
/// what orientations refer to (forward = a -> b).
struct Edge {
  Vertex a;
  Vertex b;
};

/// Loop-free multigraph with stable edge identifiers. Edge ids are the
/// positions in edges(); builders and file readers assign them in input
/// order. Immutable after construction: every operation returns a new graph.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(VertexSet vertices, std::vector<Edge> edges);

  /// Vertices 0..n-1.
  static Multigraph with_vertex_count(std::size_t n, std::vector<Edge> edges);
  static Multigraph complete(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Edge edge(EdgeId e) const;

  bool has_vertex(Vertex v) const noexcept;
  /// Position of v in vertices(); errors on unknown v.
  std::size_t index_of(Vertex v) const;
  std::size_t degree(Vertex v) const;
  /// Incident edge ids at v, ascending. Parallel edges appear once each.
  const std::vector<EdgeId>& incident(Vertex v) const;
  Vertex other_end(EdgeId e, Vertex v) const;

  bool connected() const;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;  // by vertex position
};

/// Provenance of a contraction: where every old edge and vertex went.
struct EdgeMap {
  static constexpr EdgeId deleted = static_cast<EdgeId>(-1);
  std::vector<EdgeId> edge_to_new;                       // by old edge id
  std::vector<std::pair<Vertex, Vertex>> vertex_to_new;  // old -> new

  bool edge_deleted(EdgeId e) const { return edge_to_new.at(e) == deleted; }
  Vertex vertex_image(Vertex old) const;
};

/// Merge S into a single vertex (the smallest id in S); edges internal to S
/// are deleted, everything else keeps its order with ids renumbered.
std::pair<Multigraph, EdgeMap> contract(const Multigraph& g, const VertexSet& s);

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& s);
Multigraph delete_vertex(const Multigraph& g, Vertex x);
/// New graph with extra edges appended after the existing ones.
Multigraph add_edges(const Multigraph& g, const std::vector<Edge>& extra);

bool is_vertex_subset(const Multigraph& g, const VertexSet& s);
VertexSet complement_set(const Multigraph& g, const VertexSet& s);

}  // namespace flow3
