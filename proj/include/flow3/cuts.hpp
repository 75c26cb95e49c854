#pragma once

#include <optional>
#include <vector>

#include "flow3/multigraph.hpp"

namespace flow3 {

struct CutReport {
  VertexSet side;    // canonical side: the one containing the smallest vertex
  std::size_t size;  // d(side)
  bool critical;     // d(B) > k for every nonempty proper B of side
};

std::size_t cut_size(const Multigraph& g, const VertexSet& a);
std::vector<EdgeId> boundary_edges(const Multigraph& g, const VertexSet& a);

/// Minimum d(A) over nonempty proper A. 0 for disconnected input; errors on a
/// single vertex. Dispatches to the exhaustive scan under the vertex cap and
/// to max-flow above it; the two are cross-checked in the tests.
std::size_t edge_connectivity(const Multigraph& g, const Budget& budget = {});
std::size_t edge_connectivity_exhaustive(const Multigraph& g, const Budget& budget = {});
std::size_t edge_connectivity_maxflow(const Multigraph& g);

/// Largest k such that every cut of size below k isolates a vertex, i.e. the
/// minimum over nontrivial cuts. SIZE_MAX when every cut is trivial (|V|=3).
std::size_t essential_edge_connectivity(const Multigraph& g, const Budget& budget = {});

/// All cuts d(A) <= k, one representative per complementary pair.
std::vector<CutReport> enumerate_small_cuts(const Multigraph& g, std::size_t k,
                                            const Budget& budget = {});

/// All distinct k-critical sets, sorted lexicographically. Requires G to be
/// k-edge-connected.
std::vector<VertexSet> critical_sets(const Multigraph& g, std::size_t k,
                                     const Budget& budget = {});

/// New vertex joined into each k-critical set at that set's smallest vertex,
/// with the given edge multiplicities. Returns the graph and the new vertex.
std::pair<Multigraph, Vertex> apex_augment(const Multigraph& g, std::size_t k,
                                           const std::vector<std::size_t>& multiplicities,
                                           const Budget& budget = {});

/// First complete splitting at z (pairings scanned in ascending edge-id
/// order) whose result is k-edge-connected; nullopt after exhausting all
/// pairings. Pairs that would form a loop are skipped.
std::optional<Multigraph> mader_complete_split(const Multigraph& g, Vertex z, std::size_t k,
                                               const Budget& budget = {});

}  // namespace flow3
