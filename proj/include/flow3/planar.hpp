#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flow3/multigraph.hpp"

namespace flow3 {

/// One end of an edge: end 0 sits at edge.a, end 1 at edge.b.
struct EdgeEnd {
  EdgeId edge;
  std::uint8_t end;
  bool operator==(const EdgeEnd&) const = default;
};

/// Plane embedding as cyclic orders of edge-ends around vertices, indexed by
/// vertex position. Embeddings are inputs; faces() certifies them via Euler.
struct RotationSystem {
  std::vector<std::vector<EdgeEnd>> order;
};

/// A facial walk as a sequence of darts; dart (e, from) traverses e starting
/// at its `from` end.
struct Face {
  std::vector<EdgeEnd> darts;
};

/// Facial walks of the embedding. Errors unless the rotation covers every
/// edge-end exactly once and |V| - |E| + |F| = 2 holds (genus 0, connected).
std::vector<Face> faces(const RotationSystem& rot, const Multigraph& g);

struct DualCorrespondence {
  Multigraph dual_graph;                 // one vertex per face
  std::vector<EdgeId> primal_to_dual;    // bijection on edge ids
  std::vector<EdgeId> dual_to_primal;
  std::size_t face_count;
};

/// Dual graph of the embedding. A bridge would give a dual loop, which the
/// loop-free model cannot hold, so bridges are rejected.
DualCorrespondence dual(const RotationSystem& rot, const Multigraph& g);

/// Proper 3-coloring (parallel edges collapse) or nullopt. Backtracking in
/// vertex order; deterministic.
std::optional<std::vector<std::uint8_t>> chromatic_3(const Multigraph& g);

struct DualityVerdict {
  bool mod3_orientable;
  bool dual_three_colorable;
  bool equivalent() const { return mod3_orientable == dual_three_colorable; }
};

/// Both sides of the flow/coloring duality on one embedded graph.
DualityVerdict duality_check(const RotationSystem& rot, const Multigraph& g);

}  // namespace flow3
