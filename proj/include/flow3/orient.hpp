#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flow3/multigraph.hpp"

namespace flow3 {

enum class Dir : std::uint8_t { forward = 0, reverse = 1 };

inline Dir flipped(Dir d) { return d == Dir::forward ? Dir::reverse : Dir::forward; }

/// Total orientation of a host graph, indexed by edge id.
/// forward orients edge (a, b) as a -> b.
struct Orientation {
  std::vector<Dir> dir;
};

/// Per-edge direction with undecided entries (-1).
struct PartialOrientation {
  std::vector<std::int8_t> dir;

  static PartialOrientation all_undecided(std::size_t edge_count) {
    PartialOrientation p;
    p.dir.assign(edge_count, -1);
    return p;
  }
  bool decided(EdgeId e) const { return dir.at(e) >= 0; }
  Dir at(EdgeId e) const { return static_cast<Dir>(dir.at(e)); }
  void set(EdgeId e, Dir d) { dir.at(e) = static_cast<std::int8_t>(d); }
  std::size_t decided_count() const;
};

/// Z3 values per vertex position (the order of Multigraph::vertices()).
/// A valid boundary sums to 0 mod 3.
struct Boundary {
  std::vector<std::uint8_t> value;

  static Boundary zero(const Multigraph& g) {
    Boundary b;
    b.value.assign(g.vertex_count(), 0);
    return b;
  }
  std::uint8_t at(const Multigraph& g, Vertex v) const { return value.at(g.index_of(v)); }
};

bool boundary_valid(const Multigraph& g, const Boundary& beta);
void require_valid_boundary(const Multigraph& g, const Boundary& beta);
Boundary negated(const Multigraph& g, const Boundary& beta);

int deficiency(const Multigraph& g, const Orientation& d, Vertex v);
std::vector<int> deficiencies(const Multigraph& g, const Orientation& d);
/// Deficiency at v counting only the decided edges.
int partial_deficiency(const Multigraph& g, const PartialOrientation& d, Vertex v);

bool is_beta_orientation(const Multigraph& g, const Orientation& d, const Boundary& beta);

/// Depth-first search in ascending edge-id order (forward tried first), with
/// per-vertex feasibility pruning and forced-edge propagation. Returns the
/// first solution in that order, so output is deterministic.
std::optional<Orientation> find_beta_orientation(const Multigraph& g, const Boundary& beta,
                                                 const PartialOrientation& fixed);
std::optional<Orientation> find_beta_orientation(const Multigraph& g, const Boundary& beta);

/// Exhaustive 2^m oracle; independent of the search path above.
std::uint64_t count_beta_orientations(const Multigraph& g, const Boundary& beta,
                                      const Budget& budget = {});

Orientation reversed(const Orientation& d);

/// At a 5-vertex split 4-1, the lone edge oriented against the majority.
/// Errors when the degree is not 5 or the split is not 4-1.
EdgeId minor_edge(const Multigraph& g, const Orientation& d, Vertex x);
EdgeId minor_edge(const Multigraph& g, const PartialOrientation& d, Vertex x);

bool is_mod3_orientable(const Multigraph& g);

}  // namespace flow3
