#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flow3/multigraph.hpp"
#include "flow3/orient.hpp"

namespace flow3 {

struct SolveStats {
  std::uint64_t boundaries_tested = 0;
  std::uint64_t solver_calls = 0;
};

/// Exhaustive scans all 3^(n-1) boundaries (one vertex value is forced by the
/// zero-sum constraint); sampled draws `samples` seeded boundaries and can
/// only ever disprove connectivity.
struct ZMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static ZMode sample(std::uint64_t count, std::uint64_t seed) { return {false, count, seed}; }
};

struct Verdict {
  bool holds;
  std::optional<Boundary> witness;  // a boundary with no orientation
  SolveStats stats;
  bool exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Boundary with the given enumeration index (digits in Z3 over the first
/// n-1 vertex positions, least significant first; the last value is forced).
Boundary boundary_at_index(const Multigraph& g, std::uint64_t index);
std::uint64_t boundary_space_size(const Multigraph& g);

Verdict is_z3_connected(const Multigraph& g, const ZMode& mode = {}, const Budget& budget = {},
                        unsigned jobs = 1);

enum class ExtendMethod { direct, via_deletion };

/// direct: every boundary and every compatible pre-orientation of the edges
/// at x extends. via_deletion: G - x is Z3-connected. The two must agree.
bool is_z3_extendable_at(const Multigraph& g, Vertex x, ExtendMethod method,
                         const Budget& budget = {});

/// Every pre-orientation of the edges at x balanced mod 3 extends to a mod
/// 3-orientation.
bool is_m3_extendable_at(const Multigraph& g, Vertex x, const Budget& budget = {});

/// No connected induced subgraph on at least two vertices is Z3-connected.
/// Induced subgraphs suffice by edge-addition monotonicity.
bool is_z3_reduced(const Multigraph& g, const Budget& budget = {});

/// All pairwise non-isomorphic Z3-reduced graphs with the given minimum
/// degree, up to max_vertices, sorted by canonical form. Multigraph mode caps
/// edge multiplicity at 1: a digon is Z3-connected, so higher multiplicities
/// cannot appear in a Z3-reduced graph.
std::vector<Multigraph> hunt_z3_reduced(unsigned min_degree, unsigned max_vertices,
                                        bool simple_only = true, const Budget& budget = {},
                                        unsigned jobs = 1);

}  // namespace flow3
