#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flow3/multigraph.hpp"
#include "flow3/orient.hpp"

// Test-side oracles, kept independent of the library code paths they check.

namespace testers {

using namespace flow3;

// d(A) by direct edge scan over an explicit side mask (bit i = vertex position i).
inline std::size_t brute_cut(const Multigraph& g, std::uint64_t mask) {
  std::size_t d = 0;
  for (const Edge& e : g.edges()) {
    bool ina = (mask >> g.index_of(e.a)) & 1u;
    bool inb = (mask >> g.index_of(e.b)) & 1u;
    d += ina != inb;
  }
  return d;
}

// min cut by enumerating every bipartition
inline std::size_t brute_edge_connectivity(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask)
    best = std::min(best, brute_cut(g, mask));
  return best;
}

// number of total orientations meeting beta and extending `fixed`
inline std::uint64_t brute_count_orientations(const Multigraph& g, const Boundary& beta,
                                              const PartialOrientation* fixed = nullptr) {
  const std::size_t m = g.edge_count();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool ok = true;
    if (fixed) {
      for (EdgeId e = 0; e < m && ok; ++e)
        if (fixed->decided(e) && ((mask >> e) & 1u) != (fixed->at(e) == Dir::reverse ? 1u : 0u))
          ok = false;
      if (!ok) continue;
    }
    std::vector<int> def(g.vertex_count(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edges()[e];
      bool rev = (mask >> e) & 1u;
      def[g.index_of(rev ? ed.b : ed.a)] += 1;
      def[g.index_of(rev ? ed.a : ed.b)] -= 1;
    }
    for (std::size_t i = 0; i < def.size() && ok; ++i)
      if (((def[i] % 3) + 3) % 3 != beta.value[i]) ok = false;
    if (ok) ++count;
  }
  return count;
}

inline Orientation orientation_from_mask(const Multigraph& g, std::uint64_t mask) {
  Orientation d;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    d.dir.push_back(((mask >> e) & 1u) ? Dir::reverse : Dir::forward);
  return d;
}

inline VertexSet set_of(std::initializer_list<Vertex> vs) { return VertexSet(vs); }

inline std::string data_path(const std::string& rel) {
  return std::string(FLOW3_DATA_DIR) + "/" + rel;
}

}  // namespace testers
