#pragma once

#include <string>

#include "flow3/multigraph.hpp"

namespace flow3 {

/// Canonical form of a multigraph by adjacency-matrix minimization over all
/// vertex permutations. Equal codes iff isomorphic. Brute force; bounded by
/// max_vertices (errors above it).
std::string canonical_code(const Multigraph& g, std::size_t max_vertices = 8);

bool isomorphic(const Multigraph& a, const Multigraph& b, std::size_t max_vertices = 8);

}  // namespace flow3
