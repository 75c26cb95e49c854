#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "flow3/multigraph.hpp"
#include "flow3/orient.hpp"

namespace flow3 {

/// Two complete blobs of the given size joined by join_edges edges between
/// matching vertices (vertex i of the first blob to vertex i of the second).
Multigraph blob_join(std::size_t blob, std::size_t join_edges);

/// The named graphs every suite leans on: k4 k5 k6 k7 w digon triangle
/// two_k6_join4 two_k7_join4 two_k7_join5.
std::vector<std::pair<std::string, Multigraph>> curated_graphs();

/// Seeded connected loop-free multigraphs with n <= max_n and m <= max_m.
/// Same seed, same byte-identical corpus: the generator draws from a
/// mt19937_64 with plain modulo reduction, nothing platform dependent.
std::vector<Multigraph> random_corpus(std::uint64_t seed, std::size_t count,
                                      std::size_t max_n = 6, std::size_t max_m = 12);

Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_n,
                                       std::size_t max_m);

/// Seeded graphs on n vertices with edge connectivity at least k, found by
/// rejection sampling over random multigraphs of the given density.
std::vector<Multigraph> random_k_edge_connected(std::uint64_t seed, std::size_t count,
                                                std::size_t n, std::size_t k,
                                                std::size_t edges);

Boundary random_boundary(std::mt19937_64& rng, const Multigraph& g);

}  // namespace flow3
