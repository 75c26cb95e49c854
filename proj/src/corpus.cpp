#include "flow3/corpus.hpp"

#include "flow3/cuts.hpp"
#include "flow3/gadgets.hpp"

namespace flow3 {

Multigraph blob_join(std::size_t blob, std::size_t join_edges) {
  if (join_edges > blob)
    fail(ErrorKind::invalid_argument, "more join edges than blob vertices");
  std::vector<Edge> es;
  for (Vertex i = 0; i < blob; ++i)
    for (Vertex j = i + 1; j < blob; ++j) es.push_back({i, j});
  for (Vertex i = 0; i < blob; ++i)
    for (Vertex j = i + 1; j < blob; ++j)
      es.push_back({static_cast<Vertex>(blob + i), static_cast<Vertex>(blob + j)});
  for (Vertex i = 0; i < join_edges; ++i)
    es.push_back({i, static_cast<Vertex>(blob + i)});
  return Multigraph::with_vertex_count(2 * blob, std::move(es));
}

std::vector<std::pair<std::string, Multigraph>> curated_graphs() {
  std::vector<std::pair<std::string, Multigraph>> out;
  out.emplace_back("k4", Multigraph::complete(4));
  out.emplace_back("k5", Multigraph::complete(5));
  out.emplace_back("k6", Multigraph::complete(6));
  out.emplace_back("k7", Multigraph::complete(7));
  out.emplace_back("w", doubled_wheel());
  out.emplace_back("digon", Multigraph::with_vertex_count(2, {{0, 1}, {0, 1}}));
  out.emplace_back("triangle", Multigraph::with_vertex_count(3, {{0, 1}, {1, 2}, {2, 0}}));
  out.emplace_back("two_k6_join4", blob_join(6, 4));
  out.emplace_back("two_k7_join4", blob_join(7, 4));
  out.emplace_back("two_k7_join5", blob_join(7, 5));
  return out;
}

Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_n,
                                       std::size_t max_m) {
  for (;;) {
    std::size_t n = 2 + rng() % (max_n - 1);
    std::size_t lo = n - 1;  // spanning tree at least
    std::size_t m = lo + rng() % (max_m - lo + 1);
    std::vector<Edge> es;
    // random recursive tree keeps it connected, extras fill in parallels
    for (Vertex v = 1; v < n; ++v)
      es.push_back({static_cast<Vertex>(rng() % v), v});
    while (es.size() < m) {
      Vertex u = static_cast<Vertex>(rng() % n);
      Vertex v = static_cast<Vertex>(rng() % n);
      if (u == v) continue;
      es.push_back({u, v});
    }
    return Multigraph::with_vertex_count(n, std::move(es));
  }
}

std::vector<Multigraph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                      std::size_t max_m) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_connected_multigraph(rng, max_n, max_m));
  return out;
}

std::vector<Multigraph> random_k_edge_connected(std::uint64_t seed, std::size_t count,
                                                std::size_t n, std::size_t k,
                                                std::size_t edges) {
  if (edges < n * k / 2)
    fail(ErrorKind::invalid_argument, "too few edges for the requested connectivity");
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  while (out.size() < count) {
    std::vector<Edge> es;
    for (Vertex v = 1; v < n; ++v)
      es.push_back({static_cast<Vertex>(rng() % v), v});
    while (es.size() < edges) {
      Vertex u = static_cast<Vertex>(rng() % n);
      Vertex v = static_cast<Vertex>(rng() % n);
      if (u == v) continue;
      es.push_back({u, v});
    }
    Multigraph g = Multigraph::with_vertex_count(n, std::move(es));
    if (edge_connectivity(g) >= k) out.push_back(std::move(g));
  }
  return out;
}

Boundary random_boundary(std::mt19937_64& rng, const Multigraph& g) {
  Boundary beta = Boundary::zero(g);
  int sum = 0;
  for (std::size_t i = 0; i + 1 < g.vertex_count(); ++i) {
    beta.value[i] = static_cast<std::uint8_t>(rng() % 3);
    sum += beta.value[i];
  }
  if (!beta.value.empty())
    beta.value.back() = static_cast<std::uint8_t>(((-sum) % 3 + 3) % 3);
  return beta;
}

}  // namespace flow3
