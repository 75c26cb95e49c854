#include "flow3/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace flow3 {

std::string canonical_code(const Multigraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices)
    fail(ErrorKind::budget, "canonical form capped at " + std::to_string(max_vertices) +
                                " vertices, got " + std::to_string(n));

  // multiplicity matrix over vertex positions
  std::vector<std::vector<std::uint8_t>> mult(n, std::vector<std::uint8_t>(n, 0));
  for (const Edge& e : g.edges()) {
    std::size_t a = g.index_of(e.a), b = g.index_of(e.b);
    ++mult[a][b];
    ++mult[b][a];
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::string best;
  do {
    std::string code;
    code.reserve(n * (n - 1) / 2 + 8);
    code.push_back(static_cast<char>('0' + n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        code.push_back(static_cast<char>('0' + mult[perm[i]][perm[j]]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) best = "0";
  return best;
}

bool isomorphic(const Multigraph& a, const Multigraph& b, std::size_t max_vertices) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a, max_vertices) == canonical_code(b, max_vertices);
}

}  // namespace flow3
