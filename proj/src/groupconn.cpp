#include "flow3/groupconn.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>

#include "flow3/canonical.hpp"
#include "parallel.hpp"

namespace flow3 {

namespace {
inline int mod3(int x) { return ((x % 3) + 3) % 3; }
}  // namespace

std::uint64_t boundary_space_size(const Multigraph& g) {
  if (g.vertex_count() <= 1) return 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i + 1 < g.vertex_count(); ++i) total *= 3;
  return total;
}

Boundary boundary_at_index(const Multigraph& g, std::uint64_t index) {
  Boundary beta = Boundary::zero(g);
  if (g.vertex_count() == 0) return beta;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < g.vertex_count(); ++i) {
    beta.value[i] = static_cast<std::uint8_t>(index % 3);
    sum += beta.value[i];
    index /= 3;
  }
  beta.value.back() = static_cast<std::uint8_t>(mod3(-sum));
  return beta;
}

Verdict is_z3_connected(const Multigraph& g, const ZMode& mode, const Budget& budget,
                        unsigned jobs) {
  Verdict verdict;
  verdict.exhaustive = mode.exhaustive;
  verdict.samples = mode.exhaustive ? 0 : mode.samples;
  verdict.seed = mode.exhaustive ? 0 : mode.seed;

  std::vector<Boundary> sampled;
  std::uint64_t total;
  if (mode.exhaustive) {
    if (g.vertex_count() > budget.z3_vertex_cap)
      fail(ErrorKind::budget,
           "exhaustive boundary scan capped at " + std::to_string(budget.z3_vertex_cap) +
               " vertices, got " + std::to_string(g.vertex_count()));
    total = boundary_space_size(g);
  } else {
    total = mode.samples;
    sampled.reserve(mode.samples);
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      Boundary beta = Boundary::zero(g);
      int sum = 0;
      for (std::size_t i = 0; i + 1 < g.vertex_count(); ++i) {
        beta.value[i] = static_cast<std::uint8_t>(rng() % 3);
        sum += beta.value[i];
      }
      if (!beta.value.empty()) beta.value.back() = static_cast<std::uint8_t>(mod3(-sum));
      sampled.push_back(std::move(beta));
    }
  }

  // The scan always completes (no early exit), so counters and the minimal
  // failing index are schedule independent.
  std::atomic<std::uint64_t> first_fail{total};
  detail::parallel_for(total, jobs, [&](std::uint64_t i) {
    const Boundary beta = mode.exhaustive ? boundary_at_index(g, i) : sampled[i];
    if (!find_beta_orientation(g, beta).has_value()) {
      std::uint64_t cur = first_fail.load();
      while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
      }
    }
  });

  verdict.stats.boundaries_tested = total;
  verdict.stats.solver_calls = total;
  std::uint64_t fail_idx = first_fail.load();
  verdict.holds = fail_idx == total;
  if (!verdict.holds)
    verdict.witness = mode.exhaustive ? boundary_at_index(g, fail_idx) : sampled[fail_idx];
  return verdict;
}

namespace {

// Early-exit variant used by the reduced check and the hunt, where only the
// bit matters.
bool all_boundaries_satisfiable(const Multigraph& g, const Budget& budget) {
  if (g.vertex_count() > budget.z3_vertex_cap)
    fail(ErrorKind::budget, "exhaustive boundary scan above the vertex cap");
  std::uint64_t total = boundary_space_size(g);
  for (std::uint64_t i = 0; i < total; ++i)
    if (!find_beta_orientation(g, boundary_at_index(g, i)).has_value()) return false;
  return true;
}

// Shared loop for the direct extendability checks. For one boundary, scans
// every pre-orientation of the edges at x whose deficiency matches beta(x)
// mod 3, and asks the solver for an extension. Pre-orientations that induce
// the same net contribution at every neighbor are equivalent (they differ by
// permuting parallel edges), so solve results are memoized on that key.
bool all_preorientations_extend(const Multigraph& g, Vertex x, const Boundary& beta,
                                const Budget& budget) {
  const auto& inc = g.incident(x);
  const std::size_t d = inc.size();
  if (d > budget.oracle_edge_cap)
    fail(ErrorKind::budget, "pre-orientation scan needs 2^" + std::to_string(d) +
                                " above the configured cap");
  const int beta_x = beta.value[g.index_of(x)];

  std::map<std::vector<int>, bool> memo;
  const std::uint64_t masks = std::uint64_t{1} << d;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    int outs = static_cast<int>(__builtin_popcountll(mask));
    int def = 2 * outs - static_cast<int>(d);
    if (mod3(def) != beta_x) continue;

    std::vector<int> key(g.vertex_count(), 0);
    for (std::size_t i = 0; i < d; ++i) {
      Vertex u = g.other_end(inc[i], x);
      key[g.index_of(u)] += ((mask >> i) & 1u) ? -1 : 1;  // out of x lowers u's need
    }
    auto it = memo.find(key);
    if (it != memo.end()) {
      if (!it->second) return false;
      continue;
    }

    PartialOrientation fixed = PartialOrientation::all_undecided(g.edge_count());
    for (std::size_t i = 0; i < d; ++i) {
      bool out = (mask >> i) & 1u;
      const Edge& ed = g.edges()[inc[i]];
      fixed.set(inc[i], (out == (ed.a == x)) ? Dir::forward : Dir::reverse);
    }
    bool ok = find_beta_orientation(g, beta, fixed).has_value();
    memo.emplace(std::move(key), ok);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_z3_extendable_at(const Multigraph& g, Vertex x, ExtendMethod method,
                         const Budget& budget) {
  if (!g.has_vertex(x))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(x));
  if (method == ExtendMethod::via_deletion)
    return is_z3_connected(delete_vertex(g, x), ZMode{}, budget).holds;

  if (g.vertex_count() > budget.z3_vertex_cap + 1)
    fail(ErrorKind::budget, "direct extendability scan above the vertex cap");
  std::uint64_t total = boundary_space_size(g);
  for (std::uint64_t i = 0; i < total; ++i)
    if (!all_preorientations_extend(g, x, boundary_at_index(g, i), budget)) return false;
  return true;
}

bool is_m3_extendable_at(const Multigraph& g, Vertex x, const Budget& budget) {
  if (!g.has_vertex(x))
    fail(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(x));
  return all_preorientations_extend(g, x, Boundary::zero(g), budget);
}

bool is_z3_reduced(const Multigraph& g, const Budget& budget) {
  const std::size_t n = g.vertex_count();
  if (n > budget.z3_vertex_cap)
    fail(ErrorKind::budget, "reduced check needs exhaustive scans above the vertex cap");
  // small subgraphs first: a digon or triangle-sized witness ends the scan early
  for (std::size_t size = 2; size <= n; ++size) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      VertexSet s;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) s.push_back(g.vertices()[i]);
      Multigraph sub = induced_subgraph(g, s);
      if (!sub.connected()) continue;
      if (all_boundaries_satisfiable(sub, budget)) return false;
    }
  }
  return true;
}

namespace {

struct HuntEnumerator {
  unsigned n;
  unsigned min_degree;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  std::vector<unsigned> adopted;  // chosen pair indexes
  std::vector<unsigned> degree;
  std::vector<Multigraph> out;

  void run() {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    degree.assign(n, 0);
    step(0);
  }

  void step(std::size_t next) {
    // a vertex whose pairs are exhausted must already meet the degree bound
    for (unsigned v = 0; v < n; ++v) {
      unsigned possible = degree[v];
      for (std::size_t p = next; p < pairs.size(); ++p)
        if (pairs[p].first == v || pairs[p].second == v) ++possible;
      if (possible < min_degree) return;
    }
    if (next == pairs.size()) {
      std::vector<Edge> es;
      for (unsigned idx : adopted)
        es.push_back({pairs[idx].first, pairs[idx].second});
      out.push_back(Multigraph::with_vertex_count(n, std::move(es)));
      return;
    }
    auto [u, v] = pairs[next];
    adopted.push_back(static_cast<unsigned>(next));
    ++degree[u];
    ++degree[v];
    step(next + 1);
    --degree[u];
    --degree[v];
    adopted.pop_back();
    step(next + 1);
  }
};

}  // namespace

std::vector<Multigraph> hunt_z3_reduced(unsigned min_degree, unsigned max_vertices,
                                        bool simple_only, const Budget& budget, unsigned jobs) {
  (void)simple_only;  // multiplicity is capped at 1 either way, see the header
  if (max_vertices > budget.hunt_vertex_cap)
    fail(ErrorKind::budget, "hunt capped at " + std::to_string(budget.hunt_vertex_cap) +
                                " vertices, got " + std::to_string(max_vertices));

  // enumerate candidates with isomorphism rejection, then filter
  std::vector<Multigraph> candidates;
  std::vector<std::string> codes;
  unsigned start = std::max(2u, min_degree + 1);
  for (unsigned n = start; n <= max_vertices; ++n) {
    HuntEnumerator en{n, min_degree, {}, {}, {}, {}};
    en.run();
    for (Multigraph& g : en.out) {
      std::string code = canonical_code(g, budget.hunt_vertex_cap);
      if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
        codes.push_back(std::move(code));
        candidates.push_back(std::move(g));
      }
    }
  }

  std::vector<char> keep(candidates.size(), 0);
  detail::parallel_for(candidates.size(), jobs, [&](std::uint64_t i) {
    keep[i] = is_z3_reduced(candidates[i], budget) ? 1 : 0;
  });

  std::vector<std::pair<std::string, Multigraph>> found;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) found.emplace_back(canonical_code(candidates[i], budget.hunt_vertex_cap),
                                    std::move(candidates[i]));
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Multigraph> out;
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace flow3
