#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "flow3/canonical.hpp"
#include "flow3/corpus.hpp"
#include "flow3/cuts.hpp"
#include "flow3/gadgets.hpp"
#include "flow3/io.hpp"
#include "helpers.hpp"

using namespace flow3;
using namespace testers;

TEST_CASE("multigraph basics") {
  Multigraph g = Multigraph::with_vertex_count(3, {{0, 1}, {1, 2}, {0, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(2) == 1);
  CHECK(g.other_end(1, 1) == 2);
  CHECK(g.connected());
  CHECK_THROWS_AS(Multigraph::with_vertex_count(2, {{0, 0}}), Error);
  CHECK_THROWS_AS((void)g.index_of(9), Error);
}

TEST_CASE("contract a triangle edge pair") {
  Multigraph tri = Multigraph::with_vertex_count(3, {{0, 1}, {1, 2}, {2, 0}});
  auto [q, map] = contract(tri, {0, 1});
  CHECK(q.vertex_count() == 2);
  CHECK(q.edge_count() == 2);  // the contracted edge disappears, a digon remains
  CHECK(map.edge_deleted(0));
  CHECK_FALSE(map.edge_deleted(1));
  CHECK(map.vertex_image(1) == 0);
  CHECK(map.vertex_image(2) == 2);
}

TEST_CASE("contract a single vertex is the identity up to ids") {
  Multigraph k4 = Multigraph::complete(4);
  auto [q, map] = contract(k4, {2});
  CHECK(q.vertex_count() == 4);
  CHECK(q.edge_count() == 6);
  for (EdgeId e = 0; e < 6; ++e) CHECK(map.edge_to_new[e] == e);
  CHECK(isomorphic(q, k4));
}

TEST_CASE("contracting one blob of a 4-edge join leaves a degree-4 apex") {
  Multigraph g = blob_join(6, 4);
  VertexSet blob2{6, 7, 8, 9, 10, 11};
  auto [q, map] = contract(g, blob2);
  CHECK(q.vertex_count() == 7);
  CHECK(q.degree(6) == 4);  // merged vertex
  for (Vertex v = 0; v < 4; ++v) CHECK(q.degree(v) == 6);
  for (Vertex v = 4; v < 6; ++v) CHECK(q.degree(v) == 5);
  // merged degree equals d(S) in the original
  CHECK(cut_size(g, blob2) == 4);
}

TEST_CASE("contract rejects bad input") {
  Multigraph k4 = Multigraph::complete(4);
  CHECK_THROWS_AS(contract(k4, {}), Error);
  CHECK_THROWS_AS(contract(k4, {7}), Error);
}

TEST_CASE("graph file round trip is byte exact") {
  std::string text = "vertices 4\nedge 0 1\nedge 0 1\nedge 2 3\nedge 1 2\n";
  Multigraph g = read_graph_string(text);
  CHECK(g.edge_count() == 4);
  CHECK(write_graph_string(g) == text);
}

TEST_CASE("graph parser reports the offending line") {
  try {
    read_graph_string("vertices 3\nedge 0 1\nedge 0 5\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(read_graph_string("edge 0 1\n"), Error);
  CHECK_THROWS_AS(read_graph_string("vertices 2\nedge 1 1\n"), Error);
}

TEST_CASE("edge connectivity of the named graphs") {
  CHECK(edge_connectivity(Multigraph::complete(4)) == 3);
  CHECK(edge_connectivity(doubled_wheel()) == 5);
  CHECK(brute_edge_connectivity(doubled_wheel()) == 5);
  CHECK(edge_connectivity(blob_join(6, 4)) == 4);
  CHECK(brute_edge_connectivity(blob_join(6, 4)) == 4);
}

TEST_CASE("edge connectivity edge cases") {
  Multigraph single(VertexSet{0}, {});
  CHECK_THROWS_AS(edge_connectivity(single), Error);
  Multigraph disconnected = Multigraph::with_vertex_count(4, {{0, 1}, {2, 3}});
  CHECK(edge_connectivity(disconnected) == 0);
  CHECK(edge_connectivity_maxflow(disconnected) == 0);
}

TEST_CASE("exhaustive and max-flow connectivity agree on the corpus") {
  for (const auto& [name, g] : curated_graphs())
    CHECK_MESSAGE(edge_connectivity_exhaustive(g) == edge_connectivity_maxflow(g), name);
  for (const Multigraph& g : random_corpus(20250301, 60))
    CHECK(edge_connectivity_exhaustive(g) == edge_connectivity_maxflow(g));
}

TEST_CASE("essential edge connectivity") {
  CHECK(essential_edge_connectivity(Multigraph::complete(4)) == 4);
  CHECK(essential_edge_connectivity(blob_join(6, 4)) == 4);
  // 5-cycle with every edge doubled: nontrivial cuts have 4 edges
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    es.push_back({i, static_cast<Vertex>((i + 1) % 5)});
  }
  Multigraph c5x2 = Multigraph::with_vertex_count(5, std::move(es));
  CHECK(essential_edge_connectivity(c5x2) == 4);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5x2.degree(v) == 4);
  CHECK_THROWS_AS(essential_edge_connectivity(Multigraph::complete(2)), Error);
}

TEST_CASE("small cut enumeration") {
  auto k4cuts = enumerate_small_cuts(Multigraph::complete(4), 3);
  CHECK(k4cuts.size() == 4);
  for (const CutReport& c : k4cuts) {
    CHECK(c.size == 3);
    bool singleton = c.side.size() == 1 || c.side.size() == 3;
    CHECK(singleton);
  }

  auto join = enumerate_small_cuts(blob_join(6, 4), 4);
  REQUIRE(join.size() == 1);
  CHECK(join[0].size == 4);
  CHECK(join[0].side == set_of({0, 1, 2, 3, 4, 5}));
  CHECK(join[0].critical);

  CHECK(enumerate_small_cuts(Multigraph::complete(6), 4).empty());

  Budget tight;
  tight.cut_vertex_cap = 4;
  CHECK_THROWS_AS(enumerate_small_cuts(Multigraph::complete(6), 4, tight), Error);
}

TEST_CASE("critical sets of the blob joins") {
  auto crit = critical_sets(blob_join(6, 4), 4);
  REQUIRE(crit.size() == 2);
  CHECK(crit[0] == set_of({0, 1, 2, 3, 4, 5}));
  CHECK(crit[1] == set_of({6, 7, 8, 9, 10, 11}));

  CHECK(critical_sets(Multigraph::complete(6), 4).empty());
  CHECK_THROWS_AS(critical_sets(Multigraph::complete(4), 4), Error);  // not 4-edge-connected
}

TEST_CASE("critical sets of a K7 pair under k=5") {
  Multigraph g = blob_join(7, 4);
  // the joining cut is a 4-cut, so under k=5 both blob sides are critical and
  // the degree-6 singletons are not
  auto crit = critical_sets(g, 4);
  REQUIRE(crit.size() == 2);
  CHECK(crit[0].size() == 7);
  CHECK(crit[1].size() == 7);
}

TEST_CASE("critical set family properties on the corpus") {
  for (const auto& [name, g] : curated_graphs()) {
    if (g.vertex_count() < 2) continue;
    std::size_t k = edge_connectivity(g);
    auto crit = critical_sets(g, k);
    auto cuts = enumerate_small_cuts(g, k);

    // pairwise disjoint
    for (std::size_t i = 0; i < crit.size(); ++i)
      for (std::size_t j = i + 1; j < crit.size(); ++j)
        for (Vertex v : crit[i])
          CHECK_MESSAGE(!std::binary_search(crit[j].begin(), crit[j].end(), v), name);

    // exactly one k-cut: the two critical sets are complementary
    if (cuts.size() == 1) {
      REQUIRE_MESSAGE(crit.size() == 2, name);
      CHECK(complement_set(g, crit[0]) == crit[1]);
    }
    // several k-cuts: distinct boundaries, and no more critical sets than cuts
    if (cuts.size() >= 2) {
      CHECK_MESSAGE(crit.size() <= cuts.size(), name);
      for (std::size_t i = 0; i < crit.size(); ++i)
        for (std::size_t j = i + 1; j < crit.size(); ++j)
          CHECK(boundary_edges(g, crit[i]) != boundary_edges(g, crit[j]));
    }
  }
}

TEST_CASE("apex augmentation raises every non-apex cut") {
  Multigraph g = blob_join(6, 4);
  auto [aug, apex] = apex_augment(g, 4, {1, 1});
  CHECK(aug.degree(apex) == 2);
  // every cut other than the apex cut now has at least 5 edges (checked
  // exhaustively inside apex_augment as well)
  const std::size_t n = aug.vertex_count();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t apex_bit = std::uint64_t{1} << aug.index_of(apex);
    if (mask == apex_bit || mask == (((std::uint64_t{1} << n) - 1) ^ apex_bit)) continue;
    CHECK(brute_cut(aug, mask) >= 5);
  }
}

TEST_CASE("apex augmentation with uneven multiplicities") {
  auto [aug, apex] = apex_augment(blob_join(6, 4), 4, {4, 1});
  CHECK(aug.degree(apex) == 5);
}

TEST_CASE("apex augmentation rejections") {
  CHECK_THROWS_AS(apex_augment(Multigraph::complete(6), 4, {}), Error);  // no critical sets
  CHECK_THROWS_AS(apex_augment(blob_join(6, 4), 4, {1}), Error);         // length mismatch
  CHECK_THROWS_AS(apex_augment(blob_join(6, 4), 4, {1, 0}), Error);
}

TEST_CASE("complete splitting at a K5 vertex keeps 4-edge-connectivity") {
  Multigraph k5 = Multigraph::complete(5);
  auto split = mader_complete_split(k5, 0, 4);
  REQUIRE(split.has_value());
  CHECK(split->vertex_count() == 4);
  CHECK(split->edge_count() == 8);  // K4 plus two extra edges
  CHECK(edge_connectivity(*split) == 4);
}

TEST_CASE("complete splitting on the doubled 4-cycle") {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 4; ++i) {
    es.push_back({i, static_cast<Vertex>((i + 1) % 4)});
    es.push_back({i, static_cast<Vertex>((i + 1) % 4)});
  }
  Multigraph c4x2 = Multigraph::with_vertex_count(4, std::move(es));
  auto split = mader_complete_split(c4x2, 0, 2);
  REQUIRE(split.has_value());
  CHECK(edge_connectivity(*split) >= 2);
}

TEST_CASE("complete splitting skips loop pairings and rejects odd degrees") {
  Multigraph digon = Multigraph::with_vertex_count(2, {{0, 1}, {0, 1}});
  CHECK_FALSE(mader_complete_split(digon, 0, 1).has_value());  // only pairing makes a loop

  Multigraph odd = Multigraph::with_vertex_count(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(mader_complete_split(odd, 0, 1), Error);  // degree 3 at vertex 0
  CHECK_THROWS_AS(mader_complete_split(odd, 9, 1), Error);  // absent vertex
}

TEST_CASE("d(A) equals d(complement) everywhere") {
  for (const Multigraph& g : random_corpus(777, 40)) {
    const std::size_t n = g.vertex_count();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      std::uint64_t comp = ((std::uint64_t{1} << n) - 1) ^ mask;
      CHECK(brute_cut(g, mask) == brute_cut(g, comp));
    }
  }
}

TEST_CASE("contracted vertex degree equals the original cut") {
  for (const Multigraph& g : random_corpus(31337, 30)) {
    if (g.vertex_count() < 3) continue;
    VertexSet s{g.vertices()[0], g.vertices()[1]};
    auto [q, map] = contract(g, s);
    CHECK(q.degree(map.vertex_image(s[0])) == cut_size(g, s));
  }
}
