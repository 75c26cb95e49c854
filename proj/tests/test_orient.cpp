#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flow3/corpus.hpp"
#include "flow3/gadgets.hpp"
#include "helpers.hpp"

using namespace flow3;
using namespace testers;

namespace {

Multigraph triangle() { return Multigraph::with_vertex_count(3, {{0, 1}, {1, 2}, {2, 0}}); }

Boundary boundary_of(const Multigraph& g, std::initializer_list<int> values) {
  Boundary b = Boundary::zero(g);
  std::size_t i = 0;
  for (int v : values) b.value[i++] = static_cast<std::uint8_t>(v);
  return b;
}

}  // namespace

TEST_CASE("deficiency on small hand cases") {
  Multigraph tri = triangle();
  Orientation cycle{{Dir::forward, Dir::forward, Dir::forward}};  // 0->1->2->0
  for (Vertex v = 0; v < 3; ++v) CHECK(deficiency(tri, cycle, v) == 0);

  // star with 5 edges at the hub: 4 out, 1 in
  Multigraph star = Multigraph::with_vertex_count(6,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 0}});
  Orientation mixed{{Dir::forward, Dir::forward, Dir::forward, Dir::forward, Dir::forward}};
  CHECK(deficiency(star, mixed, 0) == 3);
  Orientation all_in{{Dir::reverse, Dir::reverse, Dir::reverse, Dir::reverse, Dir::forward}};
  CHECK(deficiency(star, all_in, 0) == -5);
  CHECK_THROWS_AS(deficiency(star, mixed, 17), Error);
}

TEST_CASE("beta orientation recognition") {
  Multigraph tri = triangle();
  Orientation cycle{{Dir::forward, Dir::forward, Dir::forward}};
  CHECK(is_beta_orientation(tri, cycle, Boundary::zero(tri)));
  CHECK_FALSE(is_beta_orientation(tri, cycle, boundary_of(tri, {1, 1, 1})));

  Multigraph digon = Multigraph::with_vertex_count(2, {{0, 1}, {0, 1}});
  Orientation both{{Dir::forward, Dir::forward}};  // both 0 -> 1
  CHECK(is_beta_orientation(digon, both, boundary_of(digon, {2, 1})));
}

TEST_CASE("find_beta_orientation on the canonical examples") {
  Multigraph tri = triangle();
  auto d = find_beta_orientation(tri, Boundary::zero(tri));
  REQUIRE(d.has_value());
  CHECK(is_beta_orientation(tri, *d, Boundary::zero(tri)));
  // the lexicographically first witness is the forward directed cycle
  CHECK(d->dir == std::vector<Dir>{Dir::forward, Dir::forward, Dir::forward});

  CHECK_FALSE(find_beta_orientation(Multigraph::complete(4),
                                    Boundary::zero(Multigraph::complete(4))));
}

TEST_CASE("a fixed edge forces the triple edge") {
  Multigraph triple = Multigraph::with_vertex_count(2, {{0, 1}, {0, 1}, {0, 1}});
  PartialOrientation fixed = PartialOrientation::all_undecided(3);
  fixed.set(0, Dir::forward);
  auto d = find_beta_orientation(triple, Boundary::zero(triple), fixed);
  REQUIRE(d.has_value());
  CHECK(d->dir == std::vector<Dir>{Dir::forward, Dir::forward, Dir::forward});
}

TEST_CASE("boundary validation is strict") {
  Multigraph tri = triangle();
  CHECK_THROWS_AS(find_beta_orientation(tri, boundary_of(tri, {1, 0, 0})), Error);
  Boundary wrong_size;
  wrong_size.value = {0, 0};
  CHECK_THROWS_AS(find_beta_orientation(tri, wrong_size), Error);
}

TEST_CASE("orientation counts on the tiny graphs") {
  Multigraph tri = triangle();
  CHECK(count_beta_orientations(tri, Boundary::zero(tri)) == 2);
  CHECK(count_beta_orientations(Multigraph::complete(4),
                                Boundary::zero(Multigraph::complete(4))) == 0);
  Multigraph digon = Multigraph::with_vertex_count(2, {{0, 1}, {0, 1}});
  CHECK(count_beta_orientations(digon, Boundary::zero(digon)) == 2);

  Budget tight;
  tight.oracle_edge_cap = 2;
  CHECK_THROWS_AS(count_beta_orientations(tri, Boundary::zero(tri), tight), Error);
}

TEST_CASE("count oracle matches the brute enumerator") {
  std::mt19937_64 rng(99);
  for (const Multigraph& g : random_corpus(4242, 30)) {
    if (g.edge_count() > 12) continue;
    Boundary beta = random_boundary(rng, g);
    CHECK(count_beta_orientations(g, beta) == brute_count_orientations(g, beta));
  }
}

TEST_CASE("reverse is an involution and negates the boundary") {
  std::mt19937_64 rng(5);
  for (const Multigraph& g : random_corpus(1111, 25)) {
    Boundary beta = random_boundary(rng, g);
    auto d = find_beta_orientation(g, beta);
    if (!d) continue;
    CHECK(reversed(reversed(*d)).dir == d->dir);
    CHECK(is_beta_orientation(g, reversed(*d), negated(g, beta)));
  }
}

TEST_CASE("minor edge at a 5-vertex") {
  Multigraph star = Multigraph::with_vertex_count(6,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 0}});
  Orientation four_out{{Dir::forward, Dir::forward, Dir::forward, Dir::forward,
                        Dir::forward}};  // edge 4 is stored (5,0): forward goes into 0
  CHECK(minor_edge(star, four_out, 0) == 4);
  Orientation four_in = reversed(four_out);
  CHECK(minor_edge(star, four_in, 0) == 4);

  Orientation three_two{{Dir::forward, Dir::forward, Dir::forward, Dir::reverse,
                         Dir::forward}};  // 3 out, 2 in at the hub
  CHECK_THROWS_AS(minor_edge(star, three_two, 0), Error);
  CHECK_THROWS_AS(minor_edge(star, four_out, 1), Error);  // degree 1
}

TEST_CASE("minor edge is reversal invariant in mod 3-orientations") {
  Multigraph w = doubled_wheel();
  auto d = find_beta_orientation(w, Boundary::zero(w));
  REQUIRE(d.has_value());
  for (Vertex v = 0; v < 6; ++v)
    CHECK(minor_edge(w, *d, v) == minor_edge(w, reversed(*d), v));
}

TEST_CASE("mod 3-orientability of the named graphs") {
  CHECK(is_mod3_orientable(triangle()));
  CHECK_FALSE(is_mod3_orientable(Multigraph::complete(4)));
  CHECK(is_mod3_orientable(doubled_wheel()));
  CHECK(brute_count_orientations(doubled_wheel(), Boundary::zero(doubled_wheel())) > 0);
}

TEST_CASE("solver agrees with the oracle, witnesses validate, fixings respected") {
  std::mt19937_64 rng(2024);
  std::size_t solved = 0;
  for (const Multigraph& g : random_corpus(60610, 120, 6, 12)) {
    Boundary beta = random_boundary(rng, g);
    PartialOrientation fixed = PartialOrientation::all_undecided(g.edge_count());
    std::size_t nfix = rng() % (g.edge_count() / 2 + 1);
    for (std::size_t i = 0; i < nfix; ++i)
      fixed.dir[rng() % g.edge_count()] = static_cast<std::int8_t>(rng() % 2);

    auto d = find_beta_orientation(g, beta, fixed);
    std::uint64_t count = brute_count_orientations(g, beta, &fixed);
    CHECK(d.has_value() == (count > 0));
    if (d) {
      ++solved;
      CHECK(is_beta_orientation(g, *d, beta));
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (fixed.decided(e)) CHECK(d->dir[e] == fixed.at(e));
    }
  }
  CHECK(solved > 10);  // the corpus is not degenerate
}

TEST_CASE("total deficiency sums to zero") {
  std::mt19937_64 rng(8);
  for (const Multigraph& g : random_corpus(12, 20)) {
    std::uint64_t mask = rng() % (std::uint64_t{1} << g.edge_count());
    Orientation d = orientation_from_mask(g, mask);
    int total = 0;
    for (Vertex v : g.vertices()) total += deficiency(g, d, v);
    CHECK(total == 0);
  }
}

TEST_CASE("one-vertex graph satisfies only the zero boundary") {
  Multigraph one(VertexSet{0}, {});
  CHECK(count_beta_orientations(one, Boundary::zero(one)) == 1);
  auto d = find_beta_orientation(one, Boundary::zero(one));
  REQUIRE(d.has_value());
  CHECK(d->dir.empty());
}
