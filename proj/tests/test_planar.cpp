#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <map>

#include "flow3/canonical.hpp"
#include "flow3/io.hpp"
#include "flow3/orient.hpp"
#include "flow3/planar.hpp"
#include "helpers.hpp"

using namespace flow3;
using namespace testers;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kCorpus = {
    {"triangle", 2},  {"k4", 4},           {"tetrahedron", 4}, {"cube", 6},
    {"octahedron", 8}, {"dodecahedron", 12}, {"barrel6", 14},    {"barrel7", 16},
    {"hexprism", 8},  {"icosahedron", 20},
};

Embedding load(const std::string& name) {
  return read_embedding_file(data_path("embeddings/" + name + ".emb"));
}

std::size_t graph_girth(const Multigraph& g) {
  std::size_t best = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), par_edge(n, -1);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      Vertex uv = g.vertices()[u];
      for (EdgeId e : g.incident(uv)) {
        std::size_t w = g.index_of(g.other_end(e, uv));
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          par_edge[w] = static_cast<int>(e);
          q.push_back(w);
        } else if (par_edge[u] != static_cast<int>(e)) {
          best = std::min(best, static_cast<std::size_t>(dist[u] + dist[w] + 1));
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("face counts across the embedding corpus") {
  for (const auto& [name, expected_faces] : kCorpus) {
    Embedding emb = load(name);
    auto fs = faces(emb.rotation, emb.graph);
    CHECK_MESSAGE(fs.size() == expected_faces, name);
    // every dart appears exactly once over all facial walks
    std::size_t total_darts = 0;
    for (const Face& f : fs) total_darts += f.darts.size();
    CHECK(total_darts == 2 * emb.graph.edge_count());
  }
}

TEST_CASE("a nonplanar rotation fails the Euler check") {
  Embedding emb = read_embedding_file(data_path("embeddings/k5_bad.emb"));
  CHECK_THROWS_AS(faces(emb.rotation, emb.graph), Error);
}

TEST_CASE("incomplete rotations are rejected") {
  Embedding emb = load("triangle");
  emb.rotation.order[0].pop_back();
  CHECK_THROWS_AS(faces(emb.rotation, emb.graph), Error);
}

TEST_CASE("duals of the small polyhedra") {
  Embedding cube = load("cube");
  DualCorrespondence d = dual(cube.rotation, cube.graph);
  CHECK(d.dual_graph.edge_count() == cube.graph.edge_count());
  CHECK(d.face_count == 6);
  Embedding octa = load("octahedron");
  CHECK(isomorphic(d.dual_graph, octa.graph));

  Embedding tetra = load("tetrahedron");
  DualCorrespondence td = dual(tetra.rotation, tetra.graph);
  CHECK(isomorphic(td.dual_graph, tetra.graph));  // self dual

  Embedding tri = load("triangle");
  DualCorrespondence trid = dual(tri.rotation, tri.graph);
  CHECK(trid.dual_graph.vertex_count() == 2);
  CHECK(trid.dual_graph.edge_count() == 3);  // a triple edge
}

TEST_CASE("dual of the dual has as many vertices as the primal has faces") {
  for (const auto& [name, expected_faces] : kCorpus) {
    Embedding emb = load(name);
    DualCorrespondence d = dual(emb.rotation, emb.graph);
    CHECK_MESSAGE(d.dual_graph.vertex_count() == expected_faces, name);
    CHECK(d.dual_graph.edge_count() == emb.graph.edge_count());
  }
}

TEST_CASE("bridges are rejected in dual construction") {
  // path 0 - 1 - 2: one face, every edge a bridge
  Multigraph path = Multigraph::with_vertex_count(3, {{0, 1}, {1, 2}});
  RotationSystem rot;
  rot.order = {{{0, 0}}, {{0, 1}, {1, 0}}, {{1, 1}}};
  CHECK(faces(rot, path).size() == 1);  // Euler: 3 - 2 + 1 = 2
  CHECK_THROWS_AS(dual(rot, path), Error);
}

TEST_CASE("three-coloring search") {
  CHECK_FALSE(chromatic_3(Multigraph::complete(4)).has_value());

  Embedding octa = load("octahedron");
  auto oc = chromatic_3(octa.graph);
  REQUIRE(oc.has_value());
  for (const Edge& e : octa.graph.edges())
    CHECK((*oc)[octa.graph.index_of(e.a)] != (*oc)[octa.graph.index_of(e.b)]);

  Embedding dode = load("dodecahedron");
  auto dc = chromatic_3(dode.graph);
  REQUIRE(dc.has_value());
  for (const Edge& e : dode.graph.edges())
    CHECK((*dc)[dode.graph.index_of(e.a)] != (*dc)[dode.graph.index_of(e.b)]);

  // parallel edges collapse: a digon is 2-colorable
  Multigraph digon = Multigraph::with_vertex_count(2, {{0, 1}, {0, 1}});
  CHECK(chromatic_3(digon).has_value());
}

TEST_CASE("flow coloring duality across the whole corpus") {
  for (const auto& [name, expected_faces] : kCorpus) {
    Embedding emb = load(name);
    DualityVerdict v = duality_check(emb.rotation, emb.graph);
    CHECK_MESSAGE(v.equivalent(), name);
  }
}

TEST_CASE("triangle-free and girth-5 corpus members are 3-colorable") {
  std::size_t triangle_free = 0, girth5 = 0;
  for (const auto& [name, expected_faces] : kCorpus) {
    Embedding emb = load(name);
    std::size_t girth = graph_girth(emb.graph);
    if (girth >= 4) {
      ++triangle_free;
      CHECK_MESSAGE(chromatic_3(emb.graph).has_value(), name);
    }
    if (girth >= 5) ++girth5;
  }
  CHECK(triangle_free >= 5);
  CHECK(girth5 >= 3);
}
