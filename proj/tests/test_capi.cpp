#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "flow3/flow3.h"
#include "helpers.hpp"

namespace {

struct GraphHandle {
  f3_graph* g = nullptr;
  ~GraphHandle() { f3_graph_free(g); }
};

f3_graph* make_complete(uint32_t n) {
  std::vector<uint32_t> ends;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) {
      ends.push_back(i);
      ends.push_back(j);
    }
  f3_graph* g = nullptr;
  REQUIRE(f3_graph_create(n, ends.data(), ends.size() / 2, &g) == F3_OK);
  return g;
}

}  // namespace

TEST_CASE("graph accessors and contraction through the C surface") {
  GraphHandle k4{make_complete(4)};
  CHECK(f3_graph_vertex_count(k4.g) == 4);
  CHECK(f3_graph_edge_count(k4.g) == 6);
  uint32_t u = 9, v = 9;
  CHECK(f3_graph_edge_endpoints(k4.g, 0, &u, &v) == F3_OK);
  CHECK(u == 0);
  CHECK(v == 1);
  CHECK(f3_graph_edge_endpoints(k4.g, 42, &u, &v) == F3_ERR_INVALID);

  uint32_t set[2] = {0, 1};
  uint32_t edge_map[6];
  uint32_t vertex_map[4];
  f3_graph* q = nullptr;
  REQUIRE(f3_graph_contract(k4.g, set, 2, &q, edge_map, vertex_map) == F3_OK);
  CHECK(f3_graph_vertex_count(q) == 3);
  CHECK(edge_map[0] == F3_EDGE_DELETED);  // the (0,1) edge vanished
  CHECK(vertex_map[1] == 0);
  f3_graph_free(q);
}

TEST_CASE("cut reports through the C surface") {
  f3_graph* g = nullptr;
  REQUIRE(f3_curated_graph(7, &g) == F3_OK);  // two_k6_join4 by curated order
  CHECK(std::string(f3_curated_name(7)) == "two_k6_join4");
  f3_cuts* cuts = nullptr;
  REQUIRE(f3_enumerate_small_cuts(g, 4, 0, &cuts) == F3_OK);
  REQUIRE(f3_cuts_count(cuts) == 1);
  CHECK(f3_cuts_boundary_size(cuts, 0) == 4);
  CHECK(f3_cuts_critical(cuts, 0) == 1);
  std::vector<uint32_t> side(f3_cuts_side_size(cuts, 0));
  REQUIRE(f3_cuts_side(cuts, 0, side.data()) == F3_OK);
  CHECK(side == std::vector<uint32_t>{0, 1, 2, 3, 4, 5});
  f3_cuts_free(cuts);

  f3_cuts* crit = nullptr;
  REQUIRE(f3_critical_sets(g, 4, 0, &crit) == F3_OK);
  CHECK(f3_cuts_count(crit) == 2);
  f3_cuts_free(crit);
  f3_graph_free(g);
}

TEST_CASE("budget violations surface as F3_ERR_BUDGET") {
  GraphHandle k6{make_complete(6)};
  f3_cuts* cuts = nullptr;
  CHECK(f3_enumerate_small_cuts(k6.g, 4, 3, &cuts) == F3_ERR_BUDGET);
  uint64_t n = 0;
  CHECK(f3_count_beta_orientations(k6.g, std::vector<uint8_t>(6, 0).data(), 5, &n) ==
        F3_ERR_BUDGET);
}

TEST_CASE("solver and verdict life cycle") {
  GraphHandle k6{make_complete(6)};
  std::vector<uint8_t> beta(6, 0);
  std::vector<int8_t> dirs(15, -1);
  int found = 0;
  REQUIRE(f3_find_beta_orientation(k6.g, beta.data(), nullptr, &found, dirs.data()) == F3_OK);
  CHECK(found == 1);
  int ok = 0;
  REQUIRE(f3_is_beta_orientation(k6.g, dirs.data(), beta.data(), &ok) == F3_OK);
  CHECK(ok == 1);

  f3_verdict* v = nullptr;
  REQUIRE(f3_z3_connected(k6.g, 1, 0, 0, 0, 2, &v) == F3_OK);
  CHECK(f3_verdict_holds(v) == 1);
  CHECK(f3_verdict_exhaustive(v) == 1);
  CHECK(f3_verdict_boundaries_tested(v) == 243);
  CHECK(f3_verdict_has_witness(v) == 0);
  f3_verdict_free(v);

  GraphHandle k4{make_complete(4)};
  f3_verdict* v4 = nullptr;
  REQUIRE(f3_z3_connected(k4.g, 1, 0, 0, 0, 1, &v4) == F3_OK);
  CHECK(f3_verdict_holds(v4) == 0);
  REQUIRE(f3_verdict_has_witness(v4) == 1);
  std::vector<uint8_t> witness(4);
  REQUIRE(f3_verdict_witness(v4, witness.data()) == F3_OK);
  uint64_t count = 1;
  REQUIRE(f3_count_beta_orientations(k4.g, witness.data(), 0, &count) == F3_OK);
  CHECK(count == 0);
  f3_verdict_free(v4);
}

TEST_CASE("replacement pipeline through the C surface") {
  GraphHandle k6{make_complete(6)};
  std::vector<int8_t> dx(15, -1);
  dx[0] = 1;  // (0,1) into the hub
  for (int e = 1; e <= 4; ++e) dx[e] = 0;
  f3_hbuild* hb = nullptr;
  REQUIRE(f3_mod3_replacement_build(k6.g, 0, dx.data(), nullptr, &hb) == F3_OK);
  const f3_graph* h = f3_hbuild_graph(hb);
  CHECK(f3_graph_vertex_count(h) == 30);
  CHECK(f3_graph_edge_count(h) == 75);

  std::vector<uint8_t> zero(30, 0);
  std::vector<int8_t> hdirs(75, -1);
  int found = 0;
  REQUIRE(f3_find_beta_orientation(h, zero.data(), nullptr, &found, hdirs.data()) == F3_OK);
  REQUIRE(found == 1);
  std::vector<int8_t> gdirs(15, -1);
  REQUIRE(f3_mod3_replacement_extract(hb, hdirs.data(), gdirs.data()) == F3_OK);
  std::vector<uint8_t> gzero(6, 0);
  int ok = 0;
  REQUIRE(f3_is_beta_orientation(k6.g, gdirs.data(), gzero.data(), &ok) == F3_OK);
  CHECK(ok == 1);
  for (int e = 0; e <= 4; ++e) CHECK(gdirs[e] == dx[e]);

  std::string prov_path = testers::data_path("../build/prov_capi_test.txt");
  CHECK(f3_hbuild_write_provenance(hb, prov_path.c_str()) == F3_OK);
  f3_hbuild_free(hb);
}

TEST_CASE("extension machinery through the C surface") {
  GraphHandle k7{make_complete(7)};
  std::vector<uint8_t> beta(7, 0);
  beta[0] = 1;
  beta[1] = 2;
  std::vector<int8_t> dz(21, -1);
  dz[0] = 1;  // one in
  for (int e = 1; e <= 5; ++e) dz[e] = 0;

  f3_hypotheses* rep = nullptr;
  REQUIRE(f3_extension_check(k7.g, beta.data(), 0, dz.data(), 0, &rep) == F3_OK);
  CHECK(f3_hypotheses_pass(rep) == 1);
  CHECK(f3_hypotheses_degree_z(rep) == 6);
  f3_hypotheses_free(rep);

  std::vector<int8_t> dirs(21, -1);
  REQUIRE(f3_extension_extend(k7.g, beta.data(), 0, dz.data(), 0, dirs.data()) == F3_OK);
  int ok = 0;
  REQUIRE(f3_is_beta_orientation(k7.g, dirs.data(), beta.data(), &ok) == F3_OK);
  CHECK(ok == 1);

  // tau through the C surface
  uint32_t single[1] = {0};
  int t = 9;
  REQUIRE(f3_tau(k7.g, beta.data(), single, 1, &t) == F3_OK);
  CHECK(t == -2);  // degree 6, residue 1
}

TEST_CASE("embedding and duality through the C surface") {
  f3_embedding* emb = nullptr;
  std::string path = testers::data_path("embeddings/cube.emb");
  REQUIRE(f3_embedding_read_file(path.c_str(), &emb) == F3_OK);
  size_t fc = 0;
  REQUIRE(f3_embedding_face_count(emb, &fc) == F3_OK);
  CHECK(fc == 6);
  f3_dual* d = nullptr;
  REQUIRE(f3_embedding_dual(emb, &d) == F3_OK);
  CHECK(f3_graph_vertex_count(f3_dual_graph(d)) == 6);
  int mod3 = 0, col = 0;
  REQUIRE(f3_duality_check(emb, &mod3, &col) == F3_OK);
  CHECK(mod3 == col);
  f3_dual_free(d);
  f3_embedding_free(emb);

  f3_embedding* bad = nullptr;
  std::string k5 = testers::data_path("embeddings/k5_bad.emb");
  REQUIRE(f3_embedding_read_file(k5.c_str(), &bad) == F3_OK);
  size_t n = 0;
  CHECK(f3_embedding_face_count(bad, &n) == F3_ERR_PRECONDITION);
  f3_embedding_free(bad);
}

TEST_CASE("corpus generation is deterministic through the C surface") {
  f3_graphlist* a = nullptr;
  f3_graphlist* b = nullptr;
  REQUIRE(f3_corpus_random(12345, 10, 6, 12, &a) == F3_OK);
  REQUIRE(f3_corpus_random(12345, 10, 6, 12, &b) == F3_OK);
  REQUIRE(f3_graphlist_count(a) == 10);
  for (size_t i = 0; i < 10; ++i) {
    char* sa = nullptr;
    char* sb = nullptr;
    REQUIRE(f3_graph_write_string(f3_graphlist_get(a, i), &sa) == F3_OK);
    REQUIRE(f3_graph_write_string(f3_graphlist_get(b, i), &sb) == F3_OK);
    CHECK(std::string(sa) == std::string(sb));
    f3_string_free(sa);
    f3_string_free(sb);
  }
  f3_graphlist_free(a);
  f3_graphlist_free(b);
}

TEST_CASE("hunt through the C surface") {
  f3_graphlist* l = nullptr;
  REQUIRE(f3_hunt_z3_reduced(3, 4, 1, 1, &l) == F3_OK);
  CHECK(f3_graphlist_count(l) == 1);
  CHECK(f3_graph_vertex_count(f3_graphlist_get(l, 0)) == 4);
  f3_graphlist_free(l);
}
