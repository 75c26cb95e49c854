// Command-line front end. Everything graph-related goes through the public C
// API in flow3/flow3.h; this file only parses arguments, shapes reports and
// maps statuses to exit codes.
//
// Exit codes: 0 the queried property holds or the artifact was built, 1 the
// property fails (a witness is in the report), 2 usage, budget or input
// errors. The machine-readable report goes to stdout, a human summary to
// stderr.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flow3/flow3.h"

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(f3_status status) {
  if (status == F3_OK) return;
  int code = 2;  // every library error is a usage/input/budget problem here
  die(code, std::string(f3_status_name(status)) + ": " + f3_last_error());
}

struct Graph {
  f3_graph* g = nullptr;
  ~Graph() { f3_graph_free(g); }
  f3_graph* operator->() const { return g; }
};

std::string fnv1a_digest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) die(2, "cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (f.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

struct Reporter {
  json report;
  Clock::time_point start = Clock::now();
  std::string summary;

  Reporter(const std::vector<std::string>& argv) {
    report["command"] = argv;
    report["inputs"] = json::object();
    report["witness"] = nullptr;
    report["counters"] = json::object();
  }
  void input(const std::string& path) { report["inputs"][path] = fnv1a_digest(path); }
  int finish(int exit_code) {
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    report["exit"] = exit_code;
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
    return exit_code;
  }
};

Graph load_graph(Reporter& rep, const std::string& path) {
  rep.input(path);
  Graph g;
  check(f3_graph_read_file(path.c_str(), &g.g));
  return g;
}

std::vector<std::uint8_t> load_boundary(Reporter& rep, const f3_graph* g,
                                        const std::string& path) {
  rep.input(path);
  std::vector<std::uint8_t> beta(f3_graph_vertex_count(g), 0);
  check(f3_boundary_read_file(g, path.c_str(), beta.data()));
  return beta;
}

std::vector<std::int8_t> load_preorientation(Reporter& rep, const f3_graph* g,
                                             const std::string& path) {
  rep.input(path);
  std::vector<std::int8_t> dirs(f3_graph_edge_count(g), -1);
  check(f3_preorient_read_file(g, path.c_str(), dirs.data()));
  return dirs;
}

json orientation_json(const f3_graph* g, const std::vector<std::int8_t>& dirs) {
  json arcs = json::array();
  for (std::size_t e = 0; e < dirs.size(); ++e) {
    if (dirs[e] < 0) continue;
    std::uint32_t u = 0, v = 0;
    check(f3_graph_edge_endpoints(g, static_cast<std::uint32_t>(e), &u, &v));
    if (dirs[e] == 1) std::swap(u, v);
    arcs.push_back({{"edge", e}, {"from", u}, {"to", v}});
  }
  return arcs;
}

json boundary_json(const f3_graph* g, const std::vector<std::uint8_t>& beta) {
  json out = json::object();
  for (std::size_t i = 0; i < beta.size(); ++i)
    out[std::to_string(f3_graph_vertex_at(g, i))] = beta[i];
  return out;
}

json verdict_json(const f3_graph* g, f3_verdict* v) {
  json out;
  out["holds"] = f3_verdict_holds(v) != 0;
  out["mode"] = f3_verdict_exhaustive(v) ? "exhaustive" : "sampled";
  if (!f3_verdict_exhaustive(v)) {
    out["samples"] = f3_verdict_samples(v);
    out["seed"] = f3_verdict_seed(v);
  }
  out["boundaries_tested"] = f3_verdict_boundaries_tested(v);
  out["solver_calls"] = f3_verdict_solver_calls(v);
  if (f3_verdict_has_witness(v)) {
    std::vector<std::uint8_t> beta(f3_graph_vertex_count(g));
    check(f3_verdict_witness(v, beta.data()));
    out["witness_boundary"] = boundary_json(g, beta);
  }
  return out;
}

// budgets: flags with safe defaults and hard ceilings
struct Budgets {
  unsigned z3 = 10;       // vertices for the 3^(n-1) scans, at most 12
  unsigned cuts = 20;     // vertices for subset scans, at most 24
  unsigned oracle = 20;   // edges for the 2^m oracle, at most 24
  unsigned jobs = 1;
  void clamp() {
    if (z3 > 12) die(2, "--budget above the hard ceiling of 12");
    if (cuts > 24) die(2, "--cut-budget above the hard ceiling of 24");
    if (oracle > 24) die(2, "--oracle-budget above the hard ceiling of 24");
    if (jobs < 1) jobs = 1;
  }
};

int run(std::vector<std::string> args) {
  CLI::App app{"mod-3 orientations, Z3 group connectivity and gadget constructions"};
  app.require_subcommand(1);

  Budgets budgets;
  if (const char* env = std::getenv("FLOW3_BUDGET")) budgets.z3 = std::atoi(env);
  app.add_option("--budget", budgets.z3, "vertex cap for exhaustive boundary scans");
  app.add_option("--cut-budget", budgets.cuts, "vertex cap for exhaustive cut scans");
  app.add_option("--oracle-budget", budgets.oracle, "edge cap for the orientation oracle");
  app.add_option("--jobs", budgets.jobs, "worker threads for independent scans");

  std::string graph_path, beta_path, pre_path, emb_path, out_path, prov_path;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  unsigned vertex = 0;
  std::string method = "deletion";
  unsigned min_degree = 0, max_vertices = 0;
  std::size_t k = 0, max_size = 0;
  std::vector<std::size_t> multiplicities;
  std::vector<unsigned> shifts;
  unsigned e1 = 0, e2 = 0;
  bool alt_double = false, multigraph_mode = false;
  std::size_t corpus_count = 200;

  auto* mod3 = app.add_subcommand("mod3", "decide mod 3-orientability");
  mod3->add_option("graph", graph_path)->required();

  auto* z3 = app.add_subcommand("z3", "decide Z3-connectivity");
  z3->add_option("graph", graph_path)->required();
  z3->add_option("--sample", samples, "sampled boundaries instead of the exhaustive scan");
  z3->add_option("--seed", seed);

  auto* ext = app.add_subcommand("extendable", "Z3-extendability at a vertex");
  ext->add_option("graph", graph_path)->required();
  ext->add_option("--vertex", vertex)->required();
  ext->add_option("--method", method)->check(CLI::IsMember({"deletion", "direct"}));

  auto* m3ext = app.add_subcommand("m3-extendable", "mod-3 extendability at a vertex");
  m3ext->add_option("graph", graph_path)->required();
  m3ext->add_option("--vertex", vertex)->required();

  auto* reduced = app.add_subcommand("reduced", "decide Z3-reducedness");
  reduced->add_option("graph", graph_path)->required();

  auto* hunt = app.add_subcommand("hunt", "enumerate Z3-reduced graphs");
  hunt->add_option("--min-degree", min_degree)->required();
  hunt->add_option("--max-vertices", max_vertices)->required();
  hunt->add_flag("--multigraph", multigraph_mode,
                 "allow parallel edges (capped at one: digons are Z3-connected)");

  auto* cuts = app.add_subcommand("cuts", "enumerate small cuts");
  cuts->add_option("graph", graph_path)->required();
  cuts->add_option("--max-size", max_size)->required();

  auto* critical = app.add_subcommand("critical", "critical sets for a cut size");
  critical->add_option("graph", graph_path)->required();
  critical->add_option("--k", k)->required();

  auto* apex = app.add_subcommand("apex", "apex augmentation over critical sets");
  apex->add_option("graph", graph_path)->required();
  apex->add_option("--k", k)->required();
  apex->add_option("--multiplicities", multiplicities)->delimiter(',');
  apex->add_option("--out", out_path);

  auto* split = app.add_subcommand("split", "complete splitting preserving connectivity");
  split->add_option("graph", graph_path)->required();
  split->add_option("--vertex", vertex)->required();
  split->add_option("--k", k)->required();
  split->add_option("--out", out_path);

  auto* gadget = app.add_subcommand("gadget", "build the named constructions");
  auto* gw = gadget->add_subcommand("w", "the doubled-wheel gadget");
  gw->add_option("--out", out_path);
  auto* gh3 = gadget->add_subcommand("h3", "six-copy replacement for mod-3 extension");
  gh3->add_option("--graph", graph_path)->required();
  gh3->add_option("--vertex", vertex)->required();
  gh3->add_option("--preorient", pre_path)->required();
  gh3->add_option("--shifts", shifts)->delimiter(',');
  gh3->add_option("--out", out_path);
  gh3->add_option("--prov", prov_path);
  auto* ghz3 = gadget->add_subcommand("hz3", "six-copy replacement for Z3 extension");
  ghz3->add_option("--graph", graph_path)->required();
  ghz3->add_option("--vertex", vertex)->required();
  ghz3->add_option("--beta", beta_path)->required();
  ghz3->add_option("--out", out_path);
  ghz3->add_option("--prov", prov_path);
  auto* gcross = gadget->add_subcommand("crossing", "replace two crossing edges by a 5-vertex");
  gcross->add_option("--graph", graph_path)->required();
  gcross->add_option("--e1", e1)->required();
  gcross->add_option("--e2", e2)->required();
  gcross->add_flag("--alt-double", alt_double);
  gcross->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
  auto* vw = verify->add_subcommand("lemma-w", "wheel gadget properties over 2^15 orientations");
  auto* v23 = verify->add_subcommand("lemma-2-3",
                                     "extendability equals deleted-vertex connectivity");
  v23->add_option("--count", corpus_count);
  v23->add_option("--seed", seed);

  auto* ltwz = app.add_subcommand("ltwz", "extension-theorem machinery");
  auto* lcheck = ltwz->add_subcommand("check", "hypothesis report");
  lcheck->add_option("--graph", graph_path)->required();
  lcheck->add_option("--beta", beta_path)->required();
  lcheck->add_option("--z", vertex)->required();
  lcheck->add_option("--preorient", pre_path)->required();
  auto* lextend = ltwz->add_subcommand("extend", "extend a pre-orientation");
  lextend->add_option("--graph", graph_path)->required();
  lextend->add_option("--beta", beta_path)->required();
  lextend->add_option("--z", vertex)->required();
  lextend->add_option("--preorient", pre_path)->required();
  auto* ld1 = ltwz->add_subcommand("d1", "four-cut apex pipeline");
  ld1->add_option("--graph", graph_path)->required();
  ld1->add_option("--beta", beta_path)->required();
  auto* ld2 = ltwz->add_subcommand("d2", "five-cut apex check");
  ld2->add_option("--graph", graph_path)->required();
  ld2->add_option("--sample", samples);
  ld2->add_option("--seed", seed);

  auto* dualcmd = app.add_subcommand("dual", "plane embeddings and duality");
  auto* dfaces = dualcmd->add_subcommand("faces", "facial walks of an embedding");
  dfaces->add_option("--embedding", emb_path)->required();
  auto* dbuild = dualcmd->add_subcommand("build", "dual graph of an embedding");
  dbuild->add_option("--embedding", emb_path)->required();
  dbuild->add_option("--out", out_path);
  auto* dcolor = dualcmd->add_subcommand("color", "proper 3-coloring search");
  dcolor->add_option("--graph", graph_path)->required();
  auto* dcheck = dualcmd->add_subcommand("check", "flow coloring duality on an embedding");
  dcheck->add_option("--embedding", emb_path)->required();

  auto* corpus = app.add_subcommand("corpus", "deterministic graph corpus");
  corpus->add_option("--seed", seed)->required();
  corpus->add_option("--out", out_path)->required();
  corpus->add_option("--count", corpus_count);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n" << e.what() << "\n";
    return 2;
  }
  budgets.clamp();

  Reporter rep(args);
  json& out = rep.report;

  auto write_graph_out = [&](const f3_graph* g, const char* key) {
    char* text = nullptr;
    check(f3_graph_write_string(g, &text));
    out[key] = std::string(text);
    f3_string_free(text);
    if (!out_path.empty()) {
      check(f3_graph_write_file(g, out_path.c_str()));
      out["out_file"] = out_path;
    }
  };

  if (*mod3) {
    Graph g = load_graph(rep, graph_path);
    std::vector<std::uint8_t> zero(f3_graph_vertex_count(g.g), 0);
    std::vector<std::int8_t> dirs(f3_graph_edge_count(g.g), -1);
    int found = 0;
    check(f3_find_beta_orientation(g.g, zero.data(), nullptr, &found, dirs.data()));
    out["verdict"] = {{"mod3_orientable", found != 0}};
    if (found) {
      out["witness"] = orientation_json(g.g, dirs);
      rep.summary = "mod 3-orientation found";
      return rep.finish(0);
    }
    out["witness"] = "no mod 3-orientation";
    rep.summary = "no mod 3-orientation";
    return rep.finish(1);
  }

  if (*z3) {
    Graph g = load_graph(rep, graph_path);
    f3_verdict* v = nullptr;
    check(f3_z3_connected(g.g, samples == 0 ? 1 : 0, samples, seed, budgets.z3, budgets.jobs,
                          &v));
    out["verdict"] = verdict_json(g.g, v);
    out["counters"] = {{"boundaries_tested", f3_verdict_boundaries_tested(v)},
                       {"solver_calls", f3_verdict_solver_calls(v)}};
    bool holds = f3_verdict_holds(v) != 0;
    if (f3_verdict_has_witness(v)) out["witness"] = out["verdict"]["witness_boundary"];
    f3_verdict_free(v);
    rep.summary = holds ? (samples ? "no counterexample among the sampled boundaries"
                                   : "Z3-connected (exhaustive)")
                        : "not Z3-connected; witness boundary in the report";
    return rep.finish(holds ? 0 : 1);
  }

  if (*ext) {
    Graph g = load_graph(rep, graph_path);
    int yes = 0;
    check(f3_z3_extendable(g.g, vertex, method == "direct" ? 1 : 0, budgets.z3, &yes));
    out["verdict"] = {{"z3_extendable", yes != 0}, {"method", method}, {"vertex", vertex}};
    rep.summary = yes ? "Z3-extendable" : "not Z3-extendable";
    return rep.finish(yes ? 0 : 1);
  }

  if (*m3ext) {
    Graph g = load_graph(rep, graph_path);
    int yes = 0;
    check(f3_m3_extendable(g.g, vertex, &yes));
    out["verdict"] = {{"m3_extendable", yes != 0}, {"vertex", vertex}};
    rep.summary = yes ? "mod-3 extendable" : "not mod-3 extendable";
    return rep.finish(yes ? 0 : 1);
  }

  if (*reduced) {
    Graph g = load_graph(rep, graph_path);
    int yes = 0;
    check(f3_z3_reduced(g.g, budgets.z3, &yes));
    out["verdict"] = {{"z3_reduced", yes != 0}};
    rep.summary = yes ? "Z3-reduced" : "contains a Z3-connected subgraph";
    return rep.finish(yes ? 0 : 1);
  }

  if (*hunt) {
    f3_graphlist* list = nullptr;
    check(f3_hunt_z3_reduced(min_degree, max_vertices, multigraph_mode ? 0 : 1, budgets.jobs,
                             &list));
    json found = json::array();
    for (std::size_t i = 0; i < f3_graphlist_count(list); ++i) {
      char* text = nullptr;
      check(f3_graph_write_string(f3_graphlist_get(list, i), &text));
      found.push_back(std::string(text));
      f3_string_free(text);
    }
    out["verdict"] = {{"found", f3_graphlist_count(list)}};
    out["graphs"] = found;
    out["counters"] = {{"graphs_found", f3_graphlist_count(list)}};
    f3_graphlist_free(list);
    rep.summary = "hunt finished: " + std::to_string(found.size()) +
                  " Z3-reduced graphs (an empty list is evidence, not an error)";
    return rep.finish(0);
  }

  if (*cuts) {
    Graph g = load_graph(rep, graph_path);
    f3_cuts* c = nullptr;
    check(f3_enumerate_small_cuts(g.g, max_size, budgets.cuts, &c));
    json sides = json::array();
    for (std::size_t i = 0; i < f3_cuts_count(c); ++i) {
      std::vector<std::uint32_t> side(f3_cuts_side_size(c, i));
      check(f3_cuts_side(c, i, side.data()));
      sides.push_back(
          {{"side", side}, {"size", f3_cuts_boundary_size(c, i)},
           {"critical", f3_cuts_critical(c, i) != 0}});
    }
    out["verdict"] = {{"cuts", f3_cuts_count(c)}};
    out["cuts"] = sides;
    f3_cuts_free(c);
    rep.summary = "enumerated " + std::to_string(sides.size()) + " cuts";
    return rep.finish(0);
  }

  if (*critical) {
    Graph g = load_graph(rep, graph_path);
    f3_cuts* c = nullptr;
    check(f3_critical_sets(g.g, k, budgets.cuts, &c));
    json sets = json::array();
    for (std::size_t i = 0; i < f3_cuts_count(c); ++i) {
      std::vector<std::uint32_t> side(f3_cuts_side_size(c, i));
      check(f3_cuts_side(c, i, side.data()));
      sets.push_back(side);
    }
    out["verdict"] = {{"critical_sets", f3_cuts_count(c)}};
    out["sets"] = sets;
    f3_cuts_free(c);
    rep.summary = std::to_string(sets.size()) + " critical sets";
    return rep.finish(0);
  }

  if (*apex) {
    Graph g = load_graph(rep, graph_path);
    f3_graph* aug = nullptr;
    std::uint32_t apex_vertex = 0;
    check(f3_apex_augment(g.g, k, multiplicities.data(), multiplicities.size(), budgets.cuts,
                          &aug, &apex_vertex));
    out["verdict"] = {{"apex", apex_vertex}};
    write_graph_out(aug, "graph");
    f3_graph_free(aug);
    rep.summary = "apex added as vertex " + std::to_string(apex_vertex);
    return rep.finish(0);
  }

  if (*split) {
    Graph g = load_graph(rep, graph_path);
    int found = 0;
    f3_graph* result = nullptr;
    check(f3_mader_split(g.g, vertex, k, budgets.cuts, &found, &result));
    out["verdict"] = {{"splitting_found", found != 0}};
    if (found) {
      write_graph_out(result, "graph");
      f3_graph_free(result);
      rep.summary = "complete splitting found";
      return rep.finish(0);
    }
    rep.summary = "no connectivity-preserving complete splitting (all pairings exhausted)";
    return rep.finish(1);
  }

  if (*gw) {
    f3_graph* w = nullptr;
    check(f3_wheel(&w));
    out["verdict"] = {{"vertices", f3_graph_vertex_count(w)},
                      {"edges", f3_graph_edge_count(w)}};
    write_graph_out(w, "graph");
    f3_graph_free(w);
    rep.summary = "wheel gadget written";
    return rep.finish(0);
  }

  if (*gh3) {
    Graph g = load_graph(rep, graph_path);
    auto dx = load_preorientation(rep, g.g, pre_path);
    std::vector<unsigned> sh(shifts);
    if (!sh.empty() && sh.size() != 6) die(2, "--shifts needs exactly six values");
    f3_hbuild* hb = nullptr;
    check(f3_mod3_replacement_build(g.g, vertex, dx.data(), sh.empty() ? nullptr : sh.data(),
                                    &hb));
    const f3_graph* h = f3_hbuild_graph(hb);
    size_t conn = 0;
    f3_status cs = f3_edge_connectivity(h, budgets.cuts, &conn);
    out["verdict"] = {{"vertices", f3_graph_vertex_count(h)},
                      {"edges", f3_graph_edge_count(h)}};
    if (cs == F3_OK) {
      out["verdict"]["edge_connectivity"] = conn;
      if (conn < 5)
        std::cerr << "warning: replacement graph is only " << conn << "-edge-connected\n";
    }
    write_graph_out(h, "graph");
    if (!prov_path.empty()) {
      check(f3_hbuild_write_provenance(hb, prov_path.c_str()));
      out["provenance_file"] = prov_path;
    }
    f3_hbuild_free(hb);
    rep.summary = "replacement graph built";
    return rep.finish(0);
  }

  if (*ghz3) {
    Graph g = load_graph(rep, graph_path);
    f3_graph* base = nullptr;
    check(f3_graph_delete_vertex(g.g, vertex, &base));
    rep.input(beta_path);
    std::vector<std::uint8_t> beta1(f3_graph_vertex_count(base), 0);
    check(f3_boundary_read_file(base, beta_path.c_str(), beta1.data()));
    f3_graph_free(base);
    f3_zbuild* zb = nullptr;
    check(f3_z3_replacement_build(g.g, vertex, beta1.data(), &zb));
    const f3_graph* h = f3_zbuild_graph(zb);
    std::vector<std::uint8_t> beta(f3_graph_vertex_count(g.g));
    check(f3_zbuild_beta(zb, beta.data()));
    out["verdict"] = {{"vertices", f3_graph_vertex_count(h)},
                      {"edges", f3_graph_edge_count(h)}};
    out["derived_boundary"] = boundary_json(g.g, beta);
    write_graph_out(h, "graph");
    if (!prov_path.empty()) {
      check(f3_zbuild_write_provenance(zb, prov_path.c_str()));
      out["provenance_file"] = prov_path;
    }
    f3_zbuild_free(zb);
    rep.summary = "replacement graph built";
    return rep.finish(0);
  }

  if (*gcross) {
    Graph g = load_graph(rep, graph_path);
    f3_graph* r = nullptr;
    check(f3_crossing_reduction(g.g, e1, e2, alt_double ? 1 : 0, &r));
    out["verdict"] = {{"vertices", f3_graph_vertex_count(r)},
                      {"edges", f3_graph_edge_count(r)}};
    write_graph_out(r, "graph");
    f3_graph_free(r);
    rep.summary = "crossing reduction built";
    return rep.finish(0);
  }

  if (*vw) {
    int ok1 = 0, ok2 = 0;
    std::uint64_t s1 = 0, c1 = 0, s2 = 0, c2 = 0;
    check(f3_wheel_minor_edge_check(&ok1, &s1, &c1));
    check(f3_wheel_sink_check(&ok2, &s2, &c2));
    out["verdict"] = {{"minor_edge_property", ok1 != 0}, {"sink_property", ok2 != 0}};
    out["counters"] = {{"orientations_scanned", s1 + s2},
                       {"mod3_orientations", c1},
                       {"all_ones_orientations", c2}};
    bool ok = ok1 && ok2;
    rep.summary = ok ? "both wheel properties hold over 65536 scanned orientations"
                     : "wheel property violated";
    return rep.finish(ok ? 0 : 1);
  }

  if (*v23) {
    f3_graphlist* list = nullptr;
    check(f3_corpus_random(seed, corpus_count, 6, 12, &list));
    std::uint64_t checks = 0, agreements = 0;
    for (std::size_t i = 0; i < f3_graphlist_count(list); ++i) {
      const f3_graph* g = f3_graphlist_get(list, i);
      for (std::size_t p = 0; p < f3_graph_vertex_count(g); ++p) {
        std::uint32_t v = f3_graph_vertex_at(g, p);
        int direct = 0, deletion = 0;
        check(f3_z3_extendable(g, v, 1, budgets.z3, &direct));
        check(f3_z3_extendable(g, v, 0, budgets.z3, &deletion));
        ++checks;
        agreements += (direct == deletion);
      }
    }
    f3_graphlist_free(list);
    out["verdict"] = {{"agreement", agreements == checks}};
    out["counters"] = {{"graphs", corpus_count}, {"checks", checks},
                       {"agreements", agreements}};
    out["mode"] = {{"seed", seed}};
    rep.summary = std::to_string(agreements) + "/" + std::to_string(checks) +
                  " direct = deleted-vertex agreements";
    return rep.finish(agreements == checks ? 0 : 1);
  }

  if (*lcheck || *lextend) {
    Graph g = load_graph(rep, graph_path);
    auto beta = load_boundary(rep, g.g, beta_path);
    auto dz = load_preorientation(rep, g.g, pre_path);
    f3_hypotheses* h = nullptr;
    check(f3_extension_check(g.g, beta.data(), vertex, dz.data(), budgets.cuts, &h));
    json hj = {{"order_ok", f3_hypotheses_order_ok(h) != 0},
               {"vertex_ok", f3_hypotheses_vertex_ok(h) != 0},
               {"cuts_ok", f3_hypotheses_cuts_ok(h) != 0},
               {"degree_z", f3_hypotheses_degree_z(h)},
               {"tau_z", f3_hypotheses_tau_z(h)}};
    if (f3_hypotheses_has_violating_set(h)) {
      std::vector<std::uint32_t> bad(f3_hypotheses_violating_size(h));
      check(f3_hypotheses_violating_set(h, bad.data()));
      hj["violating_set"] = bad;
      hj["violating_degree"] = f3_hypotheses_violating_degree(h);
      hj["violating_tau"] = f3_hypotheses_violating_tau(h);
    }
    bool pass = f3_hypotheses_pass(h) != 0;
    f3_hypotheses_free(h);
    out["verdict"] = {{"hypotheses_pass", pass}};
    out["hypotheses"] = hj;
    if (*lcheck) {
      rep.summary = pass ? "extension hypotheses hold" : "extension hypotheses fail";
      return rep.finish(pass ? 0 : 1);
    }
    if (!pass) {
      rep.summary = "extension hypotheses fail; not extending";
      return rep.finish(1);
    }
    std::vector<std::int8_t> dirs(f3_graph_edge_count(g.g), -1);
    check(f3_extension_extend(g.g, beta.data(), vertex, dz.data(), budgets.cuts, dirs.data()));
    out["witness"] = orientation_json(g.g, dirs);
    rep.summary = "extension found";
    return rep.finish(0);
  }

  if (*ld1) {
    Graph g = load_graph(rep, graph_path);
    auto beta = load_boundary(rep, g.g, beta_path);
    f3_apex* a = nullptr;
    check(f3_four_cut_apex_build(g.g, beta.data(), budgets.cuts, &a));
    json sets = json::array();
    for (std::size_t i = 0; i < f3_apex_critical_count(a); ++i) {
      std::vector<std::uint32_t> s(f3_apex_critical_size(a, i));
      check(f3_apex_critical_set(a, i, s.data()));
      sets.push_back(s);
    }
    out["construction"] = {{"degenerate", f3_apex_degenerate(a) != 0},
                           {"critical_sets", sets}};
    if (!f3_apex_degenerate(a)) out["construction"]["apex"] = f3_apex_vertex(a);
    f3_apex_free(a);
    std::vector<std::int8_t> dirs(f3_graph_edge_count(g.g), -1);
    check(f3_four_cut_apex_solve(g.g, beta.data(), budgets.cuts, dirs.data()));
    out["verdict"] = {{"beta_orientation_found", true}};
    out["witness"] = orientation_json(g.g, dirs);
    rep.summary = "beta-orientation found through the apex construction";
    return rep.finish(0);
  }

  if (*ld2) {
    Graph g = load_graph(rep, graph_path);
    f3_verdict* v = nullptr;
    check(f3_five_cut_check(g.g, samples == 0 ? 1 : 0, samples, seed, budgets.z3,
                            budgets.jobs, &v));
    out["verdict"] = verdict_json(g.g, v);
    bool holds = f3_verdict_holds(v) != 0;
    if (f3_verdict_has_witness(v)) out["witness"] = out["verdict"]["witness_boundary"];
    f3_verdict_free(v);
    rep.summary = holds ? "Z3-connected under the five-cut hypotheses"
                        : "counterexample boundary found";
    return rep.finish(holds ? 0 : 1);
  }

  if (*dfaces) {
    rep.input(emb_path);
    f3_embedding* e = nullptr;
    check(f3_embedding_read_file(emb_path.c_str(), &e));
    std::size_t fc = 0;
    check(f3_embedding_face_count(e, &fc));
    out["verdict"] = {{"faces", fc},
                      {"vertices", f3_graph_vertex_count(f3_embedding_graph(e))},
                      {"edges", f3_graph_edge_count(f3_embedding_graph(e))}};
    f3_embedding_free(e);
    rep.summary = std::to_string(fc) + " faces; Euler check passed";
    return rep.finish(0);
  }

  if (*dbuild) {
    rep.input(emb_path);
    f3_embedding* e = nullptr;
    check(f3_embedding_read_file(emb_path.c_str(), &e));
    f3_dual* d = nullptr;
    check(f3_embedding_dual(e, &d));
    out["verdict"] = {{"faces", f3_dual_face_count(d)},
                      {"dual_vertices", f3_graph_vertex_count(f3_dual_graph(d))},
                      {"dual_edges", f3_graph_edge_count(f3_dual_graph(d))}};
    write_graph_out(f3_dual_graph(d), "graph");
    f3_dual_free(d);
    f3_embedding_free(e);
    rep.summary = "dual graph built";
    return rep.finish(0);
  }

  if (*dcolor) {
    Graph g = load_graph(rep, graph_path);
    std::vector<std::uint8_t> colors(f3_graph_vertex_count(g.g), 0);
    int found = 0;
    check(f3_chromatic3(g.g, &found, colors.data()));
    out["verdict"] = {{"three_colorable", found != 0}};
    if (found) {
      json cj = json::object();
      for (std::size_t i = 0; i < colors.size(); ++i)
        cj[std::to_string(f3_graph_vertex_at(g.g, i))] = colors[i];
      out["witness"] = cj;
    }
    rep.summary = found ? "3-coloring found" : "not 3-colorable";
    return rep.finish(found ? 0 : 1);
  }

  if (*dcheck) {
    rep.input(emb_path);
    f3_embedding* e = nullptr;
    check(f3_embedding_read_file(emb_path.c_str(), &e));
    int mod3_flag = 0, col = 0;
    check(f3_duality_check(e, &mod3_flag, &col));
    f3_embedding_free(e);
    bool equal = mod3_flag == col;
    out["verdict"] = {{"mod3_orientable", mod3_flag != 0},
                      {"dual_three_colorable", col != 0},
                      {"equivalent", equal}};
    rep.summary = equal ? "duality holds on this embedding" : "DUALITY VIOLATION";
    return rep.finish(equal ? 0 : 1);
  }

  if (*corpus) {
    f3_graphlist* list = nullptr;
    check(f3_corpus_random(seed, corpus_count, 6, 12, &list));
    json files = json::array();
    auto write_one = [&](const f3_graph* g, const std::string& name) {
      std::string path = out_path + "/" + name + ".graph";
      check(f3_graph_write_file(g, path.c_str()));
      files.push_back(path);
    };
    for (std::size_t i = 0; i < f3_graphlist_count(list); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "random_%03zu", i);
      write_one(f3_graphlist_get(list, i), name);
    }
    f3_graphlist_free(list);
    for (std::size_t i = 0; i < f3_curated_count(); ++i) {
      f3_graph* g = nullptr;
      check(f3_curated_graph(i, &g));
      write_one(g, f3_curated_name(i));
      f3_graph_free(g);
    }
    out["verdict"] = {{"written", files.size()}};
    out["files"] = files;
    out["mode"] = {{"seed", seed}};
    rep.summary = std::to_string(files.size()) + " corpus files written";
    return rep.finish(0);
  }

  die(2, "no subcommand matched");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(std::move(args));
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
