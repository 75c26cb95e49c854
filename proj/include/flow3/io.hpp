#pragma once

#include <iosfwd>
#include <string>

#include "flow3/multigraph.hpp"
#include "flow3/orient.hpp"
#include "flow3/planar.hpp"

namespace flow3 {

// Graph text format, line oriented:
//   # comment
//   vertices <n>        vertices are 0..n-1
//   edge <u> <v>        one line per edge; parallel edges repeat the line
// Edge ids follow file order starting at 0. write(read(f)) reproduces the
// edge order byte for byte; graphs whose vertex ids are not 0..n-1 are
// relabeled by position on write.

Multigraph read_graph(std::istream& in);
Multigraph read_graph_string(const std::string& text);
Multigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Multigraph& g);
std::string write_graph_string(const Multigraph& g);
void write_graph_file(const std::string& path, const Multigraph& g);

// Boundary file: lines `beta <vertex> <value in 0..2>`; unlisted vertices
// default to 0.
Boundary read_boundary(std::istream& in, const Multigraph& g);
Boundary read_boundary_file(const std::string& path, const Multigraph& g);

// Partial orientation file: lines `arc <u> <v> <occurrence>` orienting the
// occurrence-th (0-based) parallel edge between u and v as u -> v.
PartialOrientation read_preorientation(std::istream& in, const Multigraph& g);
PartialOrientation read_preorientation_file(const std::string& path, const Multigraph& g);

// Embedding file: a graph block followed by one `rot <v> <end>...` line per
// vertex, ends written as `<edge-id>a` or `<edge-id>b`.
struct Embedding {
  Multigraph graph;
  RotationSystem rotation;
};
Embedding read_embedding(std::istream& in);
Embedding read_embedding_file(const std::string& path);

}  // namespace flow3
