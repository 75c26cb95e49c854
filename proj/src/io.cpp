#include "flow3/io.hpp"

#include <fstream>
#include <sstream>

namespace flow3 {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

struct LineReader {
  std::istream& in;
  std::size_t line = 0;

  // next non-blank, non-comment line split into tokens; empty at EOF
  std::vector<std::string> next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
      }
      if (!tokens.empty()) return tokens;
    }
    return {};
  }
};

std::uint64_t parse_number(const std::string& tok, std::size_t line) {
  std::uint64_t value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') parse_fail(line, "expected a number, got '" + tok + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

Multigraph read_graph_body(LineReader& reader, std::vector<std::string> header) {
  if (header.empty()) parse_fail(reader.line, "missing 'vertices <n>' header");
  if (header[0] != "vertices" || header.size() != 2)
    parse_fail(reader.line, "expected 'vertices <n>', got '" + header[0] + "'");
  std::uint64_t n = parse_number(header[1], reader.line);
  std::vector<Edge> edges;
  for (;;) {
    auto tokens = reader.next();
    if (tokens.empty()) break;
    if (tokens[0] != "edge" || tokens.size() != 3)
      parse_fail(reader.line, "expected 'edge <u> <v>', got '" + tokens[0] + "'");
    std::uint64_t u = parse_number(tokens[1], reader.line);
    std::uint64_t v = parse_number(tokens[2], reader.line);
    if (u >= n || v >= n) parse_fail(reader.line, "endpoint out of range");
    if (u == v) parse_fail(reader.line, "loop edge rejected");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Multigraph::with_vertex_count(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace

Multigraph read_graph(std::istream& in) {
  LineReader reader{in};
  return read_graph_body(reader, reader.next());
}

Multigraph read_graph_string(const std::string& text) {
  std::istringstream ss(text);
  return read_graph(ss);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open " + path);
  return read_graph(f);
}

void write_graph(std::ostream& out, const Multigraph& g) {
  out << "vertices " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges())
    out << "edge " << g.index_of(e.a) << " " << g.index_of(e.b) << "\n";
}

std::string write_graph_string(const Multigraph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

void write_graph_file(const std::string& path, const Multigraph& g) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open " + path + " for writing");
  write_graph(f, g);
}

Boundary read_boundary(std::istream& in, const Multigraph& g) {
  LineReader reader{in};
  Boundary beta = Boundary::zero(g);
  std::vector<char> seen(g.vertex_count(), 0);
  for (;;) {
    auto tokens = reader.next();
    if (tokens.empty()) break;
    if (tokens[0] != "beta" || tokens.size() != 3)
      parse_fail(reader.line, "expected 'beta <vertex> <value>'");
    std::uint64_t v = parse_number(tokens[1], reader.line);
    std::uint64_t val = parse_number(tokens[2], reader.line);
    if (!g.has_vertex(static_cast<Vertex>(v))) parse_fail(reader.line, "unknown vertex");
    if (val > 2) parse_fail(reader.line, "boundary value must be 0, 1 or 2");
    std::size_t pos = g.index_of(static_cast<Vertex>(v));
    if (seen[pos]) parse_fail(reader.line, "vertex listed twice");
    seen[pos] = 1;
    beta.value[pos] = static_cast<std::uint8_t>(val);
  }
  return beta;
}

Boundary read_boundary_file(const std::string& path, const Multigraph& g) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open " + path);
  return read_boundary(f, g);
}

PartialOrientation read_preorientation(std::istream& in, const Multigraph& g) {
  LineReader reader{in};
  PartialOrientation p = PartialOrientation::all_undecided(g.edge_count());
  for (;;) {
    auto tokens = reader.next();
    if (tokens.empty()) break;
    if (tokens[0] != "arc" || tokens.size() != 4)
      parse_fail(reader.line, "expected 'arc <u> <v> <occurrence>'");
    Vertex u = static_cast<Vertex>(parse_number(tokens[1], reader.line));
    Vertex v = static_cast<Vertex>(parse_number(tokens[2], reader.line));
    std::uint64_t occ = parse_number(tokens[3], reader.line);
    if (!g.has_vertex(u) || !g.has_vertex(v)) parse_fail(reader.line, "unknown vertex");
    EdgeId match = static_cast<EdgeId>(-1);
    std::uint64_t count = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges()[e];
      if ((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u)) {
        if (count == occ) {
          match = e;
          break;
        }
        ++count;
      }
    }
    if (match == static_cast<EdgeId>(-1))
      parse_fail(reader.line, "no such parallel edge occurrence");
    if (p.decided(match)) parse_fail(reader.line, "edge oriented twice");
    p.set(match, g.edges()[match].a == u ? Dir::forward : Dir::reverse);
  }
  return p;
}

PartialOrientation read_preorientation_file(const std::string& path, const Multigraph& g) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open " + path);
  return read_preorientation(f, g);
}

Embedding read_embedding(std::istream& in) {
  LineReader reader{in};
  auto header = reader.next();
  if (header.empty() || header[0] != "vertices" || header.size() != 2)
    parse_fail(reader.line, "expected 'vertices <n>' header");
  std::uint64_t n = parse_number(header[1], reader.line);

  std::vector<Edge> edges;
  std::vector<std::pair<std::uint64_t, std::vector<std::string>>> rot_lines;
  for (;;) {
    auto tokens = reader.next();
    if (tokens.empty()) break;
    if (tokens[0] == "edge") {
      if (tokens.size() != 3) parse_fail(reader.line, "expected 'edge <u> <v>'");
      std::uint64_t u = parse_number(tokens[1], reader.line);
      std::uint64_t v = parse_number(tokens[2], reader.line);
      if (u >= n || v >= n) parse_fail(reader.line, "endpoint out of range");
      if (u == v) parse_fail(reader.line, "loop edge rejected");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else if (tokens[0] == "rot") {
      if (tokens.size() < 2) parse_fail(reader.line, "expected 'rot <v> <end>...'");
      rot_lines.emplace_back(reader.line, tokens);
    } else {
      parse_fail(reader.line, "unexpected directive '" + tokens[0] + "'");
    }
  }

  Embedding emb{Multigraph::with_vertex_count(static_cast<std::size_t>(n), std::move(edges)), {}};
  emb.rotation.order.resize(emb.graph.vertex_count());
  std::vector<char> have(emb.graph.vertex_count(), 0);
  for (const auto& [line, tokens] : rot_lines) {
    std::uint64_t v = parse_number(tokens[1], line);
    if (v >= n) parse_fail(line, "unknown vertex in rot line");
    if (have[v]) parse_fail(line, "duplicate rot line for vertex " + std::to_string(v));
    have[v] = 1;
    std::vector<EdgeEnd> ends;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const std::string& tok = tokens[i];
      char tag = tok.back();
      if (tag != 'a' && tag != 'b') parse_fail(line, "edge end must end in 'a' or 'b'");
      std::uint64_t e = parse_number(tok.substr(0, tok.size() - 1), line);
      if (e >= emb.graph.edge_count()) parse_fail(line, "unknown edge id in rot line");
      ends.push_back({static_cast<EdgeId>(e), static_cast<std::uint8_t>(tag == 'b')});
    }
    emb.rotation.order[v] = std::move(ends);
  }
  return emb;
}

Embedding read_embedding_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::io, "cannot open " + path);
  return read_embedding(f);
}

}  // namespace flow3
