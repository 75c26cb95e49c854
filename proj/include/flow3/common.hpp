#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flow3 {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

enum class ErrorKind {
  invalid_argument,  // unknown identifiers, malformed values
  precondition,      // operation preconditions not met
  parse,             // text input rejected; message carries the line number
  budget,            // an exhaustive scan would exceed the configured cap
  internal,          // a structure guaranteed by theory is missing: a bug
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Caps for the exhaustive scans. Exceeding a cap raises ErrorKind::budget,
/// never silent truncation.
struct Budget {
  std::size_t cut_vertex_cap = 20;   // subset enumeration for cuts
  std::size_t z3_vertex_cap = 10;    // 3^(n-1) boundary enumeration
  std::size_t oracle_edge_cap = 20;  // 2^m orientation enumeration
  std::size_t hunt_vertex_cap = 8;   // graph enumeration
};

}  // namespace flow3
