#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frank {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Structurally invalid graph: loop, parallel edge, vertex out of range.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// The input does not have the edge connectivity an operation requires.
/// Carries the connectivity found and a minimum cut as witness.
class ConnectivityError : public Error {
 public:
  ConnectivityError(const std::string& what, std::size_t lambda,
                    std::vector<EdgeId> cut)
      : Error(what), lambda_(lambda), cut_(std::move(cut)) {}
  std::size_t lambda() const noexcept { return lambda_; }
  const std::vector<EdgeId>& cut() const noexcept { return cut_; }

 private:
  std::size_t lambda_;
  std::vector<EdgeId> cut_;
};

/// No k edge-disjoint spanning trees exist. `partition` is a vertex partition
/// crossed by fewer than k(|partition|-1) edges.
class PackingError : public Error {
 public:
  PackingError(const std::string& what,
               std::vector<std::vector<Vertex>> partition,
               std::size_t crossing_edges)
      : Error(what),
        partition_(std::move(partition)),
        crossing_edges_(crossing_edges) {}
  const std::vector<std::vector<Vertex>>& partition() const noexcept {
    return partition_;
  }
  std::size_t crossing_edges() const noexcept { return crossing_edges_; }

 private:
  std::vector<std::vector<Vertex>> partition_;
  std::size_t crossing_edges_;
};

/// An edge set expected to be even has a vertex of odd degree.
class OddDegreeError : public Error {
 public:
  OddDegreeError(const std::string& what, Vertex vertex)
      : Error(what), vertex_(vertex) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

/// A value schedule would allow a zero superposition.
class ScheduleError : public Error {
 public:
  using Error::Error;
};

/// A configured search bound (edges, cycle-space dimension, k_max, attempts)
/// was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Some edge cannot be covered: by a cycle-space element, by a value-1 arc,
/// or by any deletable arc.
class UncoveredEdgeError : public Error {
 public:
  UncoveredEdgeError(const std::string& what, std::vector<EdgeId> edges)
      : Error(what), edges_(std::move(edges)) {}
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }

 private:
  std::vector<EdgeId> edges_;
};

/// A postcondition the construction guarantees did not hold. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace frank
