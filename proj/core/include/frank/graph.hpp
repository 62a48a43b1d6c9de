#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "frank/errors.hpp"

namespace frank {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v
/// and keep the id they were given at construction; everything downstream
/// (flows, orientations, certificates) is indexed by that id.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on loops, duplicate pairs, or out-of-range vertices.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edges of `v`, ascending by EdgeId.
  std::span<const Incidence> incident(Vertex v) const {
    return incidence_.at(v);
  }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }
  Vertex other_end(EdgeId e, Vertex v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Undirected multigraph (parallel edges allowed, loops not). `parent`, when
/// present, maps every edge to the Graph edge it was copied from.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges,
             std::optional<std::vector<EdgeId>> parent = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(Vertex v) const {
    return incidence_.at(v);
  }
  const std::optional<std::vector<EdgeId>>& parent() const noexcept {
    return parent_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
  std::optional<std::vector<EdgeId>> parent_;
};

struct Arc {
  Vertex tail;
  Vertex head;
};

/// One direction per edge; `forward(e)` means the arc runs u->v for the stored
/// pair (u, v) of edge e.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t edge_count, bool forward = true)
      : forward_(edge_count, forward) {}
  explicit Orientation(std::vector<bool> forward)
      : forward_(std::move(forward)) {}

  std::size_t size() const noexcept { return forward_.size(); }
  bool forward(EdgeId e) const { return forward_.at(e); }
  void set_forward(EdgeId e, bool forward) { forward_.at(e) = forward; }
  const std::vector<bool>& directions() const noexcept { return forward_; }

  Orientation reversed() const;
  Arc arc(const Graph& g, EdgeId e) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> forward_;
};

}  // namespace frank
