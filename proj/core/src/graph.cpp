#include "frank/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace frank {
namespace {

void check_endpoints(std::size_t n, const Edge& e, std::size_t index) {
  if (e.u >= n || e.v >= n) {
    throw GraphError("edge " + std::to_string(index) + " (" +
                     std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") has a vertex outside 0.." +
                     std::to_string(n == 0 ? 0 : n - 1));
  }
  if (e.u == e.v) {
    throw GraphError("edge " + std::to_string(index) + " is a loop at vertex " +
                     std::to_string(e.u));
  }
}

std::vector<std::vector<Incidence>> build_incidence(
    std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Incidence>> inc(n);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    inc[edges[id].u].push_back({edges[id].v, id});
    inc[edges[id].v].push_back({edges[id].u, id});
  }
  return inc;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    check_endpoints(vertex_count_, e, i);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") at index " + std::to_string(i));
    }
  }
  incidence_ = build_incidence(vertex_count_, edges_);
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges,
                       std::optional<std::vector<EdgeId>> parent)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      parent_(std::move(parent)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    check_endpoints(vertex_count_, edges_[i], i);
    if (edges_[i].u > edges_[i].v) std::swap(edges_[i].u, edges_[i].v);
  }
  if (parent_ && parent_->size() != edges_.size()) {
    throw GraphError("parent map must cover every multigraph edge");
  }
  incidence_ = build_incidence(vertex_count_, edges_);
}

Orientation Orientation::reversed() const {
  std::vector<bool> flipped(forward_.size());
  for (std::size_t i = 0; i < forward_.size(); ++i) flipped[i] = !forward_[i];
  return Orientation(std::move(flipped));
}

Arc Orientation::arc(const Graph& g, EdgeId e) const {
  const Edge& ed = g.edge(e);
  return forward(e) ? Arc{ed.u, ed.v} : Arc{ed.v, ed.u};
}

}  // namespace frank
