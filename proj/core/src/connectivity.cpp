#include "frank/connectivity.hpp"

#include <limits>
#include <queue>
#include <span>

namespace frank {
namespace {

// Undirected unit-capacity network. Edge e carries flow in [-1, 1], positive
// meaning u->v; the residual capacity towards the other end is 1 -/+ flow.
class UnitFlowNetwork {
 public:
  UnitFlowNetwork(std::size_t n, std::span<const Edge> edges)
      : edges_(edges), adj_(n), flow_(edges.size(), 0) {
    for (EdgeId id = 0; id < edges.size(); ++id) {
      adj_[edges[id].u].push_back(id);
      adj_[edges[id].v].push_back(id);
    }
  }

  // Max flow from s to t, stopping once `limit` units are found.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    std::size_t total = 0;
    while (total < limit && augment(s, t)) ++total;
    return total;
  }

  // Vertices reachable from s in the residual network of the last max_flow.
  std::vector<bool> residual_reach(Vertex s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<Vertex> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (EdgeId id : adj_[x]) {
        const Vertex y = edges_[id].u == x ? edges_[id].v : edges_[id].u;
        if (!seen[y] && residual(id, x) > 0) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
    return seen;
  }

 private:
  int residual(EdgeId id, Vertex from) const {
    return edges_[id].u == from ? 1 - flow_[id] : 1 + flow_[id];
  }

  bool augment(Vertex s, Vertex t) {
    constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
    std::vector<EdgeId> via(adj_.size(), kNone);
    std::vector<bool> seen(adj_.size(), false);
    std::queue<Vertex> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty() && !seen[t]) {
      const Vertex x = q.front();
      q.pop();
      for (EdgeId id : adj_[x]) {
        const Vertex y = edges_[id].u == x ? edges_[id].v : edges_[id].u;
        if (!seen[y] && residual(id, x) > 0) {
          seen[y] = true;
          via[y] = id;
          q.push(y);
        }
      }
    }
    if (!seen[t]) return false;
    for (Vertex y = t; y != s;) {
      const EdgeId id = via[y];
      const Vertex x = edges_[id].u == y ? edges_[id].v : edges_[id].u;
      flow_[id] += edges_[id].u == x ? 1 : -1;
      y = x;
    }
    return true;
  }

  std::span<const Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<int> flow_;
};

EdgeCut min_cut(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) {
    throw GraphError("edge connectivity needs at least 2 vertices, got " +
                     std::to_string(n));
  }
  UnitFlowNetwork net(n, edges);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Vertex best_sink = 1;
  for (Vertex t = 1; t < n; ++t) {
    const std::size_t f = net.max_flow(0, t, best);
    if (f < best) {
      best = f;
      best_sink = t;
      if (best == 0) break;
    }
  }
  net.max_flow(0, best_sink, best);
  EdgeCut cut;
  cut.size = best;
  cut.source_side = net.residual_reach(0);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    if (cut.source_side[edges[id].u] != cut.source_side[edges[id].v]) {
      cut.edges.push_back(id);
    }
  }
  if (cut.edges.size() != cut.size) {
    throw InvariantError("min cut edge set does not match max flow value");
  }
  return cut;
}

}  // namespace

std::size_t edge_connectivity(const Graph& g) {
  return min_cut(g.vertex_count(), g.edges()).size;
}

std::size_t edge_connectivity(const Multigraph& g) {
  return min_cut(g.vertex_count(), g.edges()).size;
}

EdgeCut minimum_edge_cut(const Graph& g) {
  return min_cut(g.vertex_count(), g.edges());
}

EdgeCut minimum_edge_cut(const Multigraph& g) {
  return min_cut(g.vertex_count(), g.edges());
}

Multigraph doubled(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<EdgeId> parent;
  edges.reserve(2 * g.edge_count());
  parent.reserve(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back(g.edge(e));
    edges.push_back(g.edge(e));
    parent.push_back(e);
    parent.push_back(e);
  }
  return Multigraph(g.vertex_count(), std::move(edges), std::move(parent));
}

}  // namespace frank
