#include "frank/group_flow.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <limits>
#include <queue>

#include "frank/connectivity.hpp"

namespace frank {
namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Bit per edge: the sum of the fundamental cycles of all non-tree edges.
// A tree edge lies on the fundamental cycle of f iff f crosses the tree edge's
// fundamental cut, so its bit is the parity of non-tree edge ends in the
// subtree below it.
std::vector<bool> sum_of_fundamental_cycles(const Graph& g,
                                            const std::vector<bool>& in_tree) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> bit(g.edge_count(), false);
  std::vector<bool> odd(n, false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    bit[e] = true;
    odd[g.edge(e).u] = !odd[g.edge(e).u];
    odd[g.edge(e).v] = !odd[g.edge(e).v];
  }

  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  order.reserve(n);
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    order.push_back(r);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      const Vertex x = order[head];
      for (const Incidence& inc : g.incident(x)) {
        if (!in_tree[inc.edge] || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        parent_edge[inc.neighbor] = inc.edge;
        order.push_back(inc.neighbor);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex x = *it;
    const EdgeId pe = parent_edge[x];
    if (pe == kNoEdge) continue;
    bit[pe] = odd[x];
    const Vertex up = g.other_end(pe, x);
    if (odd[x]) odd[up] = !odd[up];
  }
  return bit;
}

}  // namespace

GroupFlow jaeger_flow(const Graph& g, JaegerTrace* trace) {
  const EdgeCut cut = minimum_edge_cut(g);
  if (cut.size < 3) {
    throw ConnectivityError("graph is only " + std::to_string(cut.size) +
                                "-edge-connected; a 3-edge-connected graph "
                                "is required",
                            cut.size, cut.edges);
  }

  const Multigraph dbl = doubled(g);
  TreePacking packing = pack_spanning_trees(dbl, kCoordinates);

  GroupFlow flow;
  flow.values.assign(g.edge_count(), Z2Cube{});
  std::array<std::vector<EdgeId>, kCoordinates> projected;
  for (std::size_t c = 0; c < kCoordinates; ++c) {
    std::vector<bool> in_tree(g.edge_count(), false);
    for (EdgeId copy : packing.trees[c]) {
      const EdgeId e = (*dbl.parent())[copy];
      if (in_tree[e]) {
        throw InvariantError("spanning tree holds both copies of an edge");
      }
      in_tree[e] = true;
      projected[c].push_back(e);
    }
    std::sort(projected[c].begin(), projected[c].end());
    const std::vector<bool> bit = sum_of_fundamental_cycles(g, in_tree);
    for (EdgeId e = 0; e < g.edge_count(); ++e) flow.values[e].set(c, bit[e]);
  }

  if (!verify_group_flow(g, flow)) {
    throw InvariantError("constructed Z2^3 flow failed verification");
  }
  if (trace) {
    trace->packing = std::move(packing);
    trace->projected_trees = std::move(projected);
  }
  return flow;
}

bool verify_group_flow(const Graph& g, const GroupFlow& f) {
  if (f.values.size() != g.edge_count()) {
    throw Error("flow has " + std::to_string(f.values.size()) +
                " values for a graph with " + std::to_string(g.edge_count()) +
                " edges");
  }
  std::vector<std::uint8_t> parity(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.values[e].is_zero()) return false;
    parity[g.edge(e).u] ^= f.values[e].mask();
    parity[g.edge(e).v] ^= f.values[e].mask();
  }
  return std::all_of(parity.begin(), parity.end(),
                     [](std::uint8_t p) { return p == 0; });
}

std::size_t cycle_space_dimension(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::size_t comps = 0;
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    if (seen[r]) continue;
    ++comps;
    std::queue<Vertex> q;
    seen[r] = true;
    q.push(r);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(x)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          q.push(inc.neighbor);
        }
      }
    }
  }
  return g.edge_count() + comps - g.vertex_count();
}

GroupFlow cover_search_flow(const Graph& g, const CoverSearchOptions& options) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t m = g.edge_count();
  const std::size_t dim = cycle_space_dimension(g);
  if (dim > options.max_dimension) {
    throw LimitError("cycle space dimension " + std::to_string(dim) +
                     " exceeds the bound " +
                     std::to_string(options.max_dimension));
  }

  // BFS spanning forest; one fundamental cycle per non-tree edge.
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> tree(m, false);
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    std::queue<Vertex> q;
    seen[r] = true;
    q.push(r);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(x)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        parent_edge[inc.neighbor] = inc.edge;
        depth[inc.neighbor] = depth[x] + 1;
        tree[inc.edge] = true;
        q.push(inc.neighbor);
      }
    }
  }
  std::vector<Bits> basis;
  for (EdgeId e = 0; e < m; ++e) {
    if (tree[e]) continue;
    Bits cycle(m);
    cycle.set(e);
    Vertex a = g.edge(e).u;
    Vertex b = g.edge(e).v;
    while (a != b) {
      Vertex& deeper = depth[a] >= depth[b] ? a : b;
      cycle.set(parent_edge[deeper]);
      deeper = g.other_end(parent_edge[deeper], deeper);
    }
    basis.push_back(std::move(cycle));
  }

  Bits reachable(m);
  for (const Bits& b : basis) reachable |= b;
  if (!reachable.all()) {
    std::vector<EdgeId> bridges;
    for (EdgeId e = 0; e < m; ++e) {
      if (!reachable.test(e)) bridges.push_back(e);
    }
    std::string message = "edge " + std::to_string(bridges.front()) +
                          " lies on no cycle, so no nowhere-zero flow exists";
    throw UncoveredEdgeError(std::move(message), std::move(bridges));
  }

  const std::size_t count = std::size_t{1} << dim;
  std::vector<Bits> element(count, Bits(m));
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    element[mask] = element[mask & (mask - 1)] ^ basis[low];
  }

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      const Bits missing = ~(element[a] | element[b]);
      for (std::size_t c = b; c < count; ++c) {
        if (missing.is_subset_of(element[c])) {
          GroupFlow flow;
          flow.values.resize(m);
          for (EdgeId e = 0; e < m; ++e) {
            flow.values[e] = Z2Cube::from_bits(
                element[a].test(e), element[b].test(e), element[c].test(e));
          }
          return flow;
        }
      }
    }
  }
  throw UncoveredEdgeError("no three cycle-space elements cover every edge",
                           {});
}

}  // namespace frank
