#include "frank/tree_packing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>

namespace frank {
namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// A forest rooted per component, rebuilt from the owner array before each
// exchange search. Answers "same component?" and "tree path between".
class RootedForest {
 public:
  RootedForest(const Multigraph& g, const std::vector<std::size_t>& owner,
               std::size_t index)
      : g_(g),
        parent_edge_(g.vertex_count(), kNoEdge),
        depth_(g.vertex_count(), 0),
        root_(g.vertex_count(), 0) {
    std::vector<std::vector<Incidence>> adj(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (owner[e] != index) continue;
      adj[g.edge(e).u].push_back({g.edge(e).v, e});
      adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
      if (seen[r]) continue;
      seen[r] = true;
      root_[r] = r;
      stack.push_back(r);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const Incidence& inc : adj[x]) {
          if (seen[inc.neighbor]) continue;
          seen[inc.neighbor] = true;
          parent_edge_[inc.neighbor] = inc.edge;
          depth_[inc.neighbor] = depth_[x] + 1;
          root_[inc.neighbor] = r;
          stack.push_back(inc.neighbor);
        }
      }
    }
  }

  bool connected(Vertex a, Vertex b) const { return root_[a] == root_[b]; }

  // Edges of the forest path between a and b; both must be connected.
  std::vector<EdgeId> path(Vertex a, Vertex b) const {
    std::vector<EdgeId> from_a;
    std::vector<EdgeId> from_b;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        from_a.push_back(parent_edge_[a]);
        a = up(a);
      } else {
        from_b.push_back(parent_edge_[b]);
        b = up(b);
      }
    }
    from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
    return from_a;
  }

 private:
  static constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

  Vertex up(Vertex x) const {
    const Edge& e = g_.edge(parent_edge_[x]);
    return e.u == x ? e.v : e.u;
  }

  const Multigraph& g_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> root_;
};

class ForestPartition {
 public:
  ForestPartition(const Multigraph& g, std::size_t k)
      : g_(g), k_(k), owner_(g.edge_count(), kUnassigned) {}

  // Tries to add `e` to the union of forests, rerouting along the shortest
  // exchange path. Returns false when e is spanned by every forest's
  // closure; `closure` then holds every labelled edge.
  bool insert(EdgeId e, std::vector<bool>* closure = nullptr) {
    return search({e}, true, closure);
  }

  // Labels everything reachable from the given unassigned edges without
  // modifying the forests. Returns false if an augmentation exists.
  bool closure_of(const std::vector<EdgeId>& sources,
                  std::vector<bool>& closure) {
    return !search(sources, false, &closure);
  }

  const std::vector<std::size_t>& owner() const noexcept { return owner_; }

 private:
  struct Label {
    EdgeId from;
    std::size_t forest;
  };

  bool search(const std::vector<EdgeId>& sources, bool apply,
              std::vector<bool>* closure) {
    std::vector<RootedForest> forests;
    forests.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) forests.emplace_back(g_, owner_, i);

    std::vector<std::optional<Label>> label(g_.edge_count());
    std::vector<bool> visited(g_.edge_count(), false);
    std::deque<EdgeId> queue;
    for (EdgeId s : sources) {
      visited[s] = true;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const EdgeId x = queue.front();
      queue.pop_front();
      const Edge& ex = g_.edge(x);
      for (std::size_t i = 0; i < k_; ++i) {
        if (owner_[x] == i) continue;
        if (!forests[i].connected(ex.u, ex.v)) {
          if (apply) augment(x, i, label);
          return true;
        }
        for (EdgeId y : forests[i].path(ex.u, ex.v)) {
          if (visited[y]) continue;
          visited[y] = true;
          label[y] = Label{x, i};
          queue.push_back(y);
        }
      }
    }
    if (closure) *closure = std::move(visited);
    return false;
  }

  // x joins forest i; each displaced edge moves to where its label says.
  void augment(EdgeId x, std::size_t i,
               const std::vector<std::optional<Label>>& label) {
    for (;;) {
      owner_[x] = i;
      if (!label[x]) return;
      const Label l = *label[x];
      x = l.from;
      i = l.forest;
    }
  }

  const Multigraph& g_;
  std::size_t k_;
  std::vector<std::size_t> owner_;
};

std::vector<std::vector<Vertex>> components(const Multigraph& g,
                                            const std::vector<bool>& keep) {
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) continue;
    const Vertex a = find(g.edge(e).u);
    const Vertex b = find(g.edge(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> block_of(g.vertex_count(), kUnassigned);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex r = find(v);
    if (block_of[r] == kUnassigned) {
      block_of[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(v);
  }
  return blocks;
}

}  // namespace

TreePacking pack_spanning_trees(const Multigraph& g, std::size_t k) {
  if (k == 0) throw Error("tree packing: k must be positive");
  ForestPartition partition(g, k);
  for (EdgeId e = 0; e < g.edge_count(); ++e) partition.insert(e);

  const auto& owner = partition.owner();
  TreePacking packing;
  packing.trees.resize(k);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (owner[e] != kUnassigned) packing.trees[owner[e]].push_back(e);
  }

  const std::size_t need = g.vertex_count() == 0 ? 0 : g.vertex_count() - 1;
  const bool complete = std::all_of(
      packing.trees.begin(), packing.trees.end(),
      [&](const auto& t) { return t.size() == need; });
  if (complete) return packing;

  // The union is maximum. Edges reachable from the unassigned ones span
  // blocks that every forest already spans; their components form a
  // partition certifying the deficit.
  std::vector<EdgeId> unassigned;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (owner[e] == kUnassigned) unassigned.push_back(e);
  }
  std::vector<bool> closure(g.edge_count(), false);
  if (!unassigned.empty() && !partition.closure_of(unassigned, closure)) {
    throw InvariantError("tree packing: augmentation left after greedy pass");
  }
  auto blocks = components(g, closure);
  std::vector<std::size_t> block_of(g.vertex_count());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) block_of[v] = b;
  }
  std::size_t crossing = 0;
  for (const Edge& e : g.edges()) {
    if (block_of[e.u] != block_of[e.v]) ++crossing;
  }
  const std::size_t p = blocks.size();
  throw PackingError("no " + std::to_string(k) +
                         " edge-disjoint spanning trees: partition into " +
                         std::to_string(p) + " blocks is crossed by " +
                         std::to_string(crossing) + " edges, fewer than " +
                         std::to_string(k * (p - 1)),
                     std::move(blocks), crossing);
}

}  // namespace frank
