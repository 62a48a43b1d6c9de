#include "frank/strong_connectivity.hpp"

#include <string>

namespace frank {
namespace {

bool reaches_all(const Graph& g, const Orientation& o,
                 std::optional<EdgeId> without, bool along) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (inc.edge == without || seen[inc.neighbor]) continue;
      // Arc leaves x iff (x is u) == forward.
      const bool leaves = (g.edge(inc.edge).u == x) == o.forward(inc.edge);
      if (leaves != along) continue;
      seen[inc.neighbor] = true;
      ++count;
      stack.push_back(inc.neighbor);
    }
  }
  return count == g.vertex_count();
}

}  // namespace

bool is_strongly_connected(const Graph& g, const Orientation& o,
                           std::optional<EdgeId> without) {
  if (o.size() != g.edge_count()) {
    throw Error("orientation has " + std::to_string(o.size()) +
                " directions for " + std::to_string(g.edge_count()) + " edges");
  }
  if (g.vertex_count() <= 1) return true;
  return reaches_all(g, o, without, true) && reaches_all(g, o, without, false);
}

std::vector<EdgeId> deletable_edges(const Graph& g, const Orientation& o) {
  if (!is_strongly_connected(g, o)) {
    throw Error("deletable arcs are only defined for a strongly connected "
                "orientation");
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_strongly_connected(g, o, e)) out.push_back(e);
  }
  return out;
}

}  // namespace frank
