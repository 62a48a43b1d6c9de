#include "frank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "frank/connectivity.hpp"

namespace frank {
namespace {

using Mask = std::uint64_t;

// Bit-parallel digraph on at most 64 vertices.
class BitDigraph {
 public:
  BitDigraph(const Graph& g, Mask directions)
      : g_(g), out_(g.vertex_count(), 0), in_(g.vertex_count(), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [tail, head] = arc(e, directions);
      out_[tail] |= Mask{1} << head;
      in_[head] |= Mask{1} << tail;
    }
  }

  bool strongly_connected() const {
    return full(reach(out_)) && full(reach(in_));
  }

  bool strongly_connected_without(EdgeId e, Mask directions) {
    const auto [tail, head] = arc(e, directions);
    out_[tail] &= ~(Mask{1} << head);
    in_[head] &= ~(Mask{1} << tail);
    const bool ok = strongly_connected();
    out_[tail] |= Mask{1} << head;
    in_[head] |= Mask{1} << tail;
    return ok;
  }

 private:
  std::pair<Vertex, Vertex> arc(EdgeId e, Mask directions) const {
    const Edge& ed = g_.edge(e);
    const bool forward = (directions >> e) & 1;
    return forward ? std::pair{ed.u, ed.v} : std::pair{ed.v, ed.u};
  }

  Mask reach(const std::vector<Mask>& adj) const {
    Mask seen = 1;
    Mask frontier = 1;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  bool full(Mask m) const {
    const std::size_t n = g_.vertex_count();
    return n == 64 ? m == ~Mask{0} : m == (Mask{1} << n) - 1;
  }

  const Graph& g_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

void check_bounds(const Graph& g, const OracleOptions& options) {
  if (g.edge_count() > options.max_edges || g.edge_count() > 40) {
    throw LimitError("exhaustive search over " + std::to_string(g.edge_count()) +
                     " edges exceeds the bound of " +
                     std::to_string(std::min<std::size_t>(options.max_edges, 40)));
  }
  if (g.vertex_count() > 64) {
    throw LimitError("exhaustive search supports at most 64 vertices");
  }
}

// Direction bitmask (bit e = edge e forward) for lexicographic index x.
Mask directions_at(Mask x, std::size_t m) {
  Mask d = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if ((x >> (m - 1 - e)) & 1) d |= Mask{1} << e;
  }
  return d;
}

bool cover_within(const std::vector<std::vector<Mask>>& by_edge, Mask universe,
                  Mask covered, std::size_t left) {
  const Mask missing = universe & ~covered;
  if (!missing) return true;
  if (left == 0) return false;
  for (Mask m : by_edge[std::countr_zero(missing)]) {
    if (cover_within(by_edge, universe, covered | m, left - 1)) return true;
  }
  return false;
}

}  // namespace

std::vector<Orientation> enumerate_strong_orientations(
    const Graph& g, const OracleOptions& options) {
  check_bounds(g, options);
  const std::size_t m = g.edge_count();
  std::vector<Orientation> out;
  for (Mask x = 0; x < (Mask{1} << m); ++x) {
    const Mask d = directions_at(x, m);
    if (g.vertex_count() > 1 && !BitDigraph(g, d).strongly_connected()) continue;
    Orientation o(m);
    for (EdgeId e = 0; e < m; ++e) o.set_forward(e, (d >> e) & 1);
    out.push_back(std::move(o));
  }
  return out;
}

DeletableProfile deletable_profile(const Graph& g, const OracleOptions& options) {
  check_bounds(g, options);
  const std::size_t m = g.edge_count();
  DeletableProfile profile;
  std::set<Mask> masks;
  if (m == 0) return profile;
  // Reversing every arc preserves strong connectivity and the deletable set,
  // so only orientations with edge 0 backward are examined.
  for (Mask d = 0; d < (Mask{1} << (m - 1)); ++d) {
    const Mask dir = d << 1;
    BitDigraph digraph(g, dir);
    if (!digraph.strongly_connected()) continue;
    profile.strong_orientations += 2;
    Mask deletable = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (digraph.strongly_connected_without(e, dir)) deletable |= Mask{1} << e;
    }
    masks.insert(deletable);
  }

  std::vector<Mask> sorted(masks.begin(), masks.end());
  if (options.prune_to_maximal) {
    std::stable_sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) {
      return std::popcount(a) > std::popcount(b);
    });
    std::vector<Mask> maximal;
    for (Mask s : sorted) {
      const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                         [&](Mask t) { return (s & t) == s; });
      if (!dominated) maximal.push_back(s);
    }
    sorted = std::move(maximal);
    std::sort(sorted.begin(), sorted.end());
  }
  profile.masks = std::move(sorted);
  return profile;
}

std::size_t minimum_cover(const std::vector<Mask>& masks, Mask universe,
                          std::size_t k_max) {
  if (!universe) return 0;
  std::vector<std::vector<Mask>> by_edge(64);
  for (Mask m : masks) {
    for (Mask bits = m & universe; bits; bits &= bits - 1) {
      by_edge[std::countr_zero(bits)].push_back(m);
    }
  }
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (cover_within(by_edge, universe, 0, k)) return k;
  }
  return 0;
}

FrankResult frank_number(const Graph& g, const OracleOptions& options) {
  check_bounds(g, options);
  const EdgeCut cut = minimum_edge_cut(g);
  if (cut.size < 3) {
    throw ConnectivityError("Frank number needs a 3-edge-connected graph, got "
                            "edge connectivity " + std::to_string(cut.size),
                            cut.size, cut.edges);
  }
  const DeletableProfile profile = deletable_profile(g, options);
  const std::size_t m = g.edge_count();
  const Mask universe = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  const std::size_t k = minimum_cover(profile.masks, universe, options.k_max);
  if (k == 0) {
    throw UncoveredEdgeError("no " + std::to_string(options.k_max) +
                                 " strongly connected orientations cover every "
                                 "edge with a deletable arc",
                             {});
  }
  return {k, profile.strong_orientations, profile.masks.size()};
}

}  // namespace frank
