#include <doctest.h>

#include <numeric>
#include <set>

#include "frank/connectivity.hpp"
#include "frank/group_flow.hpp"
#include "frank/tree_packing.hpp"
#include "support/graphs.hpp"

using namespace frank;
using namespace frank::testing;

namespace {

bool is_spanning_tree(std::size_t n, std::span<const Edge> all,
                      const std::vector<EdgeId>& tree) {
  if (tree.size() + 1 != n) return false;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : tree) {
    const Vertex a = find(all[e].u);
    const Vertex b = find(all[e].v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

void check_packing(const Multigraph& g, const TreePacking& p, std::size_t k) {
  REQUIRE(p.trees.size() == k);
  std::set<EdgeId> used;
  for (const auto& t : p.trees) {
    CHECK(is_spanning_tree(g.vertex_count(), g.edges(), t));
    for (EdgeId e : t) CHECK(used.insert(e).second);
  }
}

}  // namespace

TEST_CASE("Z2Cube arithmetic") {
  const Z2Cube a = Z2Cube::from_bits(true, false, true);
  CHECK(a.mask() == 5);
  CHECK(a[0]);
  CHECK(!a[1]);
  CHECK((a + a).is_zero());
  CHECK(a + Z2Cube(2) == Z2Cube(7));
}

TEST_CASE("doubled triangle packs into three 2-edge trees") {
  const Multigraph dbl = doubled(cycle(3));
  const TreePacking p = pack_spanning_trees(dbl, 3);
  check_packing(dbl, p, 3);

  // Exhaustive: every split of the 6 copies into three spanning trees.
  std::size_t triples = 0;
  bool found = false;
  for (int code = 0; code < 729; ++code) {
    int c = code;
    std::vector<std::vector<EdgeId>> trees(3);
    for (EdgeId e = 0; e < 6; ++e, c /= 3) trees[c % 3].push_back(e);
    bool ok = true;
    for (const auto& t : trees) ok = ok && is_spanning_tree(3, dbl.edges(), t);
    if (!ok) continue;
    ++triples;
    found = found || trees == p.trees;
  }
  CHECK(triples > 0);
  CHECK(found);
  std::size_t total = 0;
  for (const auto& t : p.trees) total += t.size();
  CHECK(total == 6);
}

TEST_CASE("a tree packs into itself") {
  const Graph t(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  const Multigraph m(5, {t.edges().begin(), t.edges().end()});
  const TreePacking p = pack_spanning_trees(m, 1);
  CHECK(p.trees[0] == std::vector<EdgeId>{0, 1, 2, 3});
}

TEST_CASE("packing failure reports a deficient partition") {
  const Multigraph m(2, {{0, 1}});
  try {
    pack_spanning_trees(m, 2);
    FAIL("expected PackingError");
  } catch (const PackingError& e) {
    const std::size_t p = e.partition().size();
    CHECK(p == 2);
    CHECK(e.crossing_edges() < 2 * (p - 1));
  }
  // K4 has 6 edges; three spanning trees need 9.
  const Graph k4 = complete(4);
  try {
    pack_spanning_trees(Multigraph(4, {k4.edges().begin(), k4.edges().end()}), 3);
    FAIL("expected PackingError");
  } catch (const PackingError& e) {
    const std::size_t p = e.partition().size();
    CHECK(e.crossing_edges() < 3 * (p - 1));
  }
}

TEST_CASE("packing needs the augmenting exchanges") {
  // K4 packs into two spanning trees, but greedy insertion in id order puts
  // (0,1),(0,2),(1,2) in trouble without rerouting.
  const Graph k4 = complete(4);
  const Multigraph m(4, {k4.edges().begin(), k4.edges().end()});
  check_packing(m, pack_spanning_trees(m, 2), 2);
  // Doubled graphs of 3-edge-connected graphs hold three trees.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Multigraph d = doubled(random_cubic_3ec(4 + 2 * (seed % 8), seed));
    check_packing(d, pack_spanning_trees(d, 3), 3);
  }
  // K6 holds three edge-disjoint spanning trees on its own.
  const Graph k6 = complete(6);
  const Multigraph m6(6, {k6.edges().begin(), k6.edges().end()});
  check_packing(m6, pack_spanning_trees(m6, 3), 3);
}

TEST_CASE("verify_group_flow") {
  GroupFlow all7{std::vector<Z2Cube>(6, Z2Cube(7))};
  CHECK(!verify_group_flow(complete(4), all7));
  GroupFlow c4{std::vector<Z2Cube>(4, Z2Cube(1))};
  CHECK(verify_group_flow(cycle(4), c4));
  c4.values[2] = Z2Cube{};
  CHECK(!verify_group_flow(cycle(4), c4));
  CHECK_THROWS_AS(verify_group_flow(cycle(5), c4), Error);
}

TEST_CASE("jaeger_flow on named graphs and its intermediate state") {
  for (const Graph& g : {complete(4), petersen(), k33(), prism(), complete(5)}) {
    JaegerTrace trace;
    const GroupFlow f = jaeger_flow(g, &trace);
    CHECK(verify_group_flow(g, f));
    std::vector<int> membership(g.edge_count(), 0);
    for (std::size_t c = 0; c < kCoordinates; ++c) {
      CHECK(is_spanning_tree(g.vertex_count(), g.edges(), trace.projected_trees[c]));
      std::vector<bool> in_tree(g.edge_count(), false);
      for (EdgeId e : trace.projected_trees[c]) {
        in_tree[e] = true;
        ++membership[e];
      }
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!in_tree[e]) CHECK(f.values[e][c]);
      }
    }
    for (int count : membership) CHECK(count <= 2);
  }
}

TEST_CASE("jaeger_flow rejects 2-edge-connected input with a cut witness") {
  try {
    jaeger_flow(cycle(3));
    FAIL("expected ConnectivityError");
  } catch (const ConnectivityError& e) {
    CHECK(e.lambda() == 2);
    CHECK(e.cut().size() == 2);
  }
}

TEST_CASE("cover_search_flow") {
  CHECK(cycle_space_dimension(complete(4)) == 3);
  CHECK(cycle_space_dimension(petersen()) == 6);
  CHECK(verify_group_flow(complete(4), cover_search_flow(complete(4))));
  CHECK(verify_group_flow(petersen(), cover_search_flow(petersen())));
  CHECK(verify_group_flow(cycle(4), cover_search_flow(cycle(4))));

  // Two triangles joined by a bridge.
  const Graph bridged(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  try {
    cover_search_flow(bridged);
    FAIL("expected UncoveredEdgeError");
  } catch (const UncoveredEdgeError& e) {
    CHECK(e.edges() == std::vector<EdgeId>{6});
  }
  CHECK_THROWS_AS(cover_search_flow(complete(6), {.max_dimension = 5}), LimitError);
}

TEST_CASE("flow constructions agree on validity across random cubic graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_cubic_3ec(4 + 2 * (seed % 6), 500 + seed);
    CHECK(verify_group_flow(g, jaeger_flow(g)));
    if (cycle_space_dimension(g) <= 8) {
      CHECK(verify_group_flow(g, cover_search_flow(g)));
    }
  }
}
