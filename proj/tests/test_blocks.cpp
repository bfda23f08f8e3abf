#include "doctest.h"
#include "fixtures.hpp"
#include "sconn/blocks.hpp"
#include "sconn/oracle.hpp"

using namespace sconn;
using Sets = std::vector<std::vector<int>>;

namespace {

std::size_t membership(const Blocks& b) {
  std::size_t t = 0;
  for (auto& x : b) t += x.size();
  return t;
}

}  // namespace

TEST_CASE("2-edge-connected blocks on fixtures") {
  CHECK(two_edge_connected_blocks(build_index(fx::bitri(), 0)) == Sets{{0, 1, 2}});
  CHECK(two_edge_connected_blocks(build_index(fx::fig8(), 0)).empty());
  CHECK(two_edge_connected_blocks(build_index(fx::cycle5(), 0)).empty());
  CHECK(two_edge_connected_blocks(build_index(fx::bicycle4(), 0)) == Sets{{0, 1, 2, 3}});
}

TEST_CASE("children intersection sets") {
  auto b = children_intersection_sets(build_index(fx::bitri(), 0));
  auto it = std::find_if(b.begin(), b.end(), [](auto& c) { return c.u == 0 && c.v == 0; });
  REQUIRE(it != b.end());
  CHECK(it->members == std::vector<int>{0, 1, 2});

  auto k = children_intersection_sets(build_index(fx::k4(), 0));
  int big = 0;
  for (auto& c : k)
    if (c.members.size() >= 2) {
      ++big;
      CHECK(c.u == 0);
      CHECK(c.v == 0);
      CHECK(c.members == std::vector<int>{0, 1, 2, 3});
    }
  CHECK(big == 1);

  // Against the definition: c(u,v) = (children(u) + u) and (children^R(v) + v).
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    auto ix = build_index(g, 0);
    std::map<std::pair<int, int>, std::vector<int>> want;
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v)
        for (int x = 0; x < g.n(); ++x) {
          bool in_u = x == u || ix.d().parent(x) == u;
          bool in_v = x == v || ix.dr().parent(x) == v;
          if (in_u && in_v) want[{u, v}].push_back(x);
        }
    auto got = children_intersection_sets(ix);
    CHECK(got.size() == want.size());
    for (auto& c : got) CHECK(want[{c.u, c.v}] == c.members);
  }
}

TEST_CASE("refine") {
  const int x = 9;
  CHECK(refine({{1, 2, 3, x}}, {{1, 2}, {3}}, x) == Sets{{1, 2, x}, {3, x}});
  CHECK(refine({{1, 2}}, {{1}, {2}}, x).empty());
  CHECK(refine({{1, 2, 3}, {4, 5}}, {{1, 2, 3, 4, 5}}, x) == Sets{{1, 2, 3}, {4, 5}});
}

TEST_CASE("vertex-resilient blocks on fixtures") {
  CHECK(vertex_resilient_blocks(build_index(fx::bitri(), 0)).blocks() == Sets{{0, 1, 2}});
  CHECK(vertex_resilient_blocks(build_index(fx::fig8(), 0)).blocks().empty());
  Digraph t = fx::theta();
  auto vr = vertex_resilient_blocks(build_index(t, 0));
  CHECK(vr.blocks() == oracle::blocks(t, oracle::BlockKind::VertexResilient));
  CHECK(vr.same_block(0, 1));
}

TEST_CASE("2-vertex-connected blocks on fixtures") {
  CHECK(two_vertex_connected_blocks(build_index(fx::bitri(), 0)) == Sets{{0, 1, 2}});
  CHECK(two_vertex_connected_blocks(build_index(fx::fig8(), 0)).empty());
  CHECK(two_vertex_connected_blocks(build_index(fx::bicycle4(), 0)) == Sets{{0, 1, 2, 3}});
}

TEST_CASE("block forest") {
  BlockForest f(6, {{0, 1, 2}, {2, 3}, {4, 5}});
  CHECK(f.same_block(0, 2));
  CHECK(f.same_block(2, 3));
  CHECK_FALSE(f.same_block(0, 3));
  CHECK_FALSE(f.same_block(3, 4));
  CHECK(f.same_block(5, 4));
  CHECK(f.parent(0) == -1);
  CHECK(f.parent(4) == -1);
  CHECK(f.blocks_of(2).size() == 2);
}

TEST_CASE("blocks match the oracle with size bounds") {
  for (std::uint64_t seed = 500; seed < 600; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    auto ix = build_index(g, static_cast<int>(seed % g.n()));
    const std::size_t n = g.n();
    auto e2 = two_edge_connected_blocks(ix);
    auto vr = vertex_resilient_blocks(ix).blocks();
    auto v2 = two_vertex_connected_blocks(ix);
    CHECK(e2 == oracle::blocks(g, oracle::BlockKind::TwoEdge));
    CHECK(vr == oracle::blocks(g, oracle::BlockKind::VertexResilient));
    CHECK(v2 == oracle::blocks(g, oracle::BlockKind::TwoVertex));
    for (auto* b : {&e2, &vr, &v2}) {
      CHECK(b->size() <= n - 1);
      CHECK(membership(*b) <= 2 * n - 2);
    }
  }
}

TEST_CASE("blocks do not depend on the start vertex") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 8, 20);
    auto base = build_index(g, 0);
    auto e2 = two_edge_connected_blocks(base);
    auto vr = vertex_resilient_blocks(base).blocks();
    for (int s = 1; s < g.n(); ++s) {
      auto ix = build_index(g, s);
      CHECK(two_edge_connected_blocks(ix) == e2);
      CHECK(vertex_resilient_blocks(ix).blocks() == vr);
    }
  }
}
