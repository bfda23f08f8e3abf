#include "doctest.h"
#include "fixtures.hpp"
#include "sconn/decomposition.hpp"
#include "sconn/edge_analytics.hpp"
#include "sconn/oracle.hpp"

using namespace sconn;

namespace {

std::vector<int> roots_of(const Digraph& g) {
  auto b = build_flow_bundle(g, 0);
  return bridge_decomposition(b.dom, b.bridge_into);
}

std::vector<int> common_bridges_by_definition(const Digraph& g, int s) {
  auto f = oracle::flow_graph_bridges(g, s);
  auto r = oracle::flow_graph_bridges(reverse(g), s);
  std::vector<int> out;
  std::set_intersection(f.begin(), f.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

std::vector<int> common_from_forest(const ConnectivityIndex& ix) {
  std::vector<int> out;
  for (int b : common_bridge_forest(ix.trees(), ix.decomposition()).heads) out.push_back(ix.trees().fwd_edge[b]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("bridge decomposition on fixtures") {
  CHECK(roots_of(fx::cycle5()) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(roots_of(fx::bitri()) == std::vector<int>{0, 0, 0});
  CHECK(roots_of(fx::fig8()) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("compressed tree") {
  RootedTree path({-1, 0, 1, 2, 3});
  auto c = compressed_tree(path, {0, 1, 2, 3, 4});
  CHECK(c.nodes == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(c.parent == std::vector<int>{-1, 0, 1, 2, 3});

  auto b = build_flow_bundle(fx::bitri(), 0);
  auto cb = compressed_tree(b.dom, bridge_decomposition(b.dom, b.bridge_into));
  CHECK(cb.nodes == std::vector<int>{0});

  RootedTree chain({-1, 0, 1, 2});
  auto r = bridge_decomposition(chain, {-1, -1, 7, -1});
  CHECK(r == std::vector<int>{0, 0, 2, 2});
  auto cc = compressed_tree(chain, r);
  CHECK(cc.nodes == std::vector<int>{0, 2});
  CHECK(cc.parent[2] == 0);
  CHECK(cc.parent[0] == -1);
}

TEST_CASE("common bridge forest on fixtures") {
  Digraph g = fx::fig8();
  auto ix = build_index(g, 0);
  auto q = common_bridge_forest(ix.trees(), ix.decomposition());
  CHECK(q.heads == std::vector<int>{2, 4});
  CHECK(q.parent == std::vector<int>{-1, -1});
  CHECK(common_from_forest(ix) == fx::eids(g, {{1, 2}, {3, 4}}));

  Digraph c = fx::cycle5();
  auto cx = build_index(c, 0);
  CHECK(common_from_forest(cx) == common_bridges_by_definition(c, 0));
  CHECK(common_from_forest(cx) == fx::eids(c, {{1, 2}, {2, 3}, {3, 4}}));

  auto bx = build_index(fx::bitri(), 0);
  CHECK(common_bridge_forest(bx.trees(), bx.decomposition()).heads.empty());
}

TEST_CASE("decomposition invariants on random instances") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    for (int s = 0; s < g.n(); ++s) {
      auto ix = build_index(g, s);
      const auto& sys = ix.trees();
      const auto& dec = ix.decomposition();
      CHECK(common_from_forest(ix) == common_bridges_by_definition(g, s));
      for (int v = 0; v < g.n(); ++v) {
        // r_v is the nearest D-ancestor entered by a bridge (or s)
        int z = dec.r[v];
        CHECK(sys.d.is_ancestor(z, v));
        CHECK((z == s || sys.fwd_edge[z] >= 0));
        for (int a = v; a != z; a = sys.d.parent(a)) CHECK(sys.fwd_edge[a] < 0);
        CHECK(sys.dr.is_ancestor(dec.rr[v], v));
        // the nearest boundary ancestor in H sits in another D-tree: r_{h(x)} is a D-ancestor of x
        if (v != s) CHECK(sys.d.is_ancestor(dec.r[sys.h.parent(v)], v));
      }
      int k = 0;
      for (int b : dec.common_heads) {
        int y = dec.q_parent[b];
        if (y >= 0) {
          CHECK(sys.d.is_proper_ancestor(y, b));
          CHECK(sys.common_at_head(y));
        }
        ++k;
      }
      // forest: |Q| nodes, parents point backwards in D preorder
      CHECK(k == static_cast<int>(dec.common_heads.size()));
    }
  }
}
