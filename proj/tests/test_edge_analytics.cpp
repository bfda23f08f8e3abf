#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "sconn/edge_analytics.hpp"
#include "sconn/oracle.hpp"

using namespace sconn;
using Sets = std::vector<std::vector<int>>;

TEST_CASE("build index on fixtures") {
  Digraph g = fx::fig8();
  auto ix = build_index(g, 0);
  CHECK(strong_bridges(ix) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(ix.kind(fx::eid(g, 1, 2)) == BridgeKind::Common);
  CHECK(ix.kind(fx::eid(g, 3, 4)) == BridgeKind::Common);
  CHECK(ix.kind(fx::eid(g, 0, 1)) == BridgeKind::Forward);
  CHECK(ix.kind(fx::eid(g, 2, 0)) == BridgeKind::Reverse);

  CHECK(strong_bridges(build_index(fx::bitri(), 0)).empty());

  Digraph c(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 1}});
  CHECK(strong_bridges(build_index(c, 0)) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("build index rejects bad input") {
  Digraph two = parse_digraph("4 5\n0 1\n1 0\n1 2\n2 3\n3 2\n");
  CHECK_THROWS_WITH_AS(build_index(two, 0), "graph is not strongly connected (2 SCCs)", NotStronglyConnectedError);
  CHECK_THROWS_AS(build_index(two, 3), NotStronglyConnectedError);
  CHECK_THROWS_AS(build_index(fx::fig8(), 5), std::out_of_range);
}

TEST_CASE("report sccs after edge deletion") {
  Digraph g = fx::fig8();
  auto ix = build_index(g, 0);
  CHECK(report_sccs_after_edge(ix, fx::eid(g, 1, 2)).canonical() == Sets{{0, 3, 4}, {1}, {2}});
  CHECK(report_sccs_after_edge(ix, fx::eid(g, 0, 1)).canonical() == Sets{{0, 3, 4}, {1}, {2}});
  auto bx = build_index(fx::bitri(), 0);
  for (int e = 0; e < 6; ++e) CHECK(report_sccs_after_edge(bx, e).canonical() == Sets{{0, 1, 2}});
}

TEST_CASE("descendant counts") {
  Digraph g = fx::fig8();
  auto ix = build_index(g, 0);
  auto d = sccs_descendants(ix);
  CHECK(d.forward.at(fx::eid(g, 0, 1)) == 2);
  CHECK(d.forward.at(fx::eid(g, 1, 2)) == 1);
  auto c = sccs_common_descendants(ix);
  CHECK(c.at(fx::eid(g, 1, 2)) == 0);
  CHECK(c.at(fx::eid(g, 3, 4)) == 0);
  CHECK(common_descendant_counts(ix).at(fx::eid(g, 1, 2)) == 0);

  Digraph cy = fx::cycle5();
  CHECK(sccs_descendants(build_index(cy, 0)).forward.at(fx::eid(cy, 2, 3)) == 2);

  Digraph p = fx::two_cycle_pocket();
  auto px = build_index(p, 0);
  CHECK(px.kind(fx::eid(p, 1, 2)) == BridgeKind::Common);
  CHECK(sccs_common_descendants(px).at(fx::eid(p, 1, 2)) == 1);
  CHECK(common_descendant_counts(px).at(fx::eid(p, 1, 2)) == 2);

  CHECK(common_descendant_counts(build_index(fx::bitri(), 0)).empty());
}

TEST_CASE("descendant counts match induced-subgraph oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    auto ix = build_index(g, 0);
    const auto& sys = ix.trees();
    auto inside = [&](const RootedTree& t, int top, int e) {
      std::vector<int> keep;
      for (int x = 0; x < g.n(); ++x)
        if (t.is_ancestor(top, x)) keep.push_back(x);
      auto [h, map] = g.without_edge(e).induced(keep);
      return static_cast<int>(strongly_connected_components(h).count());
    };
    auto d = sccs_descendants(ix);
    for (auto [e, k] : d.forward) CHECK(k == inside(sys.d, g.head(e), e));
    for (auto [e, k] : d.reverse) CHECK(k == inside(sys.dr, g.tail(e), e));
    auto cnt = common_descendant_counts(ix);
    for (auto [e, k] : sccs_common_descendants(ix)) {
      std::vector<int> keep;
      for (int x = 0; x < g.n(); ++x)
        if (sys.d.is_ancestor(g.head(e), x) && sys.dr.is_ancestor(g.tail(e), x)) keep.push_back(x);
      CHECK(cnt.at(e) == static_cast<int>(keep.size()));
      auto [h, map] = g.without_edge(e).induced(keep);
      CHECK(k == static_cast<int>(strongly_connected_components(h).count()));
    }
  }
}

TEST_CASE("all-edge counts and extremes on fixtures") {
  auto f = build_index(fx::fig8(), 0);
  CHECK(count_sccs_all_edges(f) == std::vector<int>(6, 3));
  CHECK(lscc_all_edges(f, Extreme::Largest) == std::vector<int>(6, 3));
  CHECK(lscc_all_edges(f, Extreme::Smallest) == std::vector<int>(6, 1));
  auto c = build_index(fx::cycle5(), 0);
  CHECK(count_sccs_all_edges(c) == std::vector<int>(5, 5));
  CHECK(lscc_all_edges(c, Extreme::Largest) == std::vector<int>(5, 1));
  auto b = build_index(fx::bitri(), 0);
  CHECK(count_sccs_all_edges(b) == std::vector<int>(6, 1));
  CHECK(lscc_all_edges(b, Extreme::Largest) == std::vector<int>(6, 3));
  CHECK(lscc_all_edges(b, Extreme::Smallest) == std::vector<int>(6, 3));
}

TEST_CASE("aggregates over edge deletions") {
  auto f = build_index(fx::fig8(), 0);
  auto ones = aggregate_all_edges<long long>(
      f, [](int) { return 1LL; }, std::plus<>(), std::minus<>(), 0LL);
  CHECK(ones == std::vector<long long>(6, 3));
  auto pairs = aggregate_all_edges<long long>(
      f, [](int x) { return 1LL * x * (x - 1); }, std::plus<>(), std::minus<>(), 0LL);
  CHECK(pairs == std::vector<long long>(6, 6));
  auto c = build_index(fx::cycle5(), 0);
  auto prod = aggregate_all_edges<double>(
      c, [](int x) { return double(x); }, std::multiplies<>(), std::divides<>(), 1.0);
  CHECK(prod == std::vector<double>(5, 1.0));
}

TEST_CASE("edge analytics match the oracle on random instances") {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    auto ix = build_index(g, static_cast<int>(seed % g.n()));
    auto cnt = count_sccs_all_edges(ix);
    auto big = lscc_all_edges(ix, Extreme::Largest);
    auto small = lscc_all_edges(ix, Extreme::Smallest);
    auto sq = aggregate_all_edges<long long>(
        ix, [](int x) { return 1LL * x * x; }, std::plus<>(), std::minus<>(), 0LL);
    CHECK(strong_bridges(ix) == oracle::strong_bridges(g));
    CHECK(strong_bridges(ix).size() <= static_cast<std::size_t>(2 * g.n() - 2));
    for (int e = 0; e < g.m(); ++e) {
      auto want = oracle::sccs_after_edge(g, e);
      CHECK(report_sccs_after_edge(ix, e).canonical() == want.canonical());
      CHECK(cnt[e] == static_cast<int>(want.count()));
      CHECK(big[e] == static_cast<int>(want.largest()));
      CHECK(small[e] == static_cast<int>(want.smallest()));
      long long s2 = 0;
      for (auto& c : want.components) s2 += 1LL * c.size() * c.size();
      CHECK(sq[e] == s2);
    }
  }
}

TEST_CASE("edge results do not depend on the start vertex") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 8, 20);
    auto base = build_index(g, 0);
    for (int s = 1; s < g.n(); ++s) {
      auto ix = build_index(g, s);
      CHECK(strong_bridges(ix) == strong_bridges(base));
      CHECK(count_sccs_all_edges(ix) == count_sccs_all_edges(base));
      CHECK(lscc_all_edges(ix, Extreme::Largest) == lscc_all_edges(base, Extreme::Largest));
      CHECK(lscc_all_edges(ix, Extreme::Smallest) == lscc_all_edges(base, Extreme::Smallest));
    }
  }
}

TEST_CASE("footprint is linear") {
  for (int n : {100, 1000, 10000}) {
    Digraph g = oracle::random_strongly_connected_digraph({n, 5 * n, 3});
    auto ix = build_index(g, 0);
    CHECK(ix.footprint() <= static_cast<std::size_t>(64) * n);
  }
}
