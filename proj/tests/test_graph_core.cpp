#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sconn/graph_core.hpp"

using namespace sconn;

TEST_CASE("parse edge list") {
  Digraph g = parse_digraph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(g.n() == 5);
  CHECK(g.m() == 5);
  for (int e = 0; e < 5; ++e) CHECK(g.edge(e) == std::pair{e, (e + 1) % 5});

  Digraph b = parse_digraph("3 6\n0 1\n1 0\n1 2\n2 1\n2 0\n0 2\n");
  CHECK(b.m() == 6);
  CHECK(b.edge(4) == std::pair{2, 0});
}

TEST_CASE("parse comments blanks and self-loops") {
  Digraph g = parse_digraph("# header comment\n\n3 3\n0 1\n# mid\n1 1\n1 2\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.edge(1) == std::pair{1, 2});
}

TEST_CASE("parse errors name the line") {
  auto line_of = [](const char* text) {
    try {
      parse_digraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK_THROWS_WITH_AS(parse_digraph("2 1\n0 2\n"), "vertex id out of range at line 2", ParseError);
  CHECK(line_of("2 1\n0 -1\n") == 2);
  CHECK(line_of("x 1\n") == 1);
  CHECK(line_of("2\n") == 1);
  CHECK(line_of("2 2\n0 1\n1 a\n") == 3);
  CHECK(line_of("2 1\n0 1\n1 0\n") == 3);
  CHECK(line_of("2 2\n0 1\n") == 3);
  CHECK(line_of("") == 1);
}

TEST_CASE("edge list round trip") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    Digraph h = parse_digraph(to_edge_list(g));
    CHECK(h.n() == g.n());
    CHECK(h.tails() == g.tails());
    CHECK(h.heads() == g.heads());
  }
}

TEST_CASE("reverse") {
  Digraph r = reverse(fx::cycle5());
  for (int e = 0; e < 5; ++e) CHECK(r.edge(e) == std::pair{(e + 1) % 5, e});

  auto sorted_edges = [](const Digraph& g) {
    std::vector<std::pair<int, int>> v;
    for (int e = 0; e < g.m(); ++e) v.push_back(g.edge(e));
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted_edges(reverse(fx::bitri())) == sorted_edges(fx::bitri()));

  Digraph empty = reverse(Digraph(0, {}));
  CHECK(empty.n() == 0);
  CHECK(empty.m() == 0);
}

TEST_CASE("adjacency is sorted by edge id with parallel neighbor arrays") {
  Digraph g = fx::random_instance(7, 8, 8, 24);
  for (int v = 0; v < g.n(); ++v) {
    for (int k = g.out().begin(v); k < g.out().end(v); ++k) {
      int e = g.out().list[k];
      CHECK(g.tail(e) == v);
      CHECK(g.out_heads()[k] == g.head(e));
      if (k > g.out().begin(v)) CHECK(g.out().list[k - 1] < e);
    }
    for (int k = g.in().begin(v); k < g.in().end(v); ++k) {
      int e = g.in().list[k];
      CHECK(g.head(e) == v);
      CHECK(g.in_tails()[k] == g.tail(e));
    }
  }
}

TEST_CASE("strongly connected components") {
  CHECK(strongly_connected_components(fx::cycle5()).count() == 1);
  CHECK(strongly_connected_components(fx::cycle5()).largest() == 5);

  Digraph path = fx::cycle5().without_edge(fx::eid(fx::cycle5(), 2, 3));
  auto p = strongly_connected_components(path);
  CHECK(p.count() == 5);
  CHECK(p.canonical() == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}});

  CHECK(strongly_connected_components(fx::fig8()).canonical() == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});

  Digraph two = parse_digraph("4 5\n0 1\n1 0\n1 2\n2 3\n3 2\n");
  auto q = strongly_connected_components(two);
  CHECK(q.canonical() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(q.smallest() == 2);
}

TEST_CASE("scc with skipped edge and vertex") {
  Digraph g = fx::fig8();
  auto a = strongly_connected_components(g, -1, 0);
  CHECK(a.excluded == 0);
  CHECK(a.component_of[0] == -1);
  CHECK(a.canonical() == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  auto b = strongly_connected_components(g, fx::eid(g, 1, 2), -1);
  CHECK(b.canonical() == std::vector<std::vector<int>>{{0, 3, 4}, {1}, {2}});
}

TEST_CASE("is strongly connected") {
  CHECK(is_strongly_connected(fx::fig8()));
  CHECK_FALSE(is_strongly_connected(fx::cycle5().without_edge(0)));
  CHECK(is_strongly_connected(Digraph(1, {})));
}

TEST_CASE("induced subgraph") {
  auto [h, map] = fx::fig8().induced({0, 3, 4});
  CHECK(h.n() == 3);
  CHECK(h.m() == 3);
  CHECK(map == std::vector<int>{0, -1, -1, 1, 2});
  CHECK(is_strongly_connected(h));
}

TEST_CASE("scc partition matches reachability closure") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> es;
    int m = static_cast<int>(rng() % 20);
    for (int i = 0; i < m; ++i) es.emplace_back(rng() % n, rng() % n);
    Digraph g(n, es);
    auto p = strongly_connected_components(g);
    for (int x = 0; x < n; ++x) {
      auto rx = oracle::reachable(g, x, -1, -1);
      for (int y = 0; y < n; ++y) {
        bool mutual = rx[y] && oracle::reachable(g, y, -1, -1)[x];
        CHECK(mutual == (p.component_of[x] == p.component_of[y]));
      }
    }
  }
}
