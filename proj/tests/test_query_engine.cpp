#include "doctest.h"
#include "fixtures.hpp"
#include "sconn/oracle.hpp"
#include "sconn/query_engine.hpp"

using namespace sconn;

TEST_CASE("2-edge connectivity queries on fixtures") {
  auto b = build_index(fx::bitri(), 0);
  QueryEngine qb(b);
  CHECK(qb.are_2ec(0, 1).connected);
  CHECK(qb.separating_edges(0, 2).empty());
  for (int e = 0; e < 6; ++e) CHECK_FALSE(qb.edge_separates(e, 0, 1));

  Digraph g = fx::fig8();
  auto f = build_index(g, 0);
  QueryEngine q(f);
  auto a = q.are_2ec(1, 2);
  CHECK_FALSE(a.connected);
  REQUIRE(a.witness_edge.has_value());
  auto sep = fx::eids(g, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(std::binary_search(sep.begin(), sep.end(), *a.witness_edge));
  CHECK(q.separating_edges(1, 2) == sep);
  CHECK_FALSE(q.edge_separates(fx::eid(g, 0, 3), 1, 2));
  CHECK(q.edge_separates(fx::eid(g, 1, 2), 1, 2));

  Digraph c = fx::cycle5();
  auto cx = build_index(c, 0);
  QueryEngine qc(cx);
  CHECK_FALSE(qc.are_2ec(0, 2).connected);
  CHECK(qc.separating_edges(0, 2) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("2-vertex connectivity queries on fixtures") {
  auto f = build_index(fx::fig8(), 0);
  QueryEngine q(f);
  CHECK(q.separating_vertices(1, 2) == std::vector<int>{0});
  auto a = q.are_2vc(1, 2);
  CHECK_FALSE(a.connected);
  CHECK(a.witness_vertex == 0);
  CHECK(q.vertex_separates(0, 1, 2));
  CHECK_FALSE(q.vertex_separates(3, 1, 2));

  auto c = build_index(fx::cycle5(), 0);
  QueryEngine qc(c);
  CHECK(qc.separating_vertices(0, 2) == std::vector<int>{1, 3, 4});

  auto b = build_index(fx::bitri(), 0);
  QueryEngine qb(b);
  CHECK(qb.are_2vc(0, 1).connected);
}

TEST_CASE("query argument errors") {
  auto f = build_index(fx::fig8(), 0);
  QueryEngine q(f);
  CHECK_THROWS_AS(q.are_2ec(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(q.are_2vc(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(q.separating_edges(0, 7), std::out_of_range);
  CHECK_THROWS_AS(q.vertex_separates(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(q.vertex_separates(9, 1, 2), std::out_of_range);
}

TEST_CASE("queries match the oracle with verified witnesses") {
  for (std::uint64_t seed = 700; seed < 780; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 10, 30);
    auto ix = build_index(g, static_cast<int>(seed % g.n()));
    QueryEngine q(ix);
    for (int x = 0; x < g.n(); ++x)
      for (int y = 0; y < g.n(); ++y) {
        if (x == y) continue;
        auto se = oracle::separating_edges(g, x, y);
        auto sv = oracle::separating_vertices(g, x, y);
        CHECK(q.separating_edges(x, y) == se);
        CHECK(q.separating_vertices(x, y) == sv);
        for (int e = 0; e < g.m(); ++e)
          CHECK(q.edge_separates(e, x, y) == std::binary_search(se.begin(), se.end(), e));
        for (int u = 0; u < g.n(); ++u)
          if (u != x && u != y) CHECK(q.vertex_separates(u, x, y) == std::binary_search(sv.begin(), sv.end(), u));
        auto a = q.are_2ec(x, y);
        CHECK(a.connected == se.empty());
        if (a.witness_edge) CHECK_FALSE(oracle::strongly_connected_pair(g, x, y, *a.witness_edge, -1));
        auto b = q.are_2vc(x, y);
        CHECK(b.connected == (se.empty() && sv.empty()));
        if (b.witness_vertex) CHECK_FALSE(oracle::strongly_connected_pair(g, x, y, -1, *b.witness_vertex));
        if (b.witness_edge) CHECK_FALSE(oracle::strongly_connected_pair(g, x, y, *b.witness_edge, -1));
        if (!b.connected) CHECK((b.witness_vertex.has_value() || b.witness_edge.has_value()));
      }
  }
}

TEST_CASE("enumeration steps are output sensitive") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Digraph g = fx::random_instance(seed, 2, 12, 36);
    auto ix = build_index(g, 0);
    QueryEngine q(ix);
    for (int x = 0; x < g.n(); ++x)
      for (int y = x + 1; y < g.n(); ++y) {
        q.reset_steps();
        auto k = q.separating_edges(x, y).size();
        CHECK(q.steps() <= 4 * (k + 1) + 8);
        q.reset_steps();
        k = q.separating_vertices(x, y).size();
        CHECK(q.steps() <= 4 * (k + 1) + 8);
      }
  }
}
