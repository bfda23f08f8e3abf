#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sconn/graph_core.hpp"
#include "sconn/oracle.hpp"

namespace fx {

using sconn::Digraph;

inline Digraph cycle5() { return Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
inline Digraph fig8() { return Digraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }
inline Digraph bitri() { return Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}}); }
inline Digraph bicycle4() {
  return Digraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}});
}
inline Digraph k4() {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) e.emplace_back(a, b);
  return Digraph(4, e);
}
// Common bridge (1,2) with D(2) and D^R(1) meeting in the 2-cycle {3,4}.
inline Digraph two_cycle_pocket() {
  return Digraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 3}, {4, 1}, {2, 5}, {5, 0}});
}
// Hubs 0 and 1 joined by three internally disjoint 2-paths in each direction.
inline Digraph theta() {
  return Digraph(8, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}, {1, 5}, {5, 0}, {1, 6}, {6, 0}, {1, 7}, {7, 0}});
}

// First edge id t -> h.
inline int eid(const Digraph& g, int t, int h) {
  for (int e = 0; e < g.m(); ++e)
    if (g.tail(e) == t && g.head(e) == h) return e;
  throw std::invalid_argument("no such edge");
}

inline std::vector<int> eids(const Digraph& g, std::vector<std::pair<int, int>> es) {
  std::vector<int> out;
  for (auto [t, h] : es) out.push_back(eid(g, t, h));
  std::sort(out.begin(), out.end());
  return out;
}

// Random strongly connected instance with n in [lo, hi] and n <= m <= max_m.
inline Digraph random_instance(std::uint64_t seed, int lo, int hi, int max_m) {
  std::mt19937_64 rng(seed);
  int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  int m = std::uniform_int_distribution<int>(n, std::max(n, max_m))(rng);
  return sconn::oracle::random_strongly_connected_digraph({n, m, seed});
}

}  // namespace fx
