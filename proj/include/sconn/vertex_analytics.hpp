#pragma once

#include <map>
#include <vector>

#include "sconn/edge_analytics.hpp"

namespace sconn {

// Trees of the vertex-split graph: every nontrivial dominator x (either
// orientation) gets an auxiliary node x' = n + k with all edges into x moved to
// x' and one extra edge (x', x) with id m + k. Ordinary nodes keep their ids.
struct SplitIndex {
  int n = 0, m = 0;
  TreeSystem sys;
  Decomposition dec;
  std::vector<int> aux_of;      // vertex -> auxiliary node, -1 if not split
  std::vector<int> aux_vertex;  // k -> split vertex

  int num_aux() const { return static_cast<int>(aux_vertex.size()); }
  int entry(int v) const { return aux_of[v] >= 0 ? aux_of[v] : v; }
};

// Built from the trees of ix in O(n), without traversing the split graph.
SplitIndex vertex_split(const ConnectivityIndex& ix);

// The split graph itself (for cross-checks): original edge i keeps id i, the
// auxiliary edge of the k-th split vertex has id m + k.
Digraph materialize_split_graph(const ConnectivityIndex& ix, const SplitIndex& sp);

bool is_strong_articulation_point(const ConnectivityIndex& ix, int v);
std::vector<int> strong_articulation_points(const ConnectivityIndex& ix);

SccPartition report_sccs_after_vertex(const ConnectivityIndex& ix, int u);

std::vector<int> count_sccs_all_vertices(const ConnectivityIndex& ix);
std::vector<int> count_sccs_all_vertices(const ConnectivityIndex& ix, const SplitIndex& sp);
std::vector<int> lscc_all_vertices(const ConnectivityIndex& ix, Extreme mode);
std::vector<int> lscc_all_vertices(const ConnectivityIndex& ix, const SplitIndex& sp, Extreme mode);

// Split vertex x -> number of vertices other than x that x dominates in both
// orientations.
std::map<int, int> common_descendant_counts_vertices(const ConnectivityIndex& ix, const SplitIndex& sp);

// Per vertex v: f(|C_1|) op ... op f(|C_k|) over the SCCs of G - v.
template <class T, class F, class Op, class Inv>
std::vector<T> aggregate_all_vertices(const ConnectivityIndex& ix, const SplitIndex& sp, F f, Op op, Inv inv,
                                      T identity) {
  const int n = ix.n();
  auto vals = bridge_aggregates<T>(sp.sys, sp.dec, f, op, inv, identity);
  std::vector<T> out(n, n > 1 ? op(identity, f(n - 1)) : identity);
  for (int x = 0; x < n; ++x)
    if (sp.aux_of[x] >= 0) out[x] = vals.fwd[x];
  const int s = ix.start();
  T at_s = identity;
  for (int c : ix.h().children(s)) at_s = op(at_s, f(ix.trees().hsize[c]));
  out[s] = at_s;
  return out;
}

template <class T, class F, class Op, class Inv>
std::vector<T> aggregate_all_vertices(const ConnectivityIndex& ix, F f, Op op, Inv inv, T identity) {
  return aggregate_all_vertices<T>(ix, vertex_split(ix), f, op, inv, identity);
}

}  // namespace sconn
