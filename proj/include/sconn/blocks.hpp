#pragma once

#include <vector>

#include "sconn/edge_analytics.hpp"

namespace sconn {

// Vertex sets of size >= 2, members ascending, ordered by smallest member.
using Blocks = std::vector<std::vector<int>>;

struct EdgeBlockLabel {
  int r, h, rr, hr;
  friend bool operator==(const EdgeBlockLabel&, const EdgeBlockLabel&) = default;
  friend auto operator<=>(const EdgeBlockLabel&, const EdgeBlockLabel&) = default;
};

// Per vertex x: bridge-decomposition roots in D and D^R and the nearest boundary
// vertices in H and H^R. Two vertices are 2-edge-connected iff labels are equal.
std::vector<EdgeBlockLabel> edge_block_labels(const ConnectivityIndex& ix);

Blocks two_edge_connected_blocks(const ConnectivityIndex& ix);

struct ChildrenIntersection {
  int u, v;
  std::vector<int> members;  // (c(u) + u) and (c^R(v) + v), ascending
};
// All nonempty c(u,v) sets, ordered by (u, v).
std::vector<ChildrenIntersection> children_intersection_sets(const ConnectivityIndex& ix);

// Replaces each block B by the sets B and (S + x), S in partition, keeping those of
// size >= 2. Partition sets must be disjoint and must not contain x.
Blocks refine(const Blocks& blocks, const std::vector<std::vector<int>>& partition, int x);

// Bipartite forest of vertices and vertex-resilient blocks. Node ids: vertices
// 0..n-1, block i is node n+i. Each tree is rooted at its smallest vertex.
class BlockForest {
 public:
  BlockForest() = default;
  BlockForest(int n, Blocks blocks);

  int n() const { return n_; }
  const Blocks& blocks() const { return blocks_; }
  const std::vector<int>& blocks_of(int v) const { return blocks_of_[v]; }
  int parent(int node) const { return parent_[node]; }
  // Both vertices belong to a common block.
  bool same_block(int x, int y) const;

 private:
  int n_ = 0;
  Blocks blocks_;
  std::vector<std::vector<int>> blocks_of_;
  std::vector<int> parent_;
};

BlockForest vertex_resilient_blocks(const ConnectivityIndex& ix);

Blocks two_vertex_connected_blocks(const ConnectivityIndex& ix);
Blocks two_vertex_connected_blocks(const ConnectivityIndex& ix, const BlockForest& vr,
                                   const std::vector<EdgeBlockLabel>& labels);

}  // namespace sconn
