#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sconn/graph_core.hpp"

namespace sconn {

class UnreachableError : public std::runtime_error {
 public:
  explicit UnreachableError(int v)
      : std::runtime_error("vertex " + std::to_string(v) + " unreachable"), vertex_(v) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

// Rooted forest given by a parent array (-1 marks a root). Children are kept in
// ascending id order; preorder visits roots in ascending id order.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }
  std::span<const int> children(int v) const {
    return {child_.list.data() + child_.begin(v), static_cast<std::size_t>(child_.degree(v))};
  }
  int num_children(int v) const { return child_.degree(v); }
  int pre(int v) const { return pre_[v]; }
  int subtree_size(int v) const { return size_[v]; }
  int depth(int v) const { return depth_[v]; }
  // order()[i] is the vertex with preorder number i.
  const std::vector<int>& order() const { return order_; }

  bool is_ancestor(int u, int v) const { return pre_[u] <= pre_[v] && pre_[v] < pre_[u] + size_[u]; }
  bool is_proper_ancestor(int u, int v) const { return u != v && is_ancestor(u, v); }

  // Number of retained ints, for footprint accounting.
  std::size_t footprint() const;

 private:
  std::vector<int> parent_;
  Csr child_;
  std::vector<int> pre_, size_, depth_, order_;
};

using AncestorIndex = RootedTree;
inline AncestorIndex build_ancestor_index(std::vector<int> parent) { return RootedTree(std::move(parent)); }

// Constant-time nearest common ancestor via a sparse table over preorder.
class NcaIndex {
 public:
  NcaIndex() = default;
  explicit NcaIndex(const RootedTree& t);
  // -1 when u and v lie in different trees.
  int nca(int u, int v) const;

 private:
  const RootedTree* tree_ = nullptr;
  std::vector<std::vector<int>> table_;  // table_[k][i]: min-depth vertex of order[i .. i+2^k)
  std::vector<std::uint8_t> log2_;
};

inline NcaIndex build_nca_index(const RootedTree& t) { return NcaIndex(t); }

enum class EdgeClass : std::uint8_t { Tree, Forward, Back, Cross };

struct DfsTree {
  int root = 0;
  std::vector<int> parent;       // -1 at the root
  std::vector<int> parent_edge;  // edge id of the tree edge into v, -1 at the root
  std::vector<int> pre, size, order;
  std::vector<EdgeClass> edge_class;

  bool is_ancestor(int u, int v) const { return pre[u] <= pre[v] && pre[v] < pre[u] + size[u]; }
};

// Iterative dfs from s, children in edge-list order. Throws UnreachableError.
DfsTree dfs_tree(const Digraph& g, int s);

struct DominatorTree {
  int root = 0;
  RootedTree tree;               // parent = immediate dominator
  std::vector<int> nontrivial;   // vertices != root with children, ascending

  int idom(int v) const { return tree.parent(v); }
};

DominatorTree dominator_tree(const Digraph& g, int s);

using LoopNestingTree = RootedTree;

LoopNestingTree loop_nesting_tree(const Digraph& g, const DfsTree& t);

// Edge ids (ascending) of the bridges of the flow graph g_s, found independently
// by a dominator pass over g with every edge subdivided.
std::vector<int> flow_graph_bridges(const Digraph& g, int s, const DominatorTree& d);

// Immediate dominators of a graph given by node adjacency lists. idom[s] = -1,
// unreachable nodes get -2.
std::vector<int> immediate_dominators(int num_nodes, int s, const Csr& succ, const Csr& pred);
// Same for a graph whose vertices are all reached by t.
std::vector<int> immediate_dominators(const Digraph& g, const DfsTree& t);

struct FlowForestBundle {
  int root = 0;
  RootedTree dom;                // D
  RootedTree loop;               // H
  std::vector<int> bridge_into;  // edge id of the bridge (d(v), v), else -1
};

// D, H and the bridges of g_s (of the reverse graph when `reverse`, with the
// original edge ids) from a single dfs.
FlowForestBundle build_flow_bundle(const Digraph& g, int s, bool reverse = false);

}  // namespace sconn
