#pragma once

#include <cstdint>
#include <vector>

#include "sconn/graph_core.hpp"

// Brute-force reference implementations. Deliberately built on graph_core only.
namespace sconn::oracle {

SccPartition sccs_after_edge(const Digraph& g, int e);
SccPartition sccs_after_vertex(const Digraph& g, int u);

std::vector<int> strong_bridges(const Digraph& g);
std::vector<int> strong_articulation_points(const Digraph& g);

// True iff x and y are mutually reachable once edge skip_edge and vertex skip_vertex
// (-1 for none) are removed.
bool strongly_connected_pair(const Digraph& g, int x, int y, int skip_edge, int skip_vertex);

std::vector<int> separating_edges(const Digraph& g, int x, int y);
std::vector<int> separating_vertices(const Digraph& g, int x, int y);

enum class BlockKind { TwoEdge, VertexResilient, TwoVertex };

// Maximal sets of size >= 2 that are pairwise related; members ascending, sets
// ordered by smallest member. Intended for n <= 12.
std::vector<std::vector<int>> blocks(const Digraph& g, BlockKind kind);

// Pairwise relation matrix used by blocks().
std::vector<std::vector<char>> block_relation(const Digraph& g, BlockKind kind);

// Vertices reachable from s, optionally avoiding a vertex and an edge.
std::vector<char> reachable(const Digraph& g, int s, int skip_edge, int skip_vertex);

// Immediate dominators by per-vertex deletion (-1 for s).
std::vector<int> immediate_dominators(const Digraph& g, int s);

// Edges (u,v) contained in every path from s to v.
std::vector<int> flow_graph_bridges(const Digraph& g, int s);

// Loop nesting parents for the dfs tree given by `parent` (-1 at the root or
// for vertices outside every loop).
std::vector<int> loop_nesting_parents(const Digraph& g, const std::vector<int>& parent);

struct RandomSpec {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
};

// Random Hamiltonian cycle plus m - n random extra edges, in shuffled order.
// Throws std::invalid_argument when m < n or n < 2.
Digraph random_strongly_connected_digraph(const RandomSpec& spec);

}  // namespace sconn::oracle
