#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sconn/blocks.hpp"
#include "sconn/edge_analytics.hpp"

namespace sconn {

struct SeparationAnswer {
  bool connected = true;
  std::optional<int> witness_edge;    // separating edge id
  std::optional<int> witness_vertex;  // separating vertex
};

// Pairwise queries over one index. Holds per-handle scratch (stamped marks), so
// concurrent callers need one handle each.
class QueryEngine {
 public:
  explicit QueryEngine(const ConnectivityIndex& ix);

  SeparationAnswer are_2ec(int x, int y) const;
  SeparationAnswer are_2vc(int x, int y);
  bool edge_separates(int e, int x, int y) const;
  bool vertex_separates(int u, int x, int y) const;
  // Ascending edge ids / vertex ids.
  std::vector<int> separating_edges(int x, int y);
  std::vector<int> separating_vertices(int x, int y);

  const std::vector<EdgeBlockLabel>& labels() const { return labels_; }
  const BlockForest& vr_forest() const { return forest_; }

  // Tree steps taken by the enumeration queries since the last reset.
  std::uint64_t steps() const { return steps_; }
  void reset_steps() { steps_ = 0; }

 private:
  void check_pair(int x, int y) const;
  std::optional<int> edge_witness(int x, int y) const;

  const ConnectivityIndex& ix_;
  std::vector<EdgeBlockLabel> labels_;
  BlockForest forest_;
  std::vector<std::uint32_t> edge_mark_, node_mark_, node_mark_r_, out_mark_;
  std::uint32_t stamp_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace sconn
