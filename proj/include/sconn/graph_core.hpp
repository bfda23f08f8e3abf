#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sconn {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Compressed adjacency: items of vertex v are list[start[v] .. start[v+1]).
struct Csr {
  std::vector<int> start;
  std::vector<int> list;

  int begin(int v) const { return start[v]; }
  int end(int v) const { return start[v + 1]; }
  int degree(int v) const { return start[v + 1] - start[v]; }
};

// Builds a Csr over `n` keys from (key, item) pairs, keeping pair order within a key.
Csr build_csr(int n, const std::vector<int>& keys, const std::vector<int>& items);

// Immutable digraph. Edge i is (tail[i], head[i]); out/in lists hold edge ids in
// increasing order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(tail_.size()); }
  int tail(int e) const { return tail_[e]; }
  int head(int e) const { return head_[e]; }
  std::pair<int, int> edge(int e) const { return {tail_[e], head_[e]}; }
  const Csr& out() const { return out_; }
  const Csr& in() const { return in_; }
  // out_heads()[k] is the head of edge out().list[k]; in_tails() likewise.
  const std::vector<int>& out_heads() const { return out_heads_; }
  const std::vector<int>& in_tails() const { return in_tails_; }
  const std::vector<int>& tails() const { return tail_; }
  const std::vector<int>& heads() const { return head_; }

  // Copy without edge `e` (other edge ids shift down by one).
  Digraph without_edge(int e) const;
  // Induced subgraph on `keep`; returns the graph and the old->new vertex map (-1 if dropped).
  std::pair<Digraph, std::vector<int>> induced(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<int> tail_, head_;
  Csr out_, in_;
  std::vector<int> out_heads_, in_tails_;
};

// Parses the edge-list text format. Self-loops are dropped, parallel edges kept.
Digraph parse_digraph(std::string_view text);

// Serializes to the edge-list format (inverse of parse_digraph for loop-free graphs).
std::string to_edge_list(const Digraph& g);

Digraph reverse(const Digraph& g);

struct SccPartition {
  std::vector<int> component_of;  // -1 for the excluded vertex
  std::vector<std::vector<int>> components;
  std::optional<int> excluded;

  std::size_t count() const { return components.size(); }
  std::size_t largest() const;
  std::size_t smallest() const;
  // Components with members ascending, ordered by smallest member.
  std::vector<std::vector<int>> canonical() const;
};

// Builds a partition from per-vertex labels (label -1 means excluded).
SccPartition partition_from_labels(const std::vector<int>& label, std::optional<int> excluded);

SccPartition strongly_connected_components(const Digraph& g);
// Same, ignoring edge `skip_edge` and vertex `skip_vertex` (pass -1 for none).
SccPartition strongly_connected_components(const Digraph& g, int skip_edge, int skip_vertex);

bool is_strongly_connected(const Digraph& g);

}  // namespace sconn
