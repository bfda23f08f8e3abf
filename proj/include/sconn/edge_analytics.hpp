#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sconn/decomposition.hpp"
#include "sconn/flow_forest.hpp"
#include "sconn/graph_core.hpp"

namespace sconn {

class NotStronglyConnectedError : public std::invalid_argument {
 public:
  explicit NotStronglyConnectedError(std::size_t count)
      : std::invalid_argument("graph is not strongly connected (" + std::to_string(count) + " SCCs)"),
        count_(count) {}
  std::size_t scc_count() const { return count_; }

 private:
  std::size_t count_;
};

enum class BridgeKind { None, Forward, Reverse, Common };
enum class Extreme { Largest, Smallest };

// Query structure for a strongly connected digraph and start vertex s.
class ConnectivityIndex {
 public:
  const Digraph& graph() const { return g_; }
  int start() const { return sys_.root; }
  int n() const { return g_.n(); }
  int m() const { return g_.m(); }
  const TreeSystem& trees() const { return sys_; }
  const Decomposition& decomposition() const { return dec_; }
  const RootedTree& d() const { return sys_.d; }
  const RootedTree& dr() const { return sys_.dr; }
  const RootedTree& h() const { return sys_.h; }
  const RootedTree& hr() const { return sys_.hr; }

  BridgeKind kind(int e) const;
  bool is_strong_bridge(int e) const { return kind(e) != BridgeKind::None; }

  // Built on first use; not counted in footprint().
  const NcaIndex& nca_h() const;
  const NcaIndex& nca_hr() const;

  // Retained ints excluding the input graph and the nca tables.
  std::size_t footprint() const { return sys_.footprint() + dec_.footprint(); }

 private:
  friend ConnectivityIndex build_index(const Digraph& g, int s);
  struct Lazy {
    std::once_flag once_h, once_hr;
    NcaIndex h, hr;
  };
  Digraph g_;
  TreeSystem sys_;
  Decomposition dec_;
  std::unique_ptr<Lazy> lazy_ = std::make_unique<Lazy>();
};

// Throws NotStronglyConnectedError, std::out_of_range for a bad start vertex.
ConnectivityIndex build_index(const Digraph& g, int s = 0);

std::vector<int> strong_bridges(const ConnectivityIndex& ix);

SccPartition report_sccs_after_edge(const ConnectivityIndex& ix, int e);

struct DescendantCounts {
  std::map<int, int> forward;  // bridge of G_s (u,v): #SCC inside D(v)
  std::map<int, int> reverse;  // bridge of G_s^R (u,v): #SCC inside D^R(u)
};
DescendantCounts sccs_descendants(const ConnectivityIndex& ix);

// Common bridge (u,v) -> #SCC inside D(v) and D^R(u).
std::map<int, int> sccs_common_descendants(const ConnectivityIndex& ix);
// Common bridge (u,v) -> |D(v) and D^R(u)|.
std::map<int, int> common_descendant_counts(const ConnectivityIndex& ix);

std::vector<int> count_sccs_all_edges(const ConnectivityIndex& ix);
std::vector<int> lscc_all_edges(const ConnectivityIndex& ix, Extreme mode);

// Per edge e: f(|C_1|) op ... op f(|C_k|) over the SCCs of G - e. op must be
// associative and commutative with inverse inv and identity element.
template <class T, class F, class Op, class Inv>
std::vector<T> aggregate_all_edges(const ConnectivityIndex& ix, F f, Op op, Inv inv, T identity) {
  const auto& sys = ix.trees();
  auto vals = bridge_aggregates<T>(sys, ix.decomposition(), f, op, inv, identity);
  const T whole = op(identity, f(ix.n()));
  std::vector<T> out(ix.m(), whole);
  for (int v = 0; v < ix.n(); ++v)
    if (sys.fwd_edge[v] >= 0) out[sys.fwd_edge[v]] = vals.fwd[v];
  for (int u = 0; u < ix.n(); ++u)
    if (sys.rev_edge[u] >= 0 && !sys.common_at_tail(u)) out[sys.rev_edge[u]] = vals.rev[u];
  return out;
}

// Labels (by representative vertex) the members of D(top), or D(top) minus top when
// strict, that are still -1, following loop nesting parents inside that set.
void label_loop_components(const RootedTree& D, const RootedTree& H, int top, bool strict, std::vector<int>& label);

}  // namespace sconn
