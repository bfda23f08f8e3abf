#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sconn/flow_forest.hpp"

namespace sconn {

// Forward/reverse dominator and loop nesting trees over a common node set, with
// the bridge structure of both orientations. Used for the input graph and for
// its vertex-split counterpart (where auxiliary nodes carry weight 0).
struct TreeSystem {
  int num_nodes = 0;
  int root = 0;
  RootedTree d, dr, h, hr;
  std::vector<int> weight;    // 1 for vertices of the input graph, 0 for auxiliary nodes
  std::vector<int> fwd_edge;  // id of the bridge (d(x), x) of D, else -1
  std::vector<int> rev_edge;  // id of the bridge whose child in D^R is x, else -1
  std::vector<int> reroute;   // node whose bridge root starts the bundle of x (x by default)
  // Weighted subtree sizes, filled by finalize().
  std::vector<int> dsize, drsize, hsize, hrsize;
  int total_weight = 0;

  // Bridge into b in D is also a bridge of the reverse orientation.
  bool common_at_head(int b) const { return fwd_edge[b] >= 0 && rev_edge[d.parent(b)] == fwd_edge[b]; }
  // Reverse bridge with child a is also a forward bridge.
  bool common_at_tail(int a) const { return rev_edge[a] >= 0 && fwd_edge[dr.parent(a)] == rev_edge[a]; }

  void finalize();
  std::size_t footprint() const;
};

// Root of each vertex's tree after deleting the marked tree edges (bridge_into[v] >= 0).
std::vector<int> bridge_decomposition(const RootedTree& d, const std::vector<int>& bridge_into);

// Tree on the decomposition roots: parent[z] = r[d(z)] for roots z other than the
// tree root, -1 everywhere else.
struct CompressedTree {
  std::vector<int> nodes;   // decomposition roots, in D preorder
  std::vector<int> parent;  // indexed by vertex
};
CompressedTree compressed_tree(const RootedTree& d, const std::vector<int>& r);

struct Decomposition {
  std::vector<int> r, rr;        // bridge decomposition roots of D and D^R
  std::vector<int> rc;           // common bridge decomposition roots of D
  std::vector<int> common_heads; // heads of common bridges, D preorder
  std::vector<int> q_parent;     // head of the parent bridge in Q (-1: root of Q, -2: not a common head)
  std::vector<int> cdepth;       // common bridges on the D path from the root to x

  std::size_t footprint() const;
};

Decomposition decompose(const TreeSystem& sys);

struct CommonBridgeForest {
  std::vector<int> heads;   // node per common bridge, identified by its head in D
  std::vector<int> parent;  // parent head, -1 for roots; aligned with heads
};
CommonBridgeForest common_bridge_forest(const TreeSystem& sys, const Decomposition& dec);

// Per decomposition root z: f-weighted aggregate over the SCCs of the bridge
// deletion that lie inside D(z) (or D^R(z) when reverse is set).
template <class T, class F, class Op, class Inv>
std::vector<T> descendant_aggregate(const TreeSystem& sys, const Decomposition& dec, bool reverse, F f, Op op,
                                    Inv inv, T identity) {
  const RootedTree& D = reverse ? sys.dr : sys.d;
  const RootedTree& H = reverse ? sys.hr : sys.h;
  const std::vector<int>& r = reverse ? dec.rr : dec.r;
  const std::vector<int>& hsz = reverse ? sys.hrsize : sys.hsize;
  std::vector<T> acc(sys.num_nodes, identity);
  for (int x = 0; x < sys.num_nodes; ++x) {
    if (x == sys.root || hsz[x] == 0) continue;
    int start = r[reverse ? x : sys.reroute[x]];
    int stop = r[H.parent(x)];
    if (start == stop) continue;
    T val = f(hsz[x]);
    acc[start] = op(acc[start], val);
    acc[stop] = inv(acc[stop], val);
  }
  const auto& order = D.order();
  for (int i = sys.num_nodes - 1; i > 0; --i) {
    int z = order[i];
    if (r[z] != z) continue;
    int p = r[D.parent(z)];
    acc[p] = op(acc[p], acc[z]);
  }
  return acc;
}

// Per common bridge head b: aggregate over the SCCs of the deletion of (d(b), b)
// lying inside D(b) and D^R(d(b)).
template <class T, class F, class Op, class Inv>
std::vector<T> common_aggregate(const TreeSystem& sys, const Decomposition& dec, F f, Op op, Inv inv, T identity) {
  const int N = sys.num_nodes;
  std::vector<T> start(N, identity), end(N, identity);
  if (dec.common_heads.empty()) return end;
  std::vector<int> qroot(N, -1);
  for (int b : dec.common_heads) qroot[b] = dec.q_parent[b] < 0 ? b : qroot[dec.q_parent[b]];
  // alt[y] = x when pairs of x are evaluated at y = reroute[x] != x.
  std::vector<int> alt(N, -1);
  for (int x = 0; x < N; ++x)
    if (sys.reroute[x] != x) alt[sys.reroute[x]] = x;
  std::vector<int> stack, last_pos(N, -1), saved(N, -1);
  auto eval = [&](int x) {
    if (x == sys.root || sys.hsize[x] == 0) return;
    int k = dec.cdepth[dec.rc[sys.h.parent(x)]];
    if (static_cast<int>(stack.size()) <= k) return;
    int e1 = stack[k];
    if (!sys.dr.is_ancestor(sys.d.parent(e1), x)) return;
    int e2 = stack[last_pos[qroot[e1]]];
    T val = f(sys.hsize[x]);
    end[e2] = op(end[e2], val);
    start[e1] = op(start[e1], val);
  };
  // Iterative dfs over D maintaining the common bridges on the current path.
  const auto& order = sys.d.order();
  std::vector<int> path;  // vertices on the current root path
  for (int i = 0; i < N; ++i) {
    int y = order[i];
    while (!path.empty() && !sys.d.is_ancestor(path.back(), y)) {
      int z = path.back();
      path.pop_back();
      if (dec.q_parent[z] != -2) {
        stack.pop_back();
        last_pos[qroot[z]] = saved[z];
      }
    }
    path.push_back(y);
    if (dec.q_parent[y] != -2) {
      stack.push_back(y);
      saved[y] = last_pos[qroot[y]];
      last_pos[qroot[y]] = static_cast<int>(stack.size()) - 1;
    }
    if (sys.reroute[y] == y) eval(y);
    if (alt[y] >= 0) eval(alt[y]);
  }
  std::vector<T> agg = end;
  for (auto it = dec.common_heads.rbegin(); it != dec.common_heads.rend(); ++it) {
    int b = *it, p = dec.q_parent[b];
    if (p >= 0) agg[p] = op(agg[p], inv(agg[b], start[b]));
  }
  return agg;
}

// Per-bridge aggregates over all SCCs of the deletion: fwd[b] for the bridge into b
// in D (common bridges included), rev[a] for reverse-only bridges with child a.
template <class T>
struct BridgeValues {
  std::vector<T> fwd, rev;
};

template <class T, class F, class Op, class Inv>
BridgeValues<T> bridge_aggregates(const TreeSystem& sys, const Decomposition& dec, F f, Op op, Inv inv, T identity) {
  auto fd = descendant_aggregate<T>(sys, dec, false, f, op, inv, identity);
  auto fr = descendant_aggregate<T>(sys, dec, true, f, op, inv, identity);
  auto fc = common_aggregate<T>(sys, dec, f, op, inv, identity);
  auto csize = common_aggregate<long long>(
      sys, dec, [](int w) { return static_cast<long long>(w); }, std::plus<long long>(), std::minus<long long>(), 0LL);
  BridgeValues<T> out{std::vector<T>(sys.num_nodes, identity), std::vector<T>(sys.num_nodes, identity)};
  auto with_rest = [&](T v, long long rest) { return rest > 0 ? op(v, f(static_cast<int>(rest))) : v; };
  for (int b = 0; b < sys.num_nodes; ++b) {
    if (sys.fwd_edge[b] < 0) continue;
    if (sys.common_at_head(b)) {
      int a = sys.d.parent(b);
      long long uni = static_cast<long long>(sys.dsize[b]) + sys.drsize[a] - csize[b];
      out.fwd[b] = with_rest(inv(op(fd[b], fr[a]), fc[b]), sys.total_weight - uni);
    } else {
      out.fwd[b] = with_rest(fd[b], sys.total_weight - sys.dsize[b]);
    }
  }
  for (int a = 0; a < sys.num_nodes; ++a) {
    if (sys.rev_edge[a] < 0 || sys.common_at_tail(a)) continue;
    out.rev[a] = with_rest(fr[a], sys.total_weight - sys.drsize[a]);
  }
  return out;
}

// Largest (or smallest) weighted SCC inside D(z) / D^R(z) per decomposition root
// z after deleting its bridge; 0 when there is none.
std::vector<int> descendant_extreme(const TreeSystem& sys, const Decomposition& dec, bool reverse, bool largest);

// Largest/smallest SCC over all SCCs of each bridge deletion, laid out like BridgeValues.
BridgeValues<int> bridge_extremes(const TreeSystem& sys, const Decomposition& dec, bool largest);

}  // namespace sconn
