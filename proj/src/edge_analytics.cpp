#include "sconn/edge_analytics.hpp"

namespace sconn {

ConnectivityIndex build_index(const Digraph& g, int s) {
  if (s < 0 || s >= g.n()) throw std::out_of_range("start vertex out of range");
  ConnectivityIndex ix;
  FlowForestBundle fwd, rev;
  try {
    // Both searches reach every vertex iff g is strongly connected.
    fwd = build_flow_bundle(g, s);
    rev = build_flow_bundle(g, s, true);
  } catch (const UnreachableError&) {
    throw NotStronglyConnectedError(strongly_connected_components(g).count());
  }
  ix.g_ = g;
  TreeSystem& sys = ix.sys_;
  sys.num_nodes = g.n();
  sys.root = s;
  sys.d = std::move(fwd.dom);
  sys.h = std::move(fwd.loop);
  sys.dr = std::move(rev.dom);
  sys.hr = std::move(rev.loop);
  sys.fwd_edge = std::move(fwd.bridge_into);
  sys.rev_edge = std::move(rev.bridge_into);
  sys.weight.assign(g.n(), 1);
  sys.reroute.resize(g.n());
  for (int v = 0; v < g.n(); ++v) sys.reroute[v] = v;
  sys.finalize();
  ix.dec_ = decompose(sys);
  return ix;
}

BridgeKind ConnectivityIndex::kind(int e) const {
  if (e < 0 || e >= m()) throw std::out_of_range("edge index out of range");
  bool f = sys_.fwd_edge[g_.head(e)] == e;
  bool r = sys_.rev_edge[g_.tail(e)] == e;
  if (f && r) return BridgeKind::Common;
  if (f) return BridgeKind::Forward;
  if (r) return BridgeKind::Reverse;
  return BridgeKind::None;
}

const NcaIndex& ConnectivityIndex::nca_h() const {
  std::call_once(lazy_->once_h, [&] { lazy_->h = NcaIndex(sys_.h); });
  return lazy_->h;
}

const NcaIndex& ConnectivityIndex::nca_hr() const {
  std::call_once(lazy_->once_hr, [&] { lazy_->hr = NcaIndex(sys_.hr); });
  return lazy_->hr;
}

std::vector<int> strong_bridges(const ConnectivityIndex& ix) {
  std::vector<int> out;
  for (int e = 0; e < ix.m(); ++e)
    if (ix.is_strong_bridge(e)) out.push_back(e);
  return out;
}

void label_loop_components(const RootedTree& D, const RootedTree& H, int top, bool strict, std::vector<int>& label) {
  auto inside = [&](int w) { return strict ? D.is_proper_ancestor(top, w) : D.is_ancestor(top, w); };
  for (int w : H.order()) {
    if (label[w] >= 0 || !inside(w)) continue;
    int p = H.parent(w);
    label[w] = (p >= 0 && inside(p)) ? label[p] : w;
  }
}

SccPartition report_sccs_after_edge(const ConnectivityIndex& ix, int e) {
  const int n = ix.n();
  BridgeKind k = ix.kind(e);
  std::vector<int> label(n, -1);
  int u = ix.graph().tail(e), v = ix.graph().head(e);
  if (k == BridgeKind::Forward || k == BridgeKind::Common) label_loop_components(ix.d(), ix.h(), v, false, label);
  if (k == BridgeKind::Reverse || k == BridgeKind::Common) label_loop_components(ix.dr(), ix.hr(), u, false, label);
  for (int w = 0; w < n; ++w)
    if (label[w] < 0) label[w] = ix.start();
  return partition_from_labels(label, std::nullopt);
}

namespace {

std::map<int, int> collect(const ConnectivityIndex& ix, const std::vector<int>& per_node, bool reverse,
                           bool common_only) {
  const auto& sys = ix.trees();
  std::map<int, int> out;
  for (int x = 0; x < ix.n(); ++x) {
    int e = reverse ? sys.rev_edge[x] : sys.fwd_edge[x];
    if (e < 0) continue;
    if (common_only && !sys.common_at_head(x)) continue;
    out[e] = per_node[x];
  }
  return out;
}

auto unit = [](int) { return 1; };

}  // namespace

DescendantCounts sccs_descendants(const ConnectivityIndex& ix) {
  const auto& sys = ix.trees();
  const auto& dec = ix.decomposition();
  DescendantCounts c;
  c.forward = collect(ix, descendant_aggregate<int>(sys, dec, false, unit, std::plus<int>(), std::minus<int>(), 0),
                      false, false);
  c.reverse = collect(ix, descendant_aggregate<int>(sys, dec, true, unit, std::plus<int>(), std::minus<int>(), 0),
                      true, false);
  return c;
}

std::map<int, int> sccs_common_descendants(const ConnectivityIndex& ix) {
  return collect(ix,
                 common_aggregate<int>(ix.trees(), ix.decomposition(), unit, std::plus<int>(), std::minus<int>(), 0),
                 false, true);
}

std::map<int, int> common_descendant_counts(const ConnectivityIndex& ix) {
  return collect(ix,
                 common_aggregate<int>(
                     ix.trees(), ix.decomposition(), [](int w) { return w; }, std::plus<int>(), std::minus<int>(), 0),
                 false, true);
}

std::vector<int> count_sccs_all_edges(const ConnectivityIndex& ix) {
  return aggregate_all_edges<int>(ix, unit, std::plus<int>(), std::minus<int>(), 0);
}

std::vector<int> lscc_all_edges(const ConnectivityIndex& ix, Extreme mode) {
  const auto& sys = ix.trees();
  auto vals = bridge_extremes(sys, ix.decomposition(), mode == Extreme::Largest);
  std::vector<int> out(ix.m(), ix.n());
  for (int v = 0; v < ix.n(); ++v)
    if (sys.fwd_edge[v] >= 0) out[sys.fwd_edge[v]] = vals.fwd[v];
  for (int u = 0; u < ix.n(); ++u)
    if (sys.rev_edge[u] >= 0 && !sys.common_at_tail(u)) out[sys.rev_edge[u]] = vals.rev[u];
  return out;
}

}  // namespace sconn
