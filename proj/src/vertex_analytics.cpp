#include "sconn/vertex_analytics.hpp"

namespace sconn {

namespace {

bool is_split_candidate(const ConnectivityIndex& ix, int v) {
  return v != ix.start() && (ix.d().num_children(v) > 0 || ix.dr().num_children(v) > 0);
}

}  // namespace

SplitIndex vertex_split(const ConnectivityIndex& ix) {
  const int n = ix.n(), m = ix.m(), s = ix.start();
  const TreeSystem& base = ix.trees();
  SplitIndex sp;
  sp.n = n;
  sp.m = m;
  sp.aux_of.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (is_split_candidate(ix, v)) {
      sp.aux_of[v] = n + static_cast<int>(sp.aux_vertex.size());
      sp.aux_vertex.push_back(v);
    }
  const int N = n + sp.num_aux();
  auto entry = [&](int v) { return sp.entry(v); };

  std::vector<int> d(N, -1), dr(N, -1), h(N, -1), hr(N, -1);
  TreeSystem& sys = sp.sys;
  sys.num_nodes = N;
  sys.root = s;
  sys.fwd_edge.assign(N, -1);
  sys.rev_edge.assign(N, -1);
  sys.weight.assign(N, 0);
  sys.reroute.resize(N);
  for (int x = 0; x < N; ++x) sys.reroute[x] = x;

  for (int y = 0; y < n; ++y) {
    sys.weight[y] = 1;
    if (y == s) continue;
    int a = sp.aux_of[y];
    d[y] = a >= 0 ? a : base.d.parent(y);
    dr[y] = entry(base.dr.parent(y));
    h[y] = (a >= 0 && base.h.num_children(y) > 0) ? a : entry(base.h.parent(y));
    hr[y] = base.hr.parent(y);
    if (base.fwd_edge[y] >= 0) sys.fwd_edge[entry(y)] = base.fwd_edge[y];
    sys.rev_edge[y] = base.rev_edge[y];
  }
  for (int k = 0; k < sp.num_aux(); ++k) {
    int x = sp.aux_vertex[k], a = n + k;
    d[a] = base.d.parent(x);
    dr[a] = x;
    h[a] = entry(base.h.parent(x));
    hr[a] = base.hr.num_children(x) > 0 ? x : base.hr.parent(x);
    sys.fwd_edge[x] = m + k;
    sys.rev_edge[a] = m + k;
    sys.reroute[x] = a;
  }
  sys.d = RootedTree(std::move(d));
  sys.dr = RootedTree(std::move(dr));
  sys.h = RootedTree(std::move(h));
  sys.hr = RootedTree(std::move(hr));
  sys.finalize();
  sp.dec = decompose(sys);
  return sp;
}

Digraph materialize_split_graph(const ConnectivityIndex& ix, const SplitIndex& sp) {
  const Digraph& g = ix.graph();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.m() + sp.num_aux());
  for (int e = 0; e < g.m(); ++e) edges.emplace_back(g.tail(e), sp.entry(g.head(e)));
  for (int k = 0; k < sp.num_aux(); ++k) edges.emplace_back(sp.n + k, sp.aux_vertex[k]);
  return Digraph(sp.n + sp.num_aux(), std::move(edges));
}

bool is_strong_articulation_point(const ConnectivityIndex& ix, int v) {
  if (v < 0 || v >= ix.n()) throw std::out_of_range("vertex out of range");
  if (v == ix.start()) return ix.h().num_children(v) >= 2;
  return is_split_candidate(ix, v);
}

std::vector<int> strong_articulation_points(const ConnectivityIndex& ix) {
  std::vector<int> out;
  for (int v = 0; v < ix.n(); ++v)
    if (is_strong_articulation_point(ix, v)) out.push_back(v);
  return out;
}

SccPartition report_sccs_after_vertex(const ConnectivityIndex& ix, int u) {
  const int n = ix.n(), s = ix.start();
  if (u < 0 || u >= n) throw std::out_of_range("vertex out of range");
  std::vector<int> label(n, -1);
  if (u == s) {
    // Each loop nesting subtree below s is a component.
    for (int w : ix.h().order()) {
      if (w == s) continue;
      int p = ix.h().parent(w);
      label[w] = p == s ? w : label[p];
    }
  } else if (is_split_candidate(ix, u)) {
    const auto& D = ix.d();
    const auto& DR = ix.dr();
    // Vertices dominated by u in neither orientation form one component with s;
    // label them first so the loop passes below never read their labels.
    for (int w = 0; w < n; ++w)
      if (!D.is_ancestor(u, w) && !DR.is_ancestor(u, w)) label[w] = s;
    label[u] = u;
    label_loop_components(D, ix.h(), u, true, label);
    label_loop_components(DR, ix.hr(), u, true, label);
    label[u] = -1;
  } else {
    for (int w = 0; w < n; ++w)
      if (w != u) label[w] = s;
  }
  return partition_from_labels(label, u);
}

namespace {

auto unit = [](int) { return 1; };

}  // namespace

std::vector<int> count_sccs_all_vertices(const ConnectivityIndex& ix, const SplitIndex& sp) {
  return aggregate_all_vertices<int>(ix, sp, unit, std::plus<int>(), std::minus<int>(), 0);
}

std::vector<int> count_sccs_all_vertices(const ConnectivityIndex& ix) {
  return count_sccs_all_vertices(ix, vertex_split(ix));
}

std::vector<int> lscc_all_vertices(const ConnectivityIndex& ix, const SplitIndex& sp, Extreme mode) {
  const int n = ix.n(), s = ix.start();
  const bool largest = mode == Extreme::Largest;
  auto vals = bridge_extremes(sp.sys, sp.dec, largest);
  std::vector<int> out(n, n - 1);
  for (int x = 0; x < n; ++x)
    if (sp.aux_of[x] >= 0) out[x] = vals.fwd[x];
  int at_s = 0;
  for (int c : ix.h().children(s)) {
    int w = ix.trees().hsize[c];
    if (at_s == 0 || (largest ? w > at_s : w < at_s)) at_s = w;
  }
  out[s] = at_s;
  return out;
}

std::vector<int> lscc_all_vertices(const ConnectivityIndex& ix, Extreme mode) {
  return lscc_all_vertices(ix, vertex_split(ix), mode);
}

std::map<int, int> common_descendant_counts_vertices(const ConnectivityIndex&, const SplitIndex& sp) {
  auto c = common_aggregate<int>(
      sp.sys, sp.dec, [](int w) { return w; }, std::plus<int>(), std::minus<int>(), 0);
  std::map<int, int> out;
  for (int x : sp.aux_vertex) out[x] = c[x];
  return out;
}

}  // namespace sconn
