#include "sconn/decomposition.hpp"

#include <functional>

namespace sconn {

namespace {

std::vector<int> weighted_sizes(const RootedTree& t, const std::vector<int>& weight) {
  std::vector<int> s(weight);
  const auto& order = t.order();
  for (int i = t.size() - 1; i >= 0; --i) {
    int v = order[i];
    if (t.parent(v) >= 0) s[t.parent(v)] += s[v];
  }
  return s;
}

}  // namespace

void TreeSystem::finalize() {
  dsize = weighted_sizes(d, weight);
  drsize = weighted_sizes(dr, weight);
  hsize = weighted_sizes(h, weight);
  hrsize = weighted_sizes(hr, weight);
  total_weight = 0;
  for (int w : weight) total_weight += w;
}

std::size_t TreeSystem::footprint() const {
  return d.footprint() + dr.footprint() + h.footprint() + hr.footprint() + weight.size() + fwd_edge.size() +
         rev_edge.size() + reroute.size() + dsize.size() + drsize.size() + hsize.size() + hrsize.size();
}

std::size_t Decomposition::footprint() const {
  return r.size() + rr.size() + rc.size() + common_heads.size() + q_parent.size() + cdepth.size();
}

std::vector<int> bridge_decomposition(const RootedTree& d, const std::vector<int>& bridge_into) {
  std::vector<int> r(d.size());
  for (int v : d.order()) {
    int p = d.parent(v);
    r[v] = (p < 0 || bridge_into[v] >= 0) ? v : r[p];
  }
  return r;
}

CompressedTree compressed_tree(const RootedTree& d, const std::vector<int>& r) {
  CompressedTree c;
  c.parent.assign(d.size(), -1);
  for (int v : d.order()) {
    if (r[v] != v) continue;
    c.nodes.push_back(v);
    if (d.parent(v) >= 0) c.parent[v] = r[d.parent(v)];
  }
  return c;
}

Decomposition decompose(const TreeSystem& sys) {
  const int N = sys.num_nodes;
  Decomposition dec;
  dec.r = bridge_decomposition(sys.d, sys.fwd_edge);
  dec.rr = bridge_decomposition(sys.dr, sys.rev_edge);
  dec.rc.assign(N, 0);
  dec.cdepth.assign(N, 0);
  dec.q_parent.assign(N, -2);
  for (int v : sys.d.order()) {
    int p = sys.d.parent(v);
    bool common = p >= 0 && sys.common_at_head(v);
    dec.rc[v] = (p < 0 || common) ? v : dec.rc[p];
    dec.cdepth[v] = (p < 0 ? 0 : dec.cdepth[p]) + (common ? 1 : 0);
    if (!common) continue;
    dec.common_heads.push_back(v);
    // Parent in Q: the common bridge entering the common-decomposition tree of the
    // tail, provided it lies below this bridge in D^R.
    int w = p, y = dec.rc[w];
    dec.q_parent[v] = (y != sys.root && sys.dr.is_ancestor(w, y)) ? y : -1;
  }
  return dec;
}

CommonBridgeForest common_bridge_forest(const TreeSystem&, const Decomposition& dec) {
  CommonBridgeForest q;
  q.heads = dec.common_heads;
  for (int b : q.heads) q.parent.push_back(dec.q_parent[b]);
  return q;
}

std::vector<int> descendant_extreme(const TreeSystem& sys, const Decomposition& dec, bool reverse, bool largest) {
  const int N = sys.num_nodes;
  const RootedTree& D = reverse ? sys.dr : sys.d;
  const RootedTree& H = reverse ? sys.hr : sys.h;
  const std::vector<int>& r = reverse ? dec.rr : dec.r;
  const std::vector<int>& hsz = reverse ? sys.hrsize : sys.hsize;
  // Contributions bucketed by weight, visited best-first; each compressed node
  // keeps the first value that reaches it.
  std::vector<int> bucket_start(sys.total_weight + 2, 0), items;
  int count = 0;
  for (int x = 0; x < N; ++x)
    if (x != sys.root && hsz[x] > 0) {
      ++bucket_start[hsz[x] + 1];
      ++count;
    }
  for (std::size_t i = 1; i < bucket_start.size(); ++i) bucket_start[i] += bucket_start[i - 1];
  items.resize(count);
  {
    std::vector<int> pos(bucket_start.begin(), bucket_start.end() - 1);
    for (int x = 0; x < N; ++x)
      if (x != sys.root && hsz[x] > 0) items[pos[hsz[x]]++] = x;
  }
  if (largest) std::reverse(items.begin(), items.end());
  std::vector<int> best(N, 0), up(N);
  for (int v = 0; v < N; ++v) up[v] = v;
  auto find = [&](int x) {
    int root = x;
    while (up[root] != root) root = up[root];
    while (up[x] != root) {
      int nx = up[x];
      up[x] = root;
      x = nx;
    }
    return root;
  };
  for (int x : items) {
    int stop = r[H.parent(x)];
    int z = find(r[reverse ? x : sys.reroute[x]]);
    while (z != stop && D.is_proper_ancestor(stop, z)) {
      best[z] = hsz[x];
      int p = r[D.parent(z)];
      up[z] = p;
      z = find(p);
    }
  }
  return best;
}

BridgeValues<int> bridge_extremes(const TreeSystem& sys, const Decomposition& dec, bool largest) {
  auto bd = descendant_extreme(sys, dec, false, largest);
  auto br = descendant_extreme(sys, dec, true, largest);
  auto csize = common_aggregate<long long>(
      sys, dec, [](int w) { return static_cast<long long>(w); }, std::plus<long long>(), std::minus<long long>(), 0LL);
  auto pick = [&](int acc, int v) {
    if (v <= 0) return acc;
    if (acc <= 0) return v;
    return largest ? std::max(acc, v) : std::min(acc, v);
  };
  BridgeValues<int> out{std::vector<int>(sys.num_nodes, 0), std::vector<int>(sys.num_nodes, 0)};
  for (int b = 0; b < sys.num_nodes; ++b) {
    if (sys.fwd_edge[b] < 0) continue;
    if (sys.common_at_head(b)) {
      int a = sys.d.parent(b);
      long long uni = static_cast<long long>(sys.dsize[b]) + sys.drsize[a] - csize[b];
      out.fwd[b] = pick(pick(bd[b], br[a]), static_cast<int>(sys.total_weight - uni));
    } else {
      out.fwd[b] = pick(bd[b], sys.total_weight - sys.dsize[b]);
    }
  }
  for (int a = 0; a < sys.num_nodes; ++a) {
    if (sys.rev_edge[a] < 0 || sys.common_at_tail(a)) continue;
    out.rev[a] = pick(br[a], sys.total_weight - sys.drsize[a]);
  }
  return out;
}

}  // namespace sconn
