#include "sconn/flow_forest.hpp"

#include <algorithm>

namespace sconn {

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
  const int n = size();
  std::vector<int> keys, items;
  keys.reserve(n);
  items.reserve(n);
  for (int v = 0; v < n; ++v)
    if (parent_[v] >= 0) {
      keys.push_back(parent_[v]);
      items.push_back(v);
    }
  child_ = build_csr(n, keys, items);
  pre_.assign(n, -1);
  size_.assign(n, 1);
  depth_.assign(n, 0);
  order_.clear();
  order_.reserve(n);
  std::vector<int> stack;
  for (int r = 0; r < n; ++r) {
    if (parent_[r] >= 0) continue;
    stack.push_back(r);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      pre_[v] = static_cast<int>(order_.size());
      order_.push_back(v);
      if (parent_[v] >= 0) depth_[v] = depth_[parent_[v]] + 1;
      for (int i = child_.end(v) - 1; i >= child_.begin(v); --i) stack.push_back(child_.list[i]);
    }
  }
  if (static_cast<int>(order_.size()) != n) throw std::invalid_argument("parent array contains a cycle");
  for (int i = n - 1; i > 0; --i) {
    int v = order_[i];
    if (parent_[v] >= 0) size_[parent_[v]] += size_[v];
  }
}

std::size_t RootedTree::footprint() const {
  return parent_.size() + child_.start.size() + child_.list.size() + pre_.size() + size_.size() +
         depth_.size() + order_.size();
}

NcaIndex::NcaIndex(const RootedTree& t) : tree_(&t) {
  const int n = t.size();
  log2_.assign(n + 1, 0);
  for (int i = 2; i <= n; ++i) log2_[i] = static_cast<std::uint8_t>(log2_[i / 2] + 1);
  table_.emplace_back(t.order());
  for (int k = 1; (1 << k) <= n; ++k) {
    const auto& prev = table_[k - 1];
    std::vector<int> cur(n - (1 << k) + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      int a = prev[i], b = prev[i + (1 << (k - 1))];
      cur[i] = t.depth(a) <= t.depth(b) ? a : b;
    }
    table_.push_back(std::move(cur));
  }
}

int NcaIndex::nca(int u, int v) const {
  if (u == v) return u;
  int a = tree_->pre(u), b = tree_->pre(v);
  if (a > b) std::swap(a, b);
  // Shallowest vertex of order[a+1 .. b] is a child of the nca (or a root if none).
  int lo = a + 1, len = b - a;
  int k = log2_[len];
  int x = table_[k][lo], y = table_[k][b - (1 << k) + 1];
  int m = tree_->depth(x) <= tree_->depth(y) ? x : y;
  return tree_->parent(m);
}

namespace {

// One orientation of a digraph: out/in edge lists with their far endpoints.
struct Orientation {
  int n;
  const Csr& out;
  const std::vector<int>& heads;
  const Csr& in;
  const std::vector<int>& tails;
};

Orientation orient(const Digraph& g, bool reverse) {
  if (reverse) return {g.n(), g.in(), g.in_tails(), g.out(), g.out_heads()};
  return {g.n(), g.out(), g.out_heads(), g.in(), g.in_tails()};
}

// Dfs from s in edge-list order: preorder and parent vertex. Throws UnreachableError.
void dfs_preorder(const Orientation& a, int s, std::vector<int>& pre, std::vector<int>& order,
                  std::vector<int>& parent) {
  const int n = a.n;
  pre.assign(n, -1);
  parent.assign(n, -1);
  order.clear();
  order.reserve(n);
  std::vector<int> cursor(n), stack{s};
  pre[s] = 0;
  order.push_back(s);
  cursor[s] = a.out.begin(s);
  while (!stack.empty()) {
    int v = stack.back();
    if (cursor[v] == a.out.end(v)) {
      stack.pop_back();
      continue;
    }
    int w = a.heads[cursor[v]++];
    if (pre[w] >= 0) continue;
    pre[w] = static_cast<int>(order.size());
    order.push_back(w);
    parent[w] = v;
    cursor[w] = a.out.begin(w);
    for (int k = a.out.begin(w); k < a.out.end(w); ++k) __builtin_prefetch(&pre[a.heads[k]]);
    stack.push_back(w);
  }
  if (static_cast<int>(order.size()) != n)
    for (int v = 0; v < n; ++v)
      if (pre[v] < 0) throw UnreachableError(v);
}

// The orientation relabeled by dfs preorder numbers, so that per-vertex arrays
// are scanned sequentially.
struct PreorderGraph {
  int n = 0;
  std::vector<int> parent, size;  // by number; parent -1 at the root
  Csr out, in;                    // neighbor numbers
  std::vector<int> out_tail;      // number of the tail of out.list[k]
  std::vector<int> in_edge;       // edge id of in.list[k]

  bool is_ancestor(int u, int v) const { return u <= v && v < u + size[u]; }
};

PreorderGraph relabel(const Orientation& a, const std::vector<int>& pre, const std::vector<int>& order,
                      const std::vector<int>& parent) {
  const int n = a.n;
  PreorderGraph p;
  p.n = n;
  p.parent.resize(n);
  p.size.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    int q = parent[order[i]];
    p.parent[i] = q < 0 ? -1 : pre[q];
  }
  for (int i = n - 1; i > 0; --i) p.size[p.parent[i]] += p.size[i];
  const int m = static_cast<int>(a.heads.size());
  p.out.start.resize(n + 1);
  p.in.start.resize(n + 1);
  p.out.list.resize(m);
  p.in.list.resize(m);
  p.out_tail.resize(m);
  p.in_edge.resize(m);
  int ko = 0, ki = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    p.out.start[i] = ko;
    for (int k = a.out.begin(v); k < a.out.end(v); ++k, ++ko) {
      p.out.list[ko] = pre[a.heads[k]];
      p.out_tail[ko] = i;
    }
    p.in.start[i] = ki;
    for (int k = a.in.begin(v); k < a.in.end(v); ++k, ++ki) {
      p.in.list[ki] = pre[a.tails[k]];
      p.in_edge[ki] = a.in.list[k];
    }
  }
  p.out.start[n] = ko;
  p.in.start[n] = ki;
  return p;
}

PreorderGraph relabel(const Digraph& g, const DfsTree& t) {
  return relabel(orient(g, false), t.pre, t.order, t.parent);
}

// Lengauer-Tarjan with simple path compression, in dfs-number space. par[i] is the
// number of the dfs parent of node i; for_pred(i, f) calls f(number) for every
// reachable predecessor of node i. Returns idom by number (0 for the root).
template <class ForPred>
std::vector<int> lengauer_tarjan(const std::vector<int>& par, ForPred for_pred, bool prefetch = false) {
  const int cnt = static_cast<int>(par.size());
  // One line per node: best caches semi[label] so eval touches only x and anc(x).
  struct alignas(16) Node {
    int anc, label, best, semi;
  };
  std::vector<Node> nd(cnt);
  std::vector<int> idom(cnt, 0), bucket_head(cnt, -1), bucket_next(cnt, -1);
  for (int i = 0; i < cnt; ++i) nd[i] = {-1, i, i, i};
  std::vector<int> path;
  auto eval = [&](int v) -> const Node& {
    if (nd[v].anc < 0) return nd[v];
    path.clear();
    for (int x = v; nd[nd[x].anc].anc >= 0; x = nd[x].anc) path.push_back(x);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      Node& x = nd[*it];
      const Node& a = nd[x.anc];
      if (a.best < x.best) {
        x.label = a.label;
        x.best = a.best;
      }
      x.anc = a.anc;
    }
    return nd[v];
  };
  for (int i = cnt - 1; i > 0; --i) {
    if (prefetch && i > 1) for_pred(i - 1, [&](int v) { __builtin_prefetch(&nd[v]); });
    int semi = i;
    for_pred(i, [&](int v) { semi = std::min(semi, eval(v).best); });
    nd[i].semi = nd[i].best = semi;
    bucket_next[i] = bucket_head[semi];
    bucket_head[semi] = i;
    int p = par[i];
    nd[i].anc = p;
    for (int v = bucket_head[p]; v >= 0; v = bucket_next[v]) {
      const Node& u = eval(v);
      idom[v] = u.best < nd[v].semi ? u.label : p;
    }
    bucket_head[p] = -1;
  }
  for (int i = 1; i < cnt; ++i)
    if (idom[i] != nd[i].semi) idom[i] = idom[idom[i]];
  return idom;
}

std::vector<int> dominators(const PreorderGraph& p) {
  auto idom = lengauer_tarjan(
      p.parent,
      [&](int i, auto&& f) {
        for (int k = p.in.begin(i); k < p.in.end(i); ++k) f(p.in.list[k]);
      },
      true);
  if (p.n > 0) idom[0] = -1;
  return idom;
}

// Per number v: edge id of the bridge (d(v), v), else -1. (d(v), v) is a bridge
// iff it is the only edge into v from outside D(v).
std::vector<int> bridges(const PreorderGraph& p, const RootedTree& dom) {
  std::vector<int> into(p.n, -1);
  for (int v = 1; v < p.n; ++v) {
    int only = -1, outside = 0;
    for (int k = p.in.begin(v); k < p.in.end(v) && outside < 2; ++k)
      if (!dom.is_ancestor(v, p.in.list[k])) {
        ++outside;
        only = p.in_edge[k];
      }
    if (outside == 1) into[v] = only;
  }
  return into;
}

// Loop nesting parents by number (-1 at the root).
std::vector<int> loop_parents(const PreorderGraph& p) {
  const int n = p.n, m = static_cast<int>(p.out.list.size());
  std::vector<int> h(n, -1);
  if (n == 0) return h;

  // Every non-back edge (y,z) is parked at nca_T(y,z) and activated when that
  // vertex is processed as a header; before that it cannot join any loop.
  std::vector<int> act(m, -1);
  {
    std::vector<int> uf2(n);
    for (int v = 0; v < n; ++v) uf2[v] = v;
    auto find2 = [&](int x) {
      int r = x;
      while (uf2[r] != r) r = uf2[r];
      while (uf2[x] != r) {
        int nx = uf2[x];
        uf2[x] = r;
        x = nx;
      }
      return r;
    };
    std::vector<int> stack;
    for (int y = 0; y < n; ++y) {
      while (!stack.empty() && !p.is_ancestor(stack.back(), y)) {
        uf2[stack.back()] = p.parent[stack.back()];
        stack.pop_back();
      }
      stack.push_back(y);
      if (y + 1 < n)
        for (int k = p.out.begin(y + 1); k < p.out.end(y + 1); ++k) {
          __builtin_prefetch(&p.size[p.out.list[k]]);
          __builtin_prefetch(&uf2[p.out.list[k]]);
        }
      for (int k = p.out.begin(y); k < p.out.end(y); ++k) {
        int z = p.out.list[k];
        if (z > y)
          act[k] = y;
        else if (!p.is_ancestor(z, y))
          act[k] = find2(z);
      }
    }
  }
  // Parked edges as (head, tail) pairs bucketed by activation vertex.
  std::vector<int> start(n + 1, 0);
  for (int k = 0; k < m; ++k)
    if (act[k] >= 0) ++start[act[k] + 1];
  for (int v = 0; v < n; ++v) start[v + 1] += start[v];
  struct Parked {
    int head, tail;
  };
  std::vector<Parked> parked(start[n]);
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (int k = 0; k < m; ++k)
      if (act[k] >= 0) parked[fill[act[k]]++] = {p.out.list[k], p.out_tail[k]};
  }
  act = {};

  // Active edges entering each loop representative: singly linked through `next`.
  std::vector<int> uf(n), mark(n, -1), list(n, -1), work;
  std::vector<Parked> node(parked.size());  // {next, tail}
  for (int v = 0; v < n; ++v) uf[v] = v;
  auto find = [&](int x) {
    int r = x;
    while (uf[r] != r) r = uf[r];
    while (uf[x] != r) {
      int nx = uf[x];
      uf[x] = r;
      x = nx;
    }
    return r;
  };
  auto visit = [&](int y, int u) {
    int y2 = find(y);
    if (y2 != u && mark[y2] != u) {
      mark[y2] = u;
      work.push_back(y2);
    }
  };
  for (int u = n - 1; u >= 0; --u) {
    if (u > 0)
      for (int j = start[u - 1]; j < start[u]; ++j) __builtin_prefetch(&uf[parked[j].head]);
    for (int j = start[u]; j < start[u + 1]; ++j) {
      int x = find(parked[j].head);
      node[j] = {list[x], parked[j].tail};
      list[x] = j;
    }
    // Back edges into u come from its dfs descendants.
    for (int k = p.in.begin(u); k < p.in.end(u); ++k)
      if (int y = p.in.list[k]; p.is_ancestor(u, y)) visit(y, u);
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      h[x] = u;
      uf[x] = u;
      for (int j = list[x]; j >= 0; j = node[j].head) visit(node[j].tail, u);
      list[x] = -1;
    }
  }
  return h;
}

// Maps a parent array over numbers back to vertices.
std::vector<int> to_vertices(const std::vector<int>& by_number, const std::vector<int>& order) {
  std::vector<int> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = by_number[i] < 0 ? -1 : order[by_number[i]];
  return out;
}

}  // namespace

DfsTree dfs_tree(const Digraph& g, int s) {
  const int n = g.n();
  if (s < 0 || s >= n) throw std::out_of_range("start vertex out of range");
  DfsTree t;
  t.root = s;
  dfs_preorder(orient(g, false), s, t.pre, t.order, t.parent);
  t.parent_edge.assign(n, -1);
  t.size.assign(n, 1);
  for (int i = n - 1; i > 0; --i) t.size[t.parent[t.order[i]]] += t.size[t.order[i]];
  // The first edge from the parent in edge-list order is the tree edge.
  for (int v = 0; v < n; ++v)
    for (int k = g.out().begin(v); k < g.out().end(v); ++k) {
      int w = g.out_heads()[k];
      if (t.parent[w] == v && t.parent_edge[w] < 0) t.parent_edge[w] = g.out().list[k];
    }
  t.edge_class.resize(g.m());
  for (int e = 0; e < g.m(); ++e) {
    int a = g.tail(e), b = g.head(e);
    if (t.parent_edge[b] == e)
      t.edge_class[e] = EdgeClass::Tree;
    else if (t.is_ancestor(b, a))
      t.edge_class[e] = EdgeClass::Back;
    else if (t.is_ancestor(a, b))
      t.edge_class[e] = EdgeClass::Forward;
    else
      t.edge_class[e] = EdgeClass::Cross;
  }
  return t;
}

std::vector<int> immediate_dominators(int num_nodes, int s, const Csr& succ, const Csr& pred) {
  const int n = num_nodes;
  std::vector<int> num(n, -1), order, par;
  order.reserve(n);
  par.reserve(n);
  {
    std::vector<int> cursor(n), stack{s};
    num[s] = 0;
    order.push_back(s);
    par.push_back(-1);
    cursor[s] = succ.begin(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (cursor[v] == succ.end(v)) {
        stack.pop_back();
        continue;
      }
      int w = succ.list[cursor[v]++];
      if (num[w] >= 0) continue;
      num[w] = static_cast<int>(order.size());
      order.push_back(w);
      par.push_back(num[v]);
      cursor[w] = succ.begin(w);
      stack.push_back(w);
    }
  }
  auto idom = lengauer_tarjan(par, [&](int i, auto&& f) {
    int w = order[i];
    for (int k = pred.begin(w); k < pred.end(w); ++k)
      if (int v = num[pred.list[k]]; v >= 0) f(v);
  });
  std::vector<int> result(n, -2);
  result[s] = -1;
  for (std::size_t i = 1; i < order.size(); ++i) result[order[i]] = order[idom[i]];
  return result;
}

std::vector<int> immediate_dominators(const Digraph& g, const DfsTree& t) {
  return to_vertices(dominators(relabel(g, t)), t.order);
}

namespace {

// Dominators of the graph with every edge e subdivided by node n+e.
std::vector<int> split_dominators(const Digraph& g, int s) {
  const int n = g.n(), m = g.m();
  Csr succ, pred;
  succ.start.resize(n + m + 1);
  pred.start.resize(n + m + 1);
  for (int v = 0; v <= n; ++v) {
    succ.start[v] = g.out().start[v];
    pred.start[v] = g.in().start[v];
  }
  for (int e = 1; e <= m; ++e) {
    succ.start[n + e] = m + e;
    pred.start[n + e] = m + e;
  }
  succ.list.resize(2 * m);
  pred.list.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    succ.list[i] = n + g.out().list[i];
    pred.list[i] = n + g.in().list[i];
  }
  for (int e = 0; e < m; ++e) {
    succ.list[m + e] = g.head(e);
    pred.list[m + e] = g.tail(e);
  }
  return immediate_dominators(n + m, s, succ, pred);
}

}  // namespace

DominatorTree dominator_tree(const Digraph& g, int s) {
  DominatorTree d;
  d.root = s;
  d.tree = RootedTree(immediate_dominators(g, dfs_tree(g, s)));
  for (int v = 0; v < g.n(); ++v)
    if (v != s && d.tree.num_children(v) > 0) d.nontrivial.push_back(v);
  return d;
}

LoopNestingTree loop_nesting_tree(const Digraph& g, const DfsTree& t) {
  return RootedTree(to_vertices(loop_parents(relabel(g, t)), t.order));
}

FlowForestBundle build_flow_bundle(const Digraph& g, int s, bool reverse) {
  const int n = g.n();
  if (s < 0 || s >= n) throw std::out_of_range("start vertex out of range");
  const Orientation a = orient(g, reverse);
  std::vector<int> pre, order, parent;
  dfs_preorder(a, s, pre, order, parent);
  PreorderGraph p = relabel(a, pre, order, parent);
  parent = {};
  FlowForestBundle b;
  b.root = s;
  std::vector<int> idom = dominators(p);
  {
    RootedTree dom_by_number(idom);
    auto into = bridges(p, dom_by_number);
    b.bridge_into.assign(n, -1);
    for (int i = 0; i < n; ++i) b.bridge_into[order[i]] = into[i];
  }
  b.dom = RootedTree(to_vertices(idom, order));
  b.loop = RootedTree(to_vertices(loop_parents(p), order));
  return b;
}

std::vector<int> flow_graph_bridges(const Digraph& g, int s, const DominatorTree& d) {
  auto aux = split_dominators(g, s);
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    if (v == s || aux[v] < g.n()) continue;
    int e = aux[v] - g.n();
    if (d.idom(v) != g.tail(e)) throw std::invalid_argument("dominator tree does not match graph");
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sconn
