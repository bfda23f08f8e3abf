#include "sconn/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sconn::oracle {

SccPartition sccs_after_edge(const Digraph& g, int e) {
  return strongly_connected_components(g.without_edge(e));
}

SccPartition sccs_after_vertex(const Digraph& g, int u) {
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (v != u) keep.push_back(v);
  auto [sub, map] = g.induced(keep);
  auto p = strongly_connected_components(sub);
  std::vector<int> label(g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if (map[v] >= 0) label[v] = p.component_of[map[v]];
  return partition_from_labels(label, u);
}

std::vector<char> reachable(const Digraph& g, int s, int skip_edge, int skip_vertex) {
  std::vector<char> seen(g.n(), 0);
  if (s == skip_vertex) return seen;
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e = 0; e < g.m(); ++e) {
      if (e == skip_edge || g.tail(e) != v) continue;
      int w = g.head(e);
      if (w == skip_vertex || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

bool strongly_connected_pair(const Digraph& g, int x, int y, int skip_edge, int skip_vertex) {
  if (x == skip_vertex || y == skip_vertex) return false;
  return reachable(g, x, skip_edge, skip_vertex)[y] && reachable(g, y, skip_edge, skip_vertex)[x];
}

std::vector<int> strong_bridges(const Digraph& g) {
  std::size_t base = strongly_connected_components(g).count();
  std::vector<int> out;
  for (int e = 0; e < g.m(); ++e)
    if (sccs_after_edge(g, e).count() > base) out.push_back(e);
  return out;
}

std::vector<int> strong_articulation_points(const Digraph& g) {
  std::size_t base = strongly_connected_components(g).count();
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (sccs_after_vertex(g, v).count() > base) out.push_back(v);
  return out;
}

std::vector<int> separating_edges(const Digraph& g, int x, int y) {
  std::vector<int> out;
  for (int e = 0; e < g.m(); ++e)
    if (!strongly_connected_pair(g, x, y, e, -1)) out.push_back(e);
  return out;
}

std::vector<int> separating_vertices(const Digraph& g, int x, int y) {
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (v != x && v != y && !strongly_connected_pair(g, x, y, -1, v)) out.push_back(v);
  return out;
}

std::vector<std::vector<char>> block_relation(const Digraph& g, BlockKind kind) {
  const int n = g.n();
  std::vector<SccPartition> by_edge, by_vertex;
  for (int e = 0; e < g.m(); ++e) by_edge.push_back(sccs_after_edge(g, e));
  for (int v = 0; v < n; ++v) by_vertex.push_back(sccs_after_vertex(g, v));
  auto whole = strongly_connected_components(g);
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool ok = whole.component_of[x] == whole.component_of[y];
      if (ok && kind != BlockKind::VertexResilient)
        for (auto& p : by_edge)
          if (p.component_of[x] != p.component_of[y]) {
            ok = false;
            break;
          }
      if (ok && kind != BlockKind::TwoEdge)
        for (int v = 0; v < n; ++v)
          if (v != x && v != y && by_vertex[v].component_of[x] != by_vertex[v].component_of[y]) {
            ok = false;
            break;
          }
      rel[x][y] = rel[y][x] = ok;
    }
  return rel;
}

namespace {

using Mask = std::uint32_t;

void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = __builtin_ctz(p | x);
  Mask cand = p & ~adj[pivot];
  while (cand) {
    int v = __builtin_ctz(cand);
    cand &= cand - 1;
    bron_kerbosch(adj, r | (Mask{1} << v), p & adj[v], x & adj[v], out);
    p &= ~(Mask{1} << v);
    x |= Mask{1} << v;
  }
}

}  // namespace

std::vector<std::vector<int>> blocks(const Digraph& g, BlockKind kind) {
  const int n = g.n();
  if (n > 30) throw std::invalid_argument("oracle blocks limited to small graphs");
  auto rel = block_relation(g, kind);
  std::vector<Mask> adj(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel[x][y]) adj[x] |= Mask{1} << y;
  std::vector<Mask> cliques;
  if (n > 0) bron_kerbosch(adj, 0, (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1), 0, cliques);
  std::vector<std::vector<int>> out;
  for (Mask c : cliques) {
    if (__builtin_popcount(c) < 2) continue;
    std::vector<int> b;
    for (int v = 0; v < n; ++v)
      if (c >> v & 1) b.push_back(v);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> immediate_dominators(const Digraph& g, int s) {
  const int n = g.n();
  // dom[v] = set of dominators of v (including v).
  std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    auto r = reachable(g, s, -1, u);
    for (int v = 0; v < n; ++v)
      if (v == u || (u == s) || !r[v]) dom[v][u] = 1;
  }
  std::vector<int> idom(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == s) continue;
    // The immediate dominator is the proper dominator with the most dominators.
    int best = -1, best_count = -1;
    for (int u = 0; u < n; ++u) {
      if (u == v || !dom[v][u]) continue;
      int c = static_cast<int>(std::count(dom[u].begin(), dom[u].end(), 1));
      if (c > best_count) {
        best = u;
        best_count = c;
      }
    }
    idom[v] = best;
  }
  return idom;
}

std::vector<int> flow_graph_bridges(const Digraph& g, int s) {
  std::vector<int> out;
  for (int e = 0; e < g.m(); ++e) {
    auto r = reachable(g, s, e, -1);
    if (!r[g.head(e)]) out.push_back(e);
  }
  return out;
}

std::vector<int> loop_nesting_parents(const Digraph& g, const std::vector<int>& parent) {
  const int n = g.n();
  // desc[u][v]: v is a descendant of u in the dfs tree.
  std::vector<std::vector<char>> desc(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int a = v; a >= 0; a = parent[a]) desc[a][v] = 1;
  auto in_loop = [&](int u, int v) {
    // v reaches u using only descendants of u.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == u) return true;
      for (int e = 0; e < g.m(); ++e) {
        if (g.tail(e) != x) continue;
        int w = g.head(e);
        if (!desc[u][w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  };
  std::vector<int> h(n, -1);
  for (int v = 0; v < n; ++v)
    for (int a = parent[v]; a >= 0; a = parent[a])
      if (in_loop(a, v)) {
        h[v] = a;
        break;
      }
  return h;
}

Digraph random_strongly_connected_digraph(const RandomSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("random graph needs n >= 2");
  if (spec.m < spec.n) throw std::invalid_argument("random graph needs m >= n");
  std::mt19937_64 rng(spec.seed);
  std::vector<int> perm(spec.n);
  for (int i = 0; i < spec.n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(spec.m);
  for (int i = 0; i < spec.n; ++i) edges.emplace_back(perm[i], perm[(i + 1) % spec.n]);
  std::uniform_int_distribution<int> pick(0, spec.n - 1), other(0, spec.n - 2);
  for (int i = spec.n; i < spec.m; ++i) {
    int t = pick(rng);
    int h = other(rng);
    if (h >= t) ++h;
    edges.emplace_back(t, h);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Digraph(spec.n, std::move(edges));
}

}  // namespace sconn::oracle
