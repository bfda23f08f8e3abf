#include "sconn/blocks.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace sconn {

namespace {

void normalize(Blocks& b) {
  for (auto& x : b) std::sort(x.begin(), x.end());
  std::sort(b.begin(), b.end());
}

std::vector<int> nearest_boundary(const RootedTree& H, const std::vector<int>& r) {
  std::vector<int> hb(H.size(), -1);
  for (int w : H.order()) {
    int p = H.parent(w);
    hb[w] = (p >= 0 && r[p] == r[w]) ? hb[p] : w;
  }
  return hb;
}

}  // namespace

std::vector<EdgeBlockLabel> edge_block_labels(const ConnectivityIndex& ix) {
  const auto& dec = ix.decomposition();
  auto hb = nearest_boundary(ix.h(), dec.r);
  auto hbr = nearest_boundary(ix.hr(), dec.rr);
  std::vector<EdgeBlockLabel> out(ix.n());
  for (int x = 0; x < ix.n(); ++x) out[x] = {dec.r[x], hb[x], dec.rr[x], hbr[x]};
  return out;
}

Blocks two_edge_connected_blocks(const ConnectivityIndex& ix) {
  auto labels = edge_block_labels(ix);
  std::vector<int> order(ix.n());
  for (int v = 0; v < ix.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
  Blocks out;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && labels[order[j]] == labels[order[i]]) ++j;
    if (j - i >= 2) out.emplace_back(order.begin() + i, order.begin() + j);
    i = j;
  }
  normalize(out);
  return out;
}

std::vector<ChildrenIntersection> children_intersection_sets(const ConnectivityIndex& ix) {
  const auto& D = ix.d();
  const auto& DR = ix.dr();
  std::vector<std::tuple<int, int, int>> entries;
  for (int x = 0; x < ix.n(); ++x) {
    int p = D.parent(x), q = DR.parent(x);
    entries.emplace_back(x, x, x);
    if (p >= 0) entries.emplace_back(p, x, x);
    if (q >= 0) entries.emplace_back(x, q, x);
    if (p >= 0 && q >= 0) entries.emplace_back(p, q, x);
  }
  std::sort(entries.begin(), entries.end());
  std::vector<ChildrenIntersection> out;
  for (auto [u, v, x] : entries) {
    if (out.empty() || out.back().u != u || out.back().v != v) out.push_back({u, v, {}});
    out.back().members.push_back(x);
  }
  return out;
}

Blocks refine(const Blocks& blocks, const std::vector<std::vector<int>>& partition, int x) {
  std::unordered_map<int, int> set_of;
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int v : partition[i]) set_of[v] = static_cast<int>(i);
  Blocks out;
  for (const auto& b : blocks) {
    bool has_x = std::find(b.begin(), b.end(), x) != b.end();
    std::vector<std::vector<int>> parts(partition.size());
    for (int v : b) {
      auto it = set_of.find(v);
      if (v != x && it != set_of.end()) parts[it->second].push_back(v);
    }
    for (auto& p : parts) {
      if (p.empty()) continue;
      if (has_x) p.push_back(x);
      if (p.size() >= 2) out.push_back(std::move(p));
    }
  }
  normalize(out);
  return out;
}

BlockForest::BlockForest(int n, Blocks blocks) : n_(n), blocks_(std::move(blocks)) {
  normalize(blocks_);
  const int B = static_cast<int>(blocks_.size());
  blocks_of_.assign(n, {});
  for (int i = 0; i < B; ++i)
    for (int v : blocks_[i]) blocks_of_[v].push_back(i);
  parent_.assign(n + B, -2);
  std::vector<int> queue;
  for (int r = 0; r < n; ++r) {
    if (parent_[r] != -2) continue;
    parent_[r] = -1;
    queue.assign(1, r);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int node = queue[qi];
      if (node < n) {
        for (int b : blocks_of_[node])
          if (parent_[n + b] == -2) {
            parent_[n + b] = node;
            queue.push_back(n + b);
          }
      } else {
        for (int v : blocks_[node - n])
          if (parent_[v] == -2) {
            parent_[v] = node;
            queue.push_back(v);
          }
      }
    }
  }
}

bool BlockForest::same_block(int x, int y) const {
  if (x == y) return true;
  int px = parent_[x], py = parent_[y];
  if (px >= 0 && px == py) return true;
  if (px >= 0 && parent_[px] == y) return true;
  if (py >= 0 && parent_[py] == x) return true;
  return false;
}

namespace {

// Mutable block forest used while running the two passes.
struct WorkingForest {
  std::vector<std::vector<int>> members;
  std::vector<char> alive;
  std::vector<std::vector<int>> of;  // vertex -> block ids (dead ids pruned lazily)

  explicit WorkingForest(int n) : of(n) {}

  int add(std::vector<int> m) {
    int id = static_cast<int>(members.size());
    for (int v : m) of[v].push_back(id);
    members.push_back(std::move(m));
    alive.push_back(1);
    return id;
  }
  void prune(int v) {
    auto& l = of[v];
    l.erase(std::remove_if(l.begin(), l.end(), [&](int b) { return !alive[b]; }), l.end());
  }
};

void resilience_pass(const ConnectivityIndex& ix, bool reverse, WorkingForest& F) {
  const int n = ix.n(), s = ix.start();
  const RootedTree& D = reverse ? ix.dr() : ix.d();
  const RootedTree& H = reverse ? ix.hr() : ix.h();
  const NcaIndex& nca = reverse ? ix.nca_hr() : ix.nca_h();
  std::vector<int> set_of(n, -1), hits, group_of(n, -1), group_stamp(n, -1), stack;
  std::vector<int> hit_count;
  std::vector<std::vector<int>> groups;
  const auto& order = D.order();
  for (int i = n - 1; i >= 0; --i) {
    int u = order[i];
    auto kids = D.children(u);
    if (kids.empty()) continue;
    // Blocks with at least two vertices of c(u) + u.
    hits.clear();
    hit_count.resize(F.members.size(), 0);
    auto count = [&](int x) {
      F.prune(x);
      for (int b : F.of[x])
        if (++hit_count[b] == 2) hits.push_back(b);
    };
    count(u);
    for (int x : kids) count(x);
    auto reset = [&](int x) {
      for (int b : F.of[x]) hit_count[b] = 0;
    };
    reset(u);
    for (int x : kids) reset(x);
    // Partition of c(u) into H(v) and c(u) for children v entering from outside D~(u).
    for (int v : kids) {
      int hv = H.parent(v);
      if (hv >= 0 && D.is_proper_ancestor(u, hv)) continue;
      stack.assign(1, v);
      while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        set_of[y] = v;
        for (int c : H.children(y))
          if (D.parent(c) == u) stack.push_back(c);
      }
    }
    std::vector<int> created;
    for (int b : hits) {
      F.alive[b] = 0;
      bool has_u = false;
      int used = 0;
      for (int y : F.members[b]) {
        if (y == u) {
          has_u = true;
          continue;
        }
        int k = set_of[y];
        if (k < 0) continue;
        if (group_stamp[k] != b) {
          group_stamp[k] = b;
          group_of[k] = used;
          if (static_cast<int>(groups.size()) <= used) groups.emplace_back();
          groups[used].clear();
          ++used;
        }
        groups[group_of[k]].push_back(y);
      }
      for (int g = 0; g < used; ++g) {
        auto part = groups[g];
        if (has_u) part.push_back(u);
        if (part.size() >= 2) created.push_back(F.add(std::move(part)));
      }
    }
    for (int x : kids) set_of[x] = -1;
    if (u == s) continue;
    for (int b : created) {
      const auto& mem = F.members[b];
      if (std::find(mem.begin(), mem.end(), u) == mem.end()) continue;
      int v = -1;
      for (int y : mem)
        if (y != u && (v < 0 || y < v)) v = y;
      int w = nca.nca(u, v);
      if (w != s && D.parent(w) == D.parent(u)) continue;
      F.alive[b] = 0;
      std::vector<int> rest;
      for (int y : mem)
        if (y != u) rest.push_back(y);
      if (rest.size() >= 2) F.add(std::move(rest));
    }
  }
}

}  // namespace

BlockForest vertex_resilient_blocks(const ConnectivityIndex& ix) {
  const int n = ix.n();
  WorkingForest F(n);
  for (auto& c : children_intersection_sets(ix))
    if (c.members.size() >= 2) F.add(std::move(c.members));
  resilience_pass(ix, false, F);
  resilience_pass(ix, true, F);
  Blocks out;
  for (std::size_t b = 0; b < F.members.size(); ++b)
    if (F.alive[b]) out.push_back(F.members[b]);
  return BlockForest(n, std::move(out));
}

Blocks two_vertex_connected_blocks(const ConnectivityIndex&, const BlockForest& vr,
                                   const std::vector<EdgeBlockLabel>& labels) {
  Blocks out;
  for (const auto& b : vr.blocks()) {
    std::vector<int> m = b;
    std::stable_sort(m.begin(), m.end(), [&](int a, int c) { return labels[a] < labels[c]; });
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && labels[m[j]] == labels[m[i]]) ++j;
      if (j - i >= 2) out.emplace_back(m.begin() + i, m.begin() + j);
      i = j;
    }
  }
  normalize(out);
  return out;
}

Blocks two_vertex_connected_blocks(const ConnectivityIndex& ix) {
  return two_vertex_connected_blocks(ix, vertex_resilient_blocks(ix), edge_block_labels(ix));
}

}  // namespace sconn
