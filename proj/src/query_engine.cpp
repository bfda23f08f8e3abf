#include "sconn/query_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace sconn {

QueryEngine::QueryEngine(const ConnectivityIndex& ix)
    : ix_(ix),
      labels_(edge_block_labels(ix)),
      forest_(vertex_resilient_blocks(ix)),
      edge_mark_(ix.m(), 0),
      node_mark_(ix.n(), 0),
      node_mark_r_(ix.n(), 0),
      out_mark_(ix.n(), 0) {
  ix.nca_h();
  ix.nca_hr();
}

void QueryEngine::check_pair(int x, int y) const {
  if (x < 0 || y < 0 || x >= ix_.n() || y >= ix_.n()) throw std::out_of_range("vertex out of range");
  if (x == y) throw std::invalid_argument("query vertices must be distinct");
}

std::optional<int> QueryEngine::edge_witness(int x, int y) const {
  const auto& lx = labels_[x];
  const auto& ly = labels_[y];
  const auto& sys = ix_.trees();
  if (lx.r != ly.r) {
    int z = ix_.d().is_ancestor(lx.r, ly.r) ? ly.r : lx.r;
    return sys.fwd_edge[z];
  }
  if (lx.rr != ly.rr) {
    int z = ix_.dr().is_ancestor(lx.rr, ly.rr) ? ly.rr : lx.rr;
    return sys.rev_edge[z];
  }
  if (lx.h != ly.h) return sys.fwd_edge[lx.r];
  if (lx.hr != ly.hr) return sys.rev_edge[lx.rr];
  return std::nullopt;
}

SeparationAnswer QueryEngine::are_2ec(int x, int y) const {
  check_pair(x, y);
  SeparationAnswer a;
  a.witness_edge = edge_witness(x, y);
  a.connected = !a.witness_edge.has_value();
  return a;
}

bool QueryEngine::edge_separates(int e, int x, int y) const {
  check_pair(x, y);
  BridgeKind k = ix_.kind(e);
  const Digraph& g = ix_.graph();
  if (k == BridgeKind::Forward || k == BridgeKind::Common) {
    int v = g.head(e);
    const auto& D = ix_.d();
    if ((D.is_ancestor(v, x) || D.is_ancestor(v, y)) && !D.is_ancestor(v, ix_.nca_h().nca(x, y))) return true;
  }
  if (k == BridgeKind::Reverse || k == BridgeKind::Common) {
    int u = g.tail(e);
    const auto& DR = ix_.dr();
    if ((DR.is_ancestor(u, x) || DR.is_ancestor(u, y)) && !DR.is_ancestor(u, ix_.nca_hr().nca(x, y))) return true;
  }
  return false;
}

std::vector<int> QueryEngine::separating_edges(int x, int y) {
  check_pair(x, y);
  std::vector<int> out;
  ++steps_;
  if (labels_[x] == labels_[y]) return out;
  ++stamp_;
  const auto& sys = ix_.trees();
  const auto& dec = ix_.decomposition();
  const int s = ix_.start();
  auto walk = [&](const RootedTree& D, const std::vector<int>& r, const std::vector<int>& bridge,
                  std::vector<std::uint32_t>& mark, int from, int w) {
    for (int z = r[from]; z != s && mark[z] != stamp_ && !D.is_ancestor(z, w); z = r[D.parent(z)]) {
      ++steps_;
      mark[z] = stamp_;
      int e = bridge[z];
      if (edge_mark_[e] != stamp_) {
        edge_mark_[e] = stamp_;
        out.push_back(e);
      }
    }
    ++steps_;
  };
  int w = ix_.nca_h().nca(x, y);
  walk(ix_.d(), dec.r, sys.fwd_edge, node_mark_, x, w);
  walk(ix_.d(), dec.r, sys.fwd_edge, node_mark_, y, w);
  int wr = ix_.nca_hr().nca(x, y);
  walk(ix_.dr(), dec.rr, sys.rev_edge, node_mark_r_, x, wr);
  walk(ix_.dr(), dec.rr, sys.rev_edge, node_mark_r_, y, wr);
  std::sort(out.begin(), out.end());
  return out;
}

bool QueryEngine::vertex_separates(int u, int x, int y) const {
  check_pair(x, y);
  if (u < 0 || u >= ix_.n()) throw std::out_of_range("vertex out of range");
  if (u == x || u == y) throw std::invalid_argument("separator must differ from the query vertices");
  const auto& D = ix_.d();
  const auto& DR = ix_.dr();
  if ((D.is_ancestor(u, x) || D.is_ancestor(u, y)) && !D.is_proper_ancestor(u, ix_.nca_h().nca(x, y))) return true;
  if ((DR.is_ancestor(u, x) || DR.is_ancestor(u, y)) && !DR.is_proper_ancestor(u, ix_.nca_hr().nca(x, y)))
    return true;
  return false;
}

std::vector<int> QueryEngine::separating_vertices(int x, int y) {
  check_pair(x, y);
  std::vector<int> out;
  ++steps_;
  if (forest_.same_block(x, y)) return out;
  ++stamp_;
  auto walk = [&](const RootedTree& D, std::vector<std::uint32_t>& mark, int from, int w) {
    for (int u = D.parent(from); u >= 0 && mark[u] != stamp_ && !D.is_proper_ancestor(u, w); u = D.parent(u)) {
      ++steps_;
      mark[u] = stamp_;
      if (u != x && u != y && out_mark_[u] != stamp_) {
        out_mark_[u] = stamp_;
        out.push_back(u);
      }
    }
    ++steps_;
  };
  int w = ix_.nca_h().nca(x, y);
  walk(ix_.d(), node_mark_, x, w);
  walk(ix_.d(), node_mark_, y, w);
  int wr = ix_.nca_hr().nca(x, y);
  walk(ix_.dr(), node_mark_r_, x, wr);
  walk(ix_.dr(), node_mark_r_, y, wr);
  std::sort(out.begin(), out.end());
  return out;
}

SeparationAnswer QueryEngine::are_2vc(int x, int y) {
  check_pair(x, y);
  SeparationAnswer a;
  if (!forest_.same_block(x, y)) {
    a.connected = false;
    auto seps = separating_vertices(x, y);
    if (!seps.empty()) a.witness_vertex = seps.front();
    return a;
  }
  a.witness_edge = edge_witness(x, y);
  a.connected = !a.witness_edge.has_value();
  return a;
}

}  // namespace sconn
