#include "sconn/graph_core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace sconn {

Csr build_csr(int n, const std::vector<int>& keys, const std::vector<int>& items) {
  Csr c;
  c.start.assign(n + 1, 0);
  for (int k : keys) ++c.start[k + 1];
  for (int v = 0; v < n; ++v) c.start[v + 1] += c.start[v];
  c.list.resize(items.size());
  std::vector<int> pos(c.start.begin(), c.start.end() - 1);
  for (std::size_t i = 0; i < keys.size(); ++i) c.list[pos[keys[i]]++] = items[i];
  return c;
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  tail_.reserve(edges.size());
  head_.reserve(edges.size());
  for (auto [t, h] : edges) {
    if (t < 0 || h < 0 || t >= n || h >= n) throw std::invalid_argument("edge endpoint out of range");
    if (t == h) continue;
    tail_.push_back(t);
    head_.push_back(h);
  }
  std::vector<int> ids(tail_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  out_ = build_csr(n, tail_, ids);
  in_ = build_csr(n, head_, ids);
  out_heads_ = build_csr(n, tail_, head_).list;
  in_tails_ = build_csr(n, head_, tail_).list;
}

Digraph Digraph::without_edge(int e) const {
  std::vector<std::pair<int, int>> es;
  es.reserve(tail_.size());
  for (int i = 0; i < m(); ++i)
    if (i != e) es.emplace_back(tail_[i], head_[i]);
  return Digraph(n_, std::move(es));
}

std::pair<Digraph, std::vector<int>> Digraph::induced(const std::vector<int>& keep) const {
  std::vector<int> map(n_, -1);
  int k = 0;
  for (int v : keep) map[v] = k++;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m(); ++i)
    if (map[tail_[i]] >= 0 && map[head_[i]] >= 0) es.emplace_back(map[tail_[i]], map[head_[i]]);
  return {Digraph(k, std::move(es)), std::move(map)};
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError("non-integer token '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  std::size_t pos = 0;
  long long seen = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2) throw ParseError("malformed header (expected 'n m')", line_no);
      n = parse_int(toks[0], line_no);
      m = parse_int(toks[1], line_no);
      if (n < 0 || m < 0) throw ParseError("malformed header (negative count)", line_no);
      if (n > std::numeric_limits<int>::max() / 2 || m > std::numeric_limits<int>::max() / 2)
        throw ParseError("malformed header (count too large)", line_no);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (seen == m) throw ParseError("more edge lines than declared", line_no);
    if (toks.size() != 2) throw ParseError("expected 'tail head'", line_no);
    long long t = parse_int(toks[0], line_no), h = parse_int(toks[1], line_no);
    if (t < 0 || h < 0) throw ParseError("negative vertex id", line_no);
    if (t >= n || h >= n) throw ParseError("vertex id out of range", line_no);
    ++seen;
    edges.emplace_back(static_cast<int>(t), static_cast<int>(h));
  }
  if (n < 0) throw ParseError("missing header", line_no + 1);
  if (seen != m) throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen), line_no + 1);
  return Digraph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Digraph& g) {
  std::string s = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (int e = 0; e < g.m(); ++e) s += std::to_string(g.tail(e)) + " " + std::to_string(g.head(e)) + "\n";
  return s;
}

Digraph reverse(const Digraph& g) {
  std::vector<std::pair<int, int>> es(g.m());
  for (int e = 0; e < g.m(); ++e) es[e] = {g.head(e), g.tail(e)};
  return Digraph(g.n(), std::move(es));
}

std::size_t SccPartition::largest() const {
  std::size_t best = 0;
  for (auto& c : components) best = std::max(best, c.size());
  return best;
}

std::size_t SccPartition::smallest() const {
  if (components.empty()) return 0;
  std::size_t best = components[0].size();
  for (auto& c : components) best = std::min(best, c.size());
  return best;
}

std::vector<std::vector<int>> SccPartition::canonical() const {
  auto out = components;
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

SccPartition partition_from_labels(const std::vector<int>& label, std::optional<int> excluded) {
  SccPartition p;
  p.excluded = excluded;
  const int n = static_cast<int>(label.size());
  p.component_of.assign(n, -1);
  std::vector<int> id_of(n, -1);
  for (int v = 0; v < n; ++v) {
    int l = label[v];
    if (l < 0) continue;
    if (id_of[l] < 0) {
      id_of[l] = static_cast<int>(p.components.size());
      p.components.emplace_back();
    }
    p.component_of[v] = id_of[l];
    p.components[id_of[l]].push_back(v);
  }
  return p;
}

SccPartition strongly_connected_components(const Digraph& g) { return strongly_connected_components(g, -1, -1); }

SccPartition strongly_connected_components(const Digraph& g, int skip_edge, int skip_vertex) {
  const int n = g.n();
  const Csr& out = g.out();
  std::vector<int> index(n, -1), low(n, 0), cursor(n, 0), stack, call;
  std::vector<char> on_stack(n, 0);
  SccPartition p;
  p.component_of.assign(n, -1);
  if (skip_vertex >= 0) p.excluded = skip_vertex;
  int counter = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0 || root == skip_vertex) continue;
    call.push_back(root);
    index[root] = low[root] = counter++;
    cursor[root] = out.begin(root);
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      int v = call.back();
      if (cursor[v] < out.end(v)) {
        int e = out.list[cursor[v]++];
        if (e == skip_edge) continue;
        int w = g.head(e);
        if (w == skip_vertex) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          cursor[w] = out.begin(w);
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        int id = static_cast<int>(p.components.size());
        p.components.emplace_back();
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          p.component_of[w] = id;
          p.components[id].push_back(w);
        } while (w != v);
      }
    }
  }
  return p;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.n() <= 1) return true;
  return strongly_connected_components(g).count() == 1;
}

}  // namespace sconn
