#include "sconn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "sconn/blocks.hpp"
#include "sconn/oracle.hpp"
#include "sconn/query_engine.hpp"
#include "sconn/vertex_analytics.hpp"

namespace sconn::cli {

using nlohmann::json;

std::vector<Component> split_components(const Digraph& g) {
  auto part = strongly_connected_components(g);
  auto comps = part.canonical();
  std::vector<int> which(g.n(), -1), local(g.n(), -1);
  std::vector<Component> out(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    out[c].vertices = comps[c];
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      which[comps[c][i]] = static_cast<int>(c);
      local[comps[c][i]] = static_cast<int>(i);
    }
  }
  std::vector<std::vector<std::pair<int, int>>> edges(comps.size());
  for (int e = 0; e < g.m(); ++e) {
    int c = which[g.tail(e)];
    if (c != which[g.head(e)]) continue;
    out[c].edges.push_back(e);
    edges[c].emplace_back(local[g.tail(e)], local[g.head(e)]);
  }
  for (std::size_t c = 0; c < comps.size(); ++c)
    out[c].graph = Digraph(static_cast<int>(comps[c].size()), std::move(edges[c]));
  return out;
}

int local_start(const Component& c, std::optional<int> start_vertex) {
  if (!start_vertex) return 0;
  auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), *start_vertex);
  return (it != c.vertices.end() && *it == *start_vertex) ? static_cast<int>(it - c.vertices.begin()) : 0;
}

Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Digraph(n, std::move(edges));
}

namespace {

// Everything the report needs, in local ids.
struct Metrics {
  std::vector<int> bridges, saps;
  std::vector<int> ecount, elarge, esmall, vcount, vlarge, vsmall;
  Blocks b2e, bvr, b2v;
};

Metrics compute(const ConnectivityIndex& ix) {
  Metrics r;
  r.bridges = strong_bridges(ix);
  r.saps = strong_articulation_points(ix);
  r.ecount = count_sccs_all_edges(ix);
  r.elarge = lscc_all_edges(ix, Extreme::Largest);
  r.esmall = lscc_all_edges(ix, Extreme::Smallest);
  auto sp = vertex_split(ix);
  r.vcount = count_sccs_all_vertices(ix, sp);
  r.vlarge = lscc_all_vertices(ix, sp, Extreme::Largest);
  r.vsmall = lscc_all_vertices(ix, sp, Extreme::Smallest);
  auto labels = edge_block_labels(ix);
  r.b2e = two_edge_connected_blocks(ix);
  BlockForest vr = vertex_resilient_blocks(ix);
  r.bvr = vr.blocks();
  r.b2v = two_vertex_connected_blocks(ix, vr, labels);
  return r;
}

json edge_json(const Digraph& g, int e) { return json::array({g.tail(e), g.head(e), e}); }

json blocks_json(const Blocks& b, const std::vector<int>& global) {
  json out = json::array();
  for (const auto& blk : b) {
    json a = json::array();
    for (int v : blk) a.push_back(global[v]);
    out.push_back(std::move(a));
  }
  return out;
}

// Index of the first minimum (or maximum) entry, or -1 if empty.
int arg_extreme(const std::vector<int>& v, bool max) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (best < 0 || (max ? v[i] > v[best] : v[i] < v[best])) best = i;
  return best;
}

template <class Emit>
json critical_json(const std::vector<int>& count, const std::vector<int>& large, const std::vector<int>& small,
                   Emit emit) {
  auto pick = [&](const std::vector<int>& v, bool max) {
    int i = arg_extreme(v, max);
    return i < 0 ? json(nullptr) : emit(i);
  };
  return json{{"max_scc_count", pick(count, true)},     {"min_scc_count", pick(count, false)},
              {"min_largest_scc", pick(large, false)},  {"max_largest_scc", pick(large, true)},
              {"min_smallest_scc", pick(small, false)}, {"max_smallest_scc", pick(small, true)}};
}

json component_json(const Digraph& g, const Component& c, const Metrics& r) {
  json j;
  j["vertices"] = c.vertices;
  json edges = json::array();
  for (int e : c.edges) edges.push_back(edge_json(g, e));
  j["edges"] = std::move(edges);
  json sb = json::array();
  for (int e : r.bridges) sb.push_back(edge_json(g, c.edges[e]));
  j["strong_bridges"] = std::move(sb);
  json sap = json::array();
  for (int v : r.saps) sap.push_back(c.vertices[v]);
  j["strong_articulation_points"] = std::move(sap);
  j["scc_count_after_edge"] = r.ecount;
  j["largest_scc_after_edge"] = r.elarge;
  j["smallest_scc_after_edge"] = r.esmall;
  j["scc_count_after_vertex"] = r.vcount;
  j["largest_scc_after_vertex"] = r.vlarge;
  j["smallest_scc_after_vertex"] = r.vsmall;
  j["blocks_2ec"] = blocks_json(r.b2e, c.vertices);
  j["blocks_vr"] = blocks_json(r.bvr, c.vertices);
  j["blocks_2vc"] = blocks_json(r.b2v, c.vertices);
  j["critical"] = {
      {"edge", critical_json(r.ecount, r.elarge, r.esmall, [&](int i) { return edge_json(g, c.edges[i]); })},
      {"vertex", critical_json(r.vcount, r.vlarge, r.vsmall, [&](int i) { return json(c.vertices[i]); })}};
  return j;
}

}  // namespace

json analyze(const Digraph& g, std::optional<int> start_vertex) {
  json report;
  report["schema"] = "1";
  report["n"] = g.n();
  report["m"] = g.m();
  auto comps = split_components(g);
  report["scc_count"] = comps.size();
  json arr = json::array();
  for (const auto& c : comps) {
    auto ix = build_index(c.graph, local_start(c, start_vertex));
    arr.push_back(component_json(g, c, compute(ix)));
  }
  report["components"] = std::move(arr);
  return report;
}

namespace {

std::string edge_text(const json& e) {
  return "(" + std::to_string(e[0].get<int>()) + "," + std::to_string(e[1].get<int>()) + ")#" +
         std::to_string(e[2].get<int>());
}

std::string blocks_text(const json& b) {
  if (b.empty()) return "-";
  std::string s;
  for (const auto& blk : b) {
    if (!s.empty()) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < blk.size(); ++i) s += (i ? "," : "") + std::to_string(blk[i].get<int>());
    s += '}';
  }
  return s;
}

std::string critical_text(const json& c, bool edge) {
  std::string s;
  for (const char* k : {"max_scc_count", "min_scc_count", "min_largest_scc", "max_largest_scc", "min_smallest_scc",
                        "max_smallest_scc"}) {
    const json& v = c[k];
    s += std::string("  ") + k + ": " + (v.is_null() ? "-" : edge ? edge_text(v) : std::to_string(v.get<int>())) +
         "\n";
  }
  return s;
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "schema " << report["schema"].get<std::string>() << "\n";
  os << "vertices " << report["n"] << "  edges " << report["m"] << "  components " << report["scc_count"] << "\n";
  int idx = 0;
  for (const auto& c : report["components"]) {
    os << "\ncomponent " << idx++ << " (" << c["vertices"].size() << " vertices, " << c["edges"].size()
       << " edges)\n";
    std::string sb;
    for (const auto& e : c["strong_bridges"]) sb += (sb.empty() ? "" : " ") + edge_text(e);
    os << "strong bridges: " << (sb.empty() ? "-" : sb) << "\n";
    std::string sap;
    for (const auto& v : c["strong_articulation_points"])
      sap += (sap.empty() ? "" : " ") + std::to_string(v.get<int>());
    os << "strong articulation points: " << (sap.empty() ? "-" : sap) << "\n";
    os << "blocks 2ec: " << blocks_text(c["blocks_2ec"]) << "\n";
    os << "blocks vr:  " << blocks_text(c["blocks_vr"]) << "\n";
    os << "blocks 2vc: " << blocks_text(c["blocks_2vc"]) << "\n";
    if (!c["edges"].empty()) {
      os << std::left << std::setw(18) << "edge" << std::right << std::setw(8) << "sccs" << std::setw(10)
         << "largest" << std::setw(10) << "smallest" << "\n";
      for (std::size_t i = 0; i < c["edges"].size(); ++i)
        os << std::left << std::setw(18) << edge_text(c["edges"][i]) << std::right << std::setw(8)
           << c["scc_count_after_edge"][i].get<int>() << std::setw(10) << c["largest_scc_after_edge"][i].get<int>()
           << std::setw(10) << c["smallest_scc_after_edge"][i].get<int>() << "\n";
    }
    os << std::left << std::setw(18) << "vertex" << std::right << std::setw(8) << "sccs" << std::setw(10)
       << "largest" << std::setw(10) << "smallest" << "\n";
    for (std::size_t i = 0; i < c["vertices"].size(); ++i)
      os << std::left << std::setw(18) << c["vertices"][i].get<int>() << std::right << std::setw(8)
         << c["scc_count_after_vertex"][i].get<int>() << std::setw(10) << c["largest_scc_after_vertex"][i].get<int>()
         << std::setw(10) << c["smallest_scc_after_vertex"][i].get<int>() << "\n";
    os << "critical edges:\n" << critical_text(c["critical"]["edge"], true);
    os << "critical vertices:\n" << critical_text(c["critical"]["vertex"], false);
  }
  return os.str();
}

// ---- queries ----

struct QuerySession::Impl {
  Digraph graph;  // owned copy; callers may pass temporaries
  std::vector<Component> comps;
  std::vector<int> comp_of, local_of, edge_local;
  std::vector<std::unique_ptr<ConnectivityIndex>> index;
  std::vector<std::unique_ptr<QueryEngine>> engine;

  QueryEngine& at(int c) {
    if (!engine[c]) engine[c] = std::make_unique<QueryEngine>(*index[c]);
    return *engine[c];
  }
};

QuerySession::QuerySession(const Digraph& g, std::optional<int> start_vertex) : impl_(std::make_unique<Impl>()) {
  auto& I = *impl_;
  I.graph = g;
  I.comps = split_components(g);
  I.comp_of.assign(g.n(), -1);
  I.local_of.assign(g.n(), -1);
  I.edge_local.assign(g.m(), -1);
  for (std::size_t c = 0; c < I.comps.size(); ++c) {
    const auto& comp = I.comps[c];
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      I.comp_of[comp.vertices[i]] = static_cast<int>(c);
      I.local_of[comp.vertices[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < comp.edges.size(); ++i) I.edge_local[comp.edges[i]] = static_cast<int>(i);
    I.index.push_back(std::make_unique<ConnectivityIndex>(build_index(comp.graph, local_start(comp, start_vertex))));
  }
  I.engine.resize(I.comps.size());
}

QuerySession::~QuerySession() = default;
QuerySession::QuerySession(QuerySession&&) noexcept = default;

namespace {

std::vector<int> parse_ints(std::istringstream& is, std::size_t count, int n, const std::string& cmd) {
  std::vector<int> v;
  std::string tok;
  while (is >> tok) {
    std::size_t pos = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw std::invalid_argument("non-integer token '" + tok + "'");
    if (x < 0 || x >= n) throw std::invalid_argument("vertex " + tok + " out of range");
    v.push_back(static_cast<int>(x));
  }
  if (v.size() != count)
    throw std::invalid_argument("'" + cmd + "' expects " + std::to_string(count) + " vertex arguments");
  return v;
}

}  // namespace

std::string QuerySession::answer(std::string_view line) {
  auto& I = *impl_;
  const Digraph& g = I.graph;
  std::istringstream is{std::string(line)};
  std::string cmd;
  is >> cmd;
  auto edge_str = [&](int c, int e) {
    int ge = I.comps[c].edges[e];
    return "(" + std::to_string(g.tail(ge)) + "," + std::to_string(g.head(ge)) + ")";
  };
  auto global_v = [&](int c, int v) { return I.comps[c].vertices[v]; };
  auto pair_args = [&](std::size_t count) {
    auto v = parse_ints(is, count, g.n(), cmd);
    int x = v[count - 2], y = v[count - 1];
    if (x == y) throw std::invalid_argument("query vertices must be distinct");
    return v;
  };
  auto same = [&](int x, int y) { return I.comp_of[x] == I.comp_of[y]; };

  if (cmd == "2ec" || cmd == "2vc") {
    auto v = pair_args(2);
    int x = v[0], y = v[1];
    if (!same(x, y)) return "no";
    int c = I.comp_of[x];
    auto& q = I.at(c);
    auto a = cmd == "2ec" ? q.are_2ec(I.local_of[x], I.local_of[y]) : q.are_2vc(I.local_of[x], I.local_of[y]);
    if (a.connected) return "yes";
    if (a.witness_edge) return "no " + edge_str(c, *a.witness_edge);
    if (a.witness_vertex) return "no " + std::to_string(global_v(c, *a.witness_vertex));
    return "no";
  }
  if (cmd == "sep-edges" || cmd == "sep-vertices") {
    auto v = pair_args(2);
    int x = v[0], y = v[1];
    if (!same(x, y)) return "";
    int c = I.comp_of[x];
    auto& q = I.at(c);
    std::string out;
    if (cmd == "sep-edges") {
      for (int e : q.separating_edges(I.local_of[x], I.local_of[y])) out += (out.empty() ? "" : " ") + edge_str(c, e);
    } else {
      for (int u : q.separating_vertices(I.local_of[x], I.local_of[y]))
        out += (out.empty() ? "" : " ") + std::to_string(global_v(c, u));
    }
    return out;
  }
  if (cmd == "edge-separates") {
    auto v = pair_args(4);
    int t = v[0], h = v[1], x = v[2], y = v[3];
    int e = -1;
    for (int k = g.out().begin(t); k < g.out().end(t) && e < 0; ++k)
      if (g.head(g.out().list[k]) == h) e = g.out().list[k];
    if (e < 0) throw std::invalid_argument("no edge (" + std::to_string(t) + "," + std::to_string(h) + ")");
    if (!same(x, y) || I.edge_local[e] < 0 || I.comp_of[t] != I.comp_of[x]) return "no";
    int c = I.comp_of[x];
    return I.at(c).edge_separates(I.edge_local[e], I.local_of[x], I.local_of[y]) ? "yes" : "no";
  }
  if (cmd == "vertex-separates") {
    auto v = pair_args(3);
    int u = v[0], x = v[1], y = v[2];
    if (u == x || u == y) throw std::invalid_argument("separator must differ from the query vertices");
    if (!same(x, y) || I.comp_of[u] != I.comp_of[x]) return "no";
    int c = I.comp_of[x];
    return I.at(c).vertex_separates(I.local_of[u], I.local_of[x], I.local_of[y]) ? "yes" : "no";
  }
  throw std::invalid_argument(cmd.empty() ? "empty query" : "unknown query '" + cmd + "'");
}

// ---- check ----

namespace {

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << ']';
  return os.str();
}

std::string show(const std::vector<std::vector<int>>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + show(v[i]);
  return s + "]";
}

// First difference between library and oracle for one instance, or empty.
std::string check_instance(const Digraph& g, int s, const CheckOptions& opt) {
  auto ix = build_index(g, s);
  Metrics r = compute(ix);
  if (opt.corrupt && !r.ecount.empty()) r.ecount[0] += 1;
  auto diff = [](const std::string& what, const auto& got, const auto& want) {
    return what + ": got " + show(got) + ", expected " + show(want);
  };
  if (auto w = oracle::strong_bridges(g); r.bridges != w) return diff("strong_bridges", r.bridges, w);
  if (auto w = oracle::strong_articulation_points(g); r.saps != w)
    return diff("strong_articulation_points", r.saps, w);
  for (int e = 0; e < g.m(); ++e) {
    auto w = oracle::sccs_after_edge(g, e);
    std::vector<int> got{r.ecount[e], r.elarge[e], r.esmall[e]};
    std::vector<int> want{static_cast<int>(w.count()), static_cast<int>(w.largest()), static_cast<int>(w.smallest())};
    if (got != want) return diff("edge " + std::to_string(e) + " count/largest/smallest", got, want);
    auto rep = report_sccs_after_edge(ix, e).canonical();
    if (rep != w.canonical()) return diff("report_sccs_after_edge " + std::to_string(e), rep, w.canonical());
  }
  for (int u = 0; u < g.n(); ++u) {
    auto w = oracle::sccs_after_vertex(g, u);
    std::vector<int> got{r.vcount[u], r.vlarge[u], r.vsmall[u]};
    std::vector<int> want{static_cast<int>(w.count()), static_cast<int>(w.largest()), static_cast<int>(w.smallest())};
    if (got != want) return diff("vertex " + std::to_string(u) + " count/largest/smallest", got, want);
    auto rep = report_sccs_after_vertex(ix, u).canonical();
    if (rep != w.canonical()) return diff("report_sccs_after_vertex " + std::to_string(u), rep, w.canonical());
  }
  if (opt.blocks) {
    if (auto w = oracle::blocks(g, oracle::BlockKind::TwoEdge); r.b2e != w) return diff("blocks_2ec", r.b2e, w);
    if (auto w = oracle::blocks(g, oracle::BlockKind::VertexResilient); r.bvr != w)
      return diff("blocks_vr", r.bvr, w);
    if (auto w = oracle::blocks(g, oracle::BlockKind::TwoVertex); r.b2v != w) return diff("blocks_2vc", r.b2v, w);
  }
  QueryEngine q(ix);
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y) {
      if (x == y) continue;
      std::string pair = " (" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (auto got = q.separating_edges(x, y), w = oracle::separating_edges(g, x, y); got != w)
        return diff("separating_edges" + pair, got, w);
      if (auto got = q.separating_vertices(x, y), w = oracle::separating_vertices(g, x, y); got != w)
        return diff("separating_vertices" + pair, got, w);
    }
  return {};
}

}  // namespace

int run_check(const CheckOptions& opt, std::ostream& out) {
  int failures = 0;
  for (int i = 0; i < opt.seeds; ++i) {
    std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(i);
    Digraph g = oracle::random_strongly_connected_digraph({opt.n, opt.m, seed});
    int s = static_cast<int>(seed % static_cast<std::uint64_t>(opt.n));
    std::string d = check_instance(g, s, opt);
    if (!d.empty()) {
      ++failures;
      out << "seed " << seed << " (start " << s << "): " << d << "\n";
    }
  }
  out << "checked " << opt.seeds << " seeds (n=" << opt.n << ", m=" << opt.m << "): "
      << (failures ? std::to_string(failures) + " failed" : std::string("all passed")) << "\n";
  return failures;
}

// ---- entry point ----

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json benchmark(const Digraph& g, std::optional<int> start_vertex) {
  using clock = std::chrono::steady_clock;
  double t_build = 0, t_ecount = 0, t_eext = 0, t_vcount = 0, t_vext = 0;
  std::size_t footprint = 0;
  auto comps = split_components(g);
  for (const auto& c : comps) {
    auto t0 = clock::now();
    auto ix = build_index(c.graph, local_start(c, start_vertex));
    t_build += ms_since(t0);
    footprint += ix.footprint();
    t0 = clock::now();
    auto a = count_sccs_all_edges(ix);
    t_ecount += ms_since(t0);
    t0 = clock::now();
    auto b = lscc_all_edges(ix, Extreme::Largest);
    auto b2 = lscc_all_edges(ix, Extreme::Smallest);
    t_eext += ms_since(t0);
    t0 = clock::now();
    auto sp = vertex_split(ix);
    auto d = count_sccs_all_vertices(ix, sp);
    t_vcount += ms_since(t0);
    t0 = clock::now();
    auto e = lscc_all_vertices(ix, sp, Extreme::Largest);
    auto e2 = lscc_all_vertices(ix, sp, Extreme::Smallest);
    t_vext += ms_since(t0);
  }
  return json{{"schema", "1"},
              {"n", g.n()},
              {"m", g.m()},
              {"scc_count", comps.size()},
              {"build_index_ms", t_build},
              {"count_sccs_all_edges_ms", t_ecount},
              {"extreme_scc_all_edges_ms", t_eext},
              {"count_sccs_all_vertices_ms", t_vcount},
              {"extreme_scc_all_vertices_ms", t_vext},
              {"index_footprint_ints", footprint}};
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong connectivity analysis of directed graphs"};
  app.require_subcommand(1);
  std::string format = "json";
  std::optional<int> start_vertex;
  std::string graph_path, query_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--start-vertex", start_vertex, "Start vertex (does not change results)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Per-component analysis report");
  analyze_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  add_common(analyze_cmd);

  auto* query_cmd = app.add_subcommand("query", "Answer a batch of pair queries");
  query_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  query_cmd->add_option("--queries", query_path, "Query file, one query per line")->required();
  add_common(query_cmd);

  CheckOptions copt;
  bool no_blocks = false;
  auto* check_cmd = app.add_subcommand("check", "Compare the library against brute force on random graphs");
  check_cmd->add_option("--n", copt.n, "Vertices")->check(CLI::Range(2, 1 << 20));
  check_cmd->add_option("--m", copt.m, "Edges");
  check_cmd->add_option("--seeds", copt.seeds, "Number of seeds")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--seed", copt.base_seed, "First seed");
  check_cmd->add_flag("--no-blocks", no_blocks, "Skip the block checks");
  check_cmd->add_flag("--corrupt-index", copt.corrupt)->group("");

  std::string family = "random";
  int bn = 10000, bm = -1;
  std::uint64_t bseed = 1;
  auto* bench_cmd = app.add_subcommand("benchmark", "Time index construction and the all-elements batches");
  bench_cmd->add_option("graph", graph_path, "Edge-list file (omit to generate)");
  bench_cmd->add_option("--family", family, "Generated family")->check(CLI::IsMember({"random", "cycle"}));
  bench_cmd->add_option("--n", bn, "Generated vertices")->check(CLI::Range(2, 1 << 28));
  bench_cmd->add_option("--m", bm, "Generated edges (default 5n for random)");
  bench_cmd->add_option("--seed", bseed, "Generator seed");
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_cmd->parsed()) {
      copt.blocks = !no_blocks;
      if (copt.blocks && copt.n > 12) throw UsageError("--n must be at most 12 with block checks (use --no-blocks)");
      if (copt.m < copt.n) throw UsageError("--m must be at least --n");
      return run_check(copt, out) == 0 ? 0 : 1;
    }
    if (bench_cmd->parsed()) {
      Digraph g;
      if (!graph_path.empty()) {
        g = parse_digraph(read_file(graph_path));
      } else if (family == "cycle") {
        g = directed_cycle(bn);
      } else {
        int m = bm < 0 ? 5 * bn : bm;
        if (m < bn) throw UsageError("--m must be at least --n");
        g = oracle::random_strongly_connected_digraph({bn, m, bseed});
      }
      if (start_vertex && (*start_vertex < 0 || *start_vertex >= g.n()))
        throw UsageError("--start-vertex out of range");
      json r = benchmark(g, start_vertex);
      if (format == "json") {
        out << r.dump(2) << "\n";
      } else {
        for (auto& [k, v] : r.items()) out << std::left << std::setw(30) << k << v.dump() << "\n";
      }
      return 0;
    }
    Digraph g = parse_digraph(read_file(graph_path));
    if (start_vertex && (*start_vertex < 0 || *start_vertex >= g.n())) throw UsageError("--start-vertex out of range");
    if (analyze_cmd->parsed()) {
      json r = analyze(g, start_vertex);
      out << (format == "json" ? r.dump(2) + "\n" : render_text(r));
      return 0;
    }
    std::istringstream qs(read_file(query_path));
    QuerySession session(g, start_vertex);
    std::string line;
    json answers = json::array();
    int lineno = 0;
    while (std::getline(qs, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
        continue;
      std::string a;
      try {
        a = session.answer(line);
      } catch (const std::exception& e) {
        throw UsageError(query_path + ": " + e.what() + " at line " + std::to_string(lineno));
      }
      if (format == "json")
        answers.push_back({{"query", line}, {"answer", a}});
      else
        out << a << "\n";
    }
    if (format == "json") out << json{{"schema", "1"}, {"answers", answers}}.dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << graph_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sconn::cli
