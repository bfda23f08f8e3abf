#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sconn/graph_core.hpp"

namespace sconn::cli {

// One strongly connected component of the input, with global ids.
struct Component {
  std::vector<int> vertices;  // ascending; local id = position
  std::vector<int> edges;     // global edge ids of the induced edges, ascending
  Digraph graph;              // local ids; local edge i is global edges[i]
};

// Components ordered by smallest vertex.
std::vector<Component> split_components(const Digraph& g);

// Local start vertex for a component: the given global vertex if it lies in the
// component, else local 0.
int local_start(const Component& c, std::optional<int> start_vertex);

// Full analysis of every component. Numbers do not depend on the start vertex.
nlohmann::json analyze(const Digraph& g, std::optional<int> start_vertex = std::nullopt);
std::string render_text(const nlohmann::json& report);

// Answers batch query lines against one graph.
class QuerySession {
 public:
  QuerySession(const Digraph& g, std::optional<int> start_vertex);
  ~QuerySession();
  QuerySession(QuerySession&&) noexcept;

  // Throws std::invalid_argument on a malformed line.
  std::string answer(std::string_view line);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct CheckOptions {
  int n = 8;
  int m = 16;
  int seeds = 100;
  std::uint64_t base_seed = 1;
  bool blocks = true;
  bool corrupt = false;  // perturbs one library result; negative control
};

// Returns the number of failing seeds; prints one line per failure and a summary.
int run_check(const CheckOptions& opt, std::ostream& out);

Digraph directed_cycle(int n);

// Entry point; returns the process exit code (0 ok, 1 check failure, 2 usage/parse error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sconn::cli
