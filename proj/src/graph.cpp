#include "buckfire/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "buckfire/error.hpp"

namespace buckfire {

void validate(const TreeSpec& spec) {
  if (spec.k < 2 || spec.n < 0) {
    throw Error(ErrorCode::InvalidTreeSpec,
                "tree spec needs k >= 2 and n >= 0, got k=" +
                    std::to_string(spec.k) + ", n=" + std::to_string(spec.n));
  }
}

Graph::Graph(std::vector<std::vector<VertexId>> adjacency, VertexId start,
             std::optional<std::vector<int>> level_of)
    : adjacency_(std::move(adjacency)),
      start_(start),
      level_of_(std::move(level_of)) {
  const std::size_t n = adjacency_.size();
  if (n == 0) {
    throw Error(ErrorCode::StartOutOfRange, "graph has no vertices");
  }
  if (start_ >= n) {
    throw Error(ErrorCode::StartOutOfRange,
                "start " + std::to_string(start_) + " not in [0, " +
                    std::to_string(n) + ")");
  }
  if (level_of_ && level_of_->size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "level_of size differs from vertex count");
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "neighbor " + std::to_string(nbrs[i]) + " of vertex " +
                        std::to_string(v) + " out of range");
      }
      if (nbrs[i] == v) {
        throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(v));
      }
      if (i > 0 && nbrs[i] == nbrs[i - 1]) {
        throw Error(ErrorCode::DuplicateEdge,
                    "duplicate edge " + std::to_string(v) + "-" + std::to_string(nbrs[i]));
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : adjacency_[v]) {
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "adjacency not symmetric at " + std::to_string(v) + "-" +
                        std::to_string(u));
      }
    }
  }

  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (VertexId u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::Disconnected,
                "graph is disconnected: " + std::to_string(reached) + " of " +
                    std::to_string(n) + " vertices reachable");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

const std::vector<int>& Graph::levels() const {
  if (!level_of_) {
    throw Error(ErrorCode::MissingLevels, "board has no level information");
  }
  return *level_of_;
}

Graph Graph::with_start(VertexId start) const {
  return Graph(adjacency_, start, level_of_);
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

Graph build_complete_kary_tree(const TreeSpec& spec) {
  validate(spec);
  const auto k = static_cast<std::size_t>(spec.k);
  std::size_t count = 1;
  std::size_t level_size = 1;
  for (int level = 1; level <= spec.n; ++level) {
    level_size *= k;
    count += level_size;
  }
  std::vector<std::vector<VertexId>> adjacency(count);
  std::vector<int> level_of(count, 0);
  for (VertexId v = 1; v < count; ++v) {
    const VertexId parent = (v - 1) / k;
    adjacency[parent].push_back(v);
    adjacency[v].push_back(parent);
    level_of[v] = level_of[parent] + 1;
  }
  return Graph(std::move(adjacency), 0, std::move(level_of));
}

Graph from_edge_list(std::span<const Edge> edges, VertexId start) {
  std::size_t count = 1;
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    count = std::max({count, u + 1, v + 1});
  }
  if (start >= count) {
    throw Error(ErrorCode::StartOutOfRange,
                "start " + std::to_string(start) + " not in [0, " +
                    std::to_string(count) + ")");
  }
  std::vector<std::vector<VertexId>> adjacency(count);
  for (const auto& [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return Graph(std::move(adjacency), start);
}

std::vector<Edge> edges_of(const Graph& g) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph path_graph(std::size_t vertices, VertexId start) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < vertices; ++v) edges.emplace_back(v - 1, v);
  return from_edge_list(edges, start);
}

Graph cycle_graph(std::size_t vertices, VertexId start) {
  if (vertices < 3) {
    throw Error(ErrorCode::DuplicateEdge, "a simple cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (VertexId v = 0; v < vertices; ++v) edges.emplace_back(v, (v + 1) % vertices);
  return from_edge_list(edges, start);
}

Graph complete_graph(std::size_t vertices, VertexId start) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < vertices; ++u) {
    for (VertexId v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
  }
  return from_edge_list(edges, start);
}

namespace {

VertexId parse_index(std::istringstream& fields, std::size_t line_no, const char* what) {
  std::string token;
  if (!(fields >> token)) {
    throw ParseError(line_no, std::string("missing ") + what);
  }
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line_no, std::string("expected nonnegative decimal ") + what +
                                  ", got '" + token + "'");
  }
  try {
    return static_cast<VertexId>(std::stoull(token));
  } catch (const std::out_of_range&) {
    throw ParseError(line_no, std::string(what) + " out of range: " + token);
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<VertexId> start;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword == "start") {
      if (start) throw ParseError(line_no, "duplicate start directive");
      start = parse_index(fields, line_no, "start index");
    } else if (keyword == "edge") {
      const VertexId u = parse_index(fields, line_no, "edge endpoint");
      const VertexId v = parse_index(fields, line_no, "edge endpoint");
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
    }
  }
  if (!start) throw ParseError(line_no == 0 ? 1 : line_no, "missing start directive");
  return from_edge_list(edges, *start);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "start " << g.start() << '\n';
  for (const auto& [u, v] : edges_of(g)) out << "edge " << u << ' ' << v << '\n';
}

}  // namespace buckfire
