#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace buckfire {

using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;

/// Complete k-ary tree to level n.
struct TreeSpec {
  int k = 2;
  int n = 0;

  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;
};

void validate(const TreeSpec& spec);

/// Connected simple undirected graph with a designated start vertex.
///
/// Instances are immutable once built and always satisfy: symmetric sorted
/// adjacency, no self-loops or parallel edges, connectivity, start in range.
class Graph {
 public:
  /// Validates and canonicalizes. `level_of`, when present, must have one
  /// entry per vertex.
  Graph(std::vector<std::vector<VertexId>> adjacency, VertexId start,
        std::optional<std::vector<int>> level_of = std::nullopt);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  VertexId start() const noexcept { return start_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_levels() const noexcept { return level_of_.has_value(); }
  /// Throws MissingLevels for ingested boards.
  const std::vector<int>& levels() const;

  /// Same board, buck starting elsewhere.
  Graph with_start(VertexId start) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  VertexId start_;
  std::optional<std::vector<int>> level_of_;
};

std::size_t degree(const Graph& g, VertexId v);

/// Breadth-first numbering: root is 0 and the start vertex, the children of
/// vertex v are k*v+1 .. k*v+k, and level j occupies a contiguous index range.
Graph build_complete_kary_tree(const TreeSpec& spec);

/// Vertex count is max index + 1. An empty edge list denotes the isolated
/// single vertex and requires start == 0.
Graph from_edge_list(std::span<const Edge> edges, VertexId start);

/// Each undirected edge once as (u, v) with u < v, sorted.
std::vector<Edge> edges_of(const Graph& g);

Graph path_graph(std::size_t vertices, VertexId start = 0);
Graph cycle_graph(std::size_t vertices, VertexId start = 0);
Graph complete_graph(std::size_t vertices, VertexId start = 0);

/// Text board format:
///   start <index>
///   edge <u> <v>
/// one directive per line, `#` starts a comment.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace buckfire
