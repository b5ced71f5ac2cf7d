#include <doctest.h>

#include <fstream>
#include <sstream>

#include "buckfire/error.hpp"
#include "buckfire/graph.hpp"

using namespace buckfire;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected buckfire::Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("single-vertex tree") {
  const Graph g = build_complete_kary_tree({2, 0});
  CHECK(g.vertex_count() == 1);
  CHECK(g.start() == 0);
  CHECK(g.levels() == std::vector<int>{0});
  CHECK(degree(g, 0) == 0);
}

TEST_CASE("level-1 binary tree is root joined to two leaves") {
  const Graph g = build_complete_kary_tree({2, 1});
  REQUIRE(g.vertex_count() == 3);
  CHECK(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
        std::vector<VertexId>{1, 2});
  CHECK(degree(g, 0) == 2);
  CHECK(degree(g, 1) == 1);
  CHECK(degree(g, 2) == 1);
  CHECK(g.levels() == std::vector<int>{0, 1, 1});
}

TEST_CASE("ternary tree to level 2") {
  const Graph g = build_complete_kary_tree({3, 2});
  CHECK(g.vertex_count() == 13);
  CHECK(g.degree(0) == 3);
  for (VertexId v = 1; v <= 3; ++v) CHECK(g.degree(v) == 4);
  for (VertexId v = 4; v < 13; ++v) CHECK(g.degree(v) == 1);
}

TEST_CASE("generated trees: sizes, degree sum, contiguous levels") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const Graph g = build_complete_kary_tree({k, n});
      std::size_t expected = 0, width = 1;
      for (int j = 0; j <= n; ++j, width *= static_cast<std::size_t>(k)) expected += width;
      CHECK(g.vertex_count() == expected);

      std::size_t degree_sum = 0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
      CHECK(degree_sum == 2 * (g.vertex_count() - 1));

      const auto& levels = g.levels();
      CHECK(std::is_sorted(levels.begin(), levels.end()));
      CHECK(static_cast<std::size_t>(std::count(levels.begin(), levels.end(), n)) ==
            width / static_cast<std::size_t>(k));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::size_t children = (levels[v] < n) ? static_cast<std::size_t>(k) : 0;
        CHECK(g.degree(v) == children + (v == 0 ? 0 : 1));
      }
    }
  }
}

TEST_CASE("tree spec validation") {
  CHECK(code_of([] { build_complete_kary_tree({1, 2}); }) == ErrorCode::InvalidTreeSpec);
  CHECK(code_of([] { build_complete_kary_tree({2, -1}); }) == ErrorCode::InvalidTreeSpec);
}

TEST_CASE("edge list ingestion") {
  const std::vector<Edge> fig1{{0, 1}, {0, 2}};
  CHECK(edges_of(from_edge_list(fig1, 0)) == edges_of(build_complete_kary_tree({2, 1})));
  // Generated graphs carry levels, ingested ones do not.
  CHECK_FALSE(from_edge_list(fig1, 0).has_levels());
  CHECK(code_of([&] { from_edge_list(fig1, 0).levels(); }) == ErrorCode::MissingLevels);

  SUBCASE("distinct errors") {
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK(code_of([&] { from_edge_list(split, 0); }) == ErrorCode::Disconnected);
    const std::vector<Edge> loop{{0, 0}};
    CHECK(code_of([&] { from_edge_list(loop, 0); }) == ErrorCode::SelfLoop);
    const std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK(code_of([&] { from_edge_list(twice, 0); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([&] { from_edge_list(fig1, 3); }) == ErrorCode::StartOutOfRange);
    // Index 1 never used: not dense, so not connected.
    const std::vector<Edge> gap{{0, 2}};
    CHECK(code_of([&] { from_edge_list(gap, 0); }) == ErrorCode::Disconnected);
  }

  SUBCASE("isolated single vertex") {
    const Graph g = from_edge_list({}, 0);
    CHECK(g.vertex_count() == 1);
    CHECK(code_of([] { from_edge_list({}, 1); }) == ErrorCode::StartOutOfRange);
  }
}

TEST_CASE("edges_of round-trips through from_edge_list") {
  std::vector<Graph> corpus{path_graph(7, 3), cycle_graph(6, 2), complete_graph(5, 4),
                            from_edge_list(edges_of(build_complete_kary_tree({3, 2})), 5)};
  for (const auto& g : corpus) {
    CHECK(from_edge_list(edges_of(g), g.start()) == g);
  }
}

TEST_CASE("text format") {
  SUBCASE("parse with comments and blank lines") {
    std::istringstream in("# board\n\nstart 1\nedge 0 1  # first\n edge 1 2\n");
    const Graph g = parse_graph(in);
    CHECK(g == path_graph(3, 1));
  }
  SUBCASE("write then parse") {
    const Graph g = cycle_graph(5, 3);
    std::stringstream buf;
    write_graph(buf, g);
    CHECK(parse_graph(buf) == g);
  }
  SUBCASE("parse errors carry line numbers") {
    std::istringstream in("start 0\nedge 0 1\nedge 1 x\n");
    try {
      parse_graph(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    std::istringstream missing("edge 0 1\n");
    CHECK_THROWS_AS(parse_graph(missing), ParseError);
    std::istringstream unknown("start 0\nvertex 3\n");
    try {
      parse_graph(unknown);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream negative("start -1\n");
    CHECK_THROWS_AS(parse_graph(negative), ParseError);
  }
  SUBCASE("structural errors from files") {
    CHECK(code_of([] { read_graph_file(BUCKFIRE_TEST_DATA "/disconnected.txt"); }) ==
          ErrorCode::Disconnected);
    CHECK(read_graph_file(BUCKFIRE_TEST_DATA "/single.txt").vertex_count() == 1);
    CHECK(read_graph_file(BUCKFIRE_TEST_DATA "/fig1_tree.txt") == from_edge_list(
        std::vector<Edge>{{0, 1}, {0, 2}}, 0));
  }
}
