#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "buckfire/abacus.hpp"
#include "buckfire/error.hpp"
#include "buckfire/markov.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace buckfire;
using namespace buckfire::markov;

namespace {

const Rational half(1, 2), third(1, 3);

}  // namespace

TEST_CASE("transition matrix of the level-1 tree in display order") {
  // Display order v_L, v_root, v_R.
  const Graph g = build_complete_kary_tree({2, 1});
  const auto system = build_transition_matrix(g, {1, 0, 2});
  const RationalMatrix expected{
      {0, half, 0, half, 0, 0},       {third, 0, third, 0, third, 0},
      {0, half, 0, 0, 0, half},       {0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 1, 0},             {0, 0, 0, 0, 0, 1},
  };
  CHECK(system.transition == expected);
  CHECK(system.ordering == std::vector<VertexId>{1, 0, 2});
}

TEST_CASE("canonical transition matrices") {
  SUBCASE("single vertex") {
    CHECK(build_transition_matrix(build_complete_kary_tree({2, 0})).transition ==
          RationalMatrix{{0, 1}, {0, 1}});
  }
  SUBCASE("middle of a path") {
    const auto t = build_transition_matrix(path_graph(3)).transition;
    CHECK(t.row(1) == std::vector<Rational>{third, 0, third, 0, third, 0});
  }
  SUBCASE("rows are stochastic") {
    for (const Graph& g : {complete_graph(5), cycle_graph(7), build_complete_kary_tree({3, 2})}) {
      const auto t = build_transition_matrix(g).transition;
      for (std::size_t r = 0; r < t.rows(); ++r) CHECK(t.row_sum(r) == 1);
    }
  }
  SUBCASE("ordering must be a permutation") {
    CHECK_THROWS_AS(build_transition_matrix(path_graph(3), {0, 0, 1}), Error);
  }
}

TEST_CASE("partition") {
  const auto t = build_transition_matrix(build_complete_kary_tree({2, 1}), {1, 0, 2}).transition;
  const auto [q, r] = partition(t, 3);
  CHECK(q == RationalMatrix{{0, half, 0}, {third, 0, third}, {0, half, 0}});
  CHECK(r == RationalMatrix{{half, 0, 0}, {0, third, 0}, {0, 0, half}});

  const auto single = partition(RationalMatrix{{0, 1}, {0, 1}}, 1);
  CHECK(single.q == RationalMatrix{{0}});
  CHECK(single.r == RationalMatrix{{1}});

  RationalMatrix broken = t;
  broken(4, 3) = half;
  broken(4, 4) = half;
  try {
    partition(broken, 3);
    FAIL("expected MalformedBlockStructure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedBlockStructure);
  }
}

TEST_CASE("absorption matrix") {
  const RationalMatrix q{{0, half, 0}, {third, 0, third}, {0, half, 0}};
  const RationalMatrix r{{half, 0, 0}, {0, third, 0}, {0, 0, half}};
  const Rational e(1, 8), f(5, 8), g(1, 4);
  CHECK(absorption_matrix(q, r) ==
        RationalMatrix{{f, g, e}, {g, half, g}, {e, g, f}});
  CHECK(absorption_matrix(RationalMatrix{{0}}, RationalMatrix{{1}}) == RationalMatrix{{1}});

  // A transient state that never leaves: I - Q has a zero row.
  try {
    absorption_matrix(RationalMatrix{{1}}, RationalMatrix{{0}});
    FAIL("expected SingularMatrix");
  } catch (const Error& ex) {
    CHECK(ex.code() == ErrorCode::SingularMatrix);
  }
}

TEST_CASE("fundamental matrix inverts I - Q exactly") {
  for (const Graph& g : {build_complete_kary_tree({2, 2}), cycle_graph(6), complete_graph(4),
                         path_graph(5)}) {
    const auto [q, r] = partition(build_transition_matrix(g).transition, g.vertex_count());
    const auto n = fundamental_matrix(q);
    const auto identity = RationalMatrix::identity(q.rows());
    CHECK((identity - q) * n == identity);
    const auto nr = absorption_matrix(q, r);
    CHECK(nr == n * r);
    for (std::size_t row = 0; row < nr.rows(); ++row) CHECK(nr.row_sum(row) == 1);
  }
}

TEST_CASE("win probabilities") {
  const Graph fig1 = build_complete_kary_tree({2, 1});
  CHECK(win_probabilities(fig1) == std::vector<Rational>{half, ratio(1, 4), ratio(1, 4)});
  // Started at L (vertex 1): L 5/8, root 1/4, R 1/8.
  CHECK(win_probabilities(fig1.with_start(1)) ==
        std::vector<Rational>{ratio(1, 4), ratio(5, 8), ratio(1, 8)});
  CHECK(win_probabilities(build_complete_kary_tree({2, 0})) == std::vector<Rational>{1});

  const auto level2 = win_probabilities(build_complete_kary_tree({2, 2}));
  CHECK(level2[0] == ratio(3, 7));
  CHECK(level2[1] == ratio(1, 7));
  CHECK(level2[2] == ratio(1, 7));
  for (int v = 3; v < 7; ++v) CHECK(level2[static_cast<std::size_t>(v)] == ratio(1, 14));
}

TEST_CASE("agrees with Cramer's rule on small boards") {
  std::vector<Graph> boards{path_graph(4, 1), cycle_graph(5, 0), complete_graph(4, 2),
                            build_complete_kary_tree({3, 1}), build_complete_kary_tree({2, 1})};
  boards.push_back(from_edge_list(std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}, 3));
  for (const auto& g : boards) CHECK(win_probabilities(g) == oracle::cramer_win_probabilities(g));
}

TEST_CASE("cycle probabilities depend only on distance from the start") {
  for (std::size_t m = 3; m <= 8; ++m) {
    for (VertexId s = 0; s < m; ++s) {
      const auto p = win_probabilities(cycle_graph(m, s));
      for (std::size_t d = 1; d < m; ++d) {
        CHECK(p[(s + d) % m] == p[(s + m - d) % m]);
      }
    }
  }
}

TEST_CASE("complete graphs: start wins 2/(m+1), every other vertex 1/(m+1)") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto p = win_probabilities(complete_graph(m, m - 1));
    for (VertexId v = 0; v < m; ++v) {
      const long share = (v == m - 1) ? 2 : 1;
      CHECK(p[v] == ratio(share, static_cast<long>(m + 1)));
    }
  }
}

TEST_CASE("matrix json export") {
  std::ostringstream out;
  write_matrix_json(out, RationalMatrix{{half, 0}, {1, ratio(-2, 6)}});
  CHECK(nlohmann::json::parse(out.str()) ==
        nlohmann::json::parse(R"([["1/2","0/1"],["1/1","-1/3"]])"));
}

TEST_CASE("exact agreement with the abacus on the standard corpus") {
  for (const auto& [name, g] : corpus::standard()) {
    CAPTURE(name);
    const auto p = win_probabilities(g);
    CHECK(p == abacus::win_probabilities(abacus::run(abacus::augment(g)).terminals));
    CHECK(sum(p) == 1);
  }
  // Off-centre starts on the non-tree families.
  for (const Graph& g : {path_graph(9, 2), cycle_graph(8, 5), complete_graph(6, 4)}) {
    CHECK(win_probabilities(g) == abacus::win_probabilities(abacus::run(abacus::augment(g)).terminals));
  }
}
