#include "buckfire/markov.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "buckfire/error.hpp"

namespace buckfire::markov {

TransitionSystem build_transition_matrix(const Graph& g) {
  std::vector<VertexId> ordering(g.vertex_count());
  std::iota(ordering.begin(), ordering.end(), VertexId{0});
  return build_transition_matrix(g, ordering);
}

TransitionSystem build_transition_matrix(const Graph& g, const std::vector<VertexId>& ordering) {
  const std::size_t m = g.vertex_count();
  std::vector<std::size_t> state_of(m, m);
  if (ordering.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "ordering must list every vertex once");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (ordering[i] >= m || state_of[ordering[i]] != m) {
      throw Error(ErrorCode::DimensionMismatch, "ordering must list every vertex once");
    }
    state_of[ordering[i]] = i;
  }

  RationalMatrix t(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId v = ordering[i];
    const Rational share(1, g.degree(v) + 1);
    for (VertexId u : g.neighbors(v)) t(i, state_of[u]) = share;
    t(i, m + i) = share;
    t(m + i, m + i) = 1;
  }
  return {std::move(t), ordering};
}

Blocks partition(const RationalMatrix& t, std::size_t transient) {
  if (t.rows() != t.cols() || transient > t.rows()) {
    throw Error(ErrorCode::MalformedBlockStructure, "transition matrix must be square");
  }
  const std::size_t n = t.rows();
  const std::size_t absorbing = n - transient;
  for (std::size_t r = transient; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int expected = (c == r) ? 1 : 0;
      if (t(r, c) != expected) {
        throw Error(ErrorCode::MalformedBlockStructure,
                    "absorbing row " + std::to_string(r) + " is not an identity row");
      }
    }
  }
  return {t.block(0, 0, transient, transient), t.block(0, transient, transient, absorbing)};
}

namespace {

RationalMatrix identity_minus(const RationalMatrix& q) {
  if (q.rows() != q.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Q must be square");
  }
  return RationalMatrix::identity(q.rows()) - q;
}

}  // namespace

RationalMatrix fundamental_matrix(const RationalMatrix& q) {
  return solve_reordered(identity_minus(q), RationalMatrix::identity(q.rows()));
}

RationalMatrix absorption_matrix(const RationalMatrix& q, const RationalMatrix& r) {
  return solve_reordered(identity_minus(q), r);
}

std::vector<Rational> win_probabilities(const Graph& g) {
  const auto system = build_transition_matrix(g);
  const std::size_t m = g.vertex_count();
  const auto [q, r] = partition(system.transition, m);
  // Row s of N R is y^T R where (I - Q)^T y = e_s; one right-hand side
  // instead of the full inverse. Canonical ordering makes state == vertex.
  RationalMatrix lhs(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) lhs(j, i) = (i == j ? Rational(1) : Rational(0)) - q(i, j);
  }
  RationalMatrix unit(m, 1);
  unit(g.start(), 0) = 1;
  const RationalMatrix y = solve_reordered(lhs, unit);
  std::vector<Rational> row(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(y(i, 0)) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(r(i, j)) != 0) row[j] += y(i, 0) * r(i, j);
    }
  }
  return row;
}

void write_matrix_json(std::ostream& out, const RationalMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  out << rows.dump();
}

}  // namespace buckfire::markov
