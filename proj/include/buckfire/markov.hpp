#pragma once

#include <iosfwd>
#include <vector>

#include "buckfire/graph.hpp"
#include "buckfire/rational.hpp"

namespace buckfire::markov {

/// Transition matrix over 2m states: transient v_0..v_{m-1}, then absorbing
/// w_0..w_{m-1}. `ordering[i]` is the vertex behind transient state i (and
/// absorbing state m+i).
struct TransitionSystem {
  RationalMatrix transition;
  std::vector<VertexId> ordering;
};

TransitionSystem build_transition_matrix(const Graph& g);

/// Same chain with transient states listed in `ordering` (a permutation of
/// the vertices), absorbing states following in the same order.
TransitionSystem build_transition_matrix(const Graph& g, const std::vector<VertexId>& ordering);

struct Blocks {
  RationalMatrix q;  // transient -> transient
  RationalMatrix r;  // transient -> absorbing
};

/// Splits a canonical block-form transition matrix with `transient` leading
/// states. Throws MalformedBlockStructure unless the trailing rows are
/// [0 | I].
Blocks partition(const RationalMatrix& t, std::size_t transient);

/// N = (I - Q)^-1.
RationalMatrix fundamental_matrix(const RationalMatrix& q);

/// N R, computed as the solution X of (I - Q) X = R.
RationalMatrix absorption_matrix(const RationalMatrix& q, const RationalMatrix& r);

/// Row of N R for the start vertex, indexed by winning vertex.
std::vector<Rational> win_probabilities(const Graph& g);

/// Nested arrays of "num/den" strings.
void write_matrix_json(std::ostream& out, const RationalMatrix& m);

}  // namespace buckfire::markov
