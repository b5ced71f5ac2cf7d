#pragma once

// Reference implementations used only to check the library. They share no
// code paths with src/.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "buckfire/graph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<std::size_t>>;

inline Adjacency adjacency_of(const buckfire::Graph& g) {
  Adjacency adj(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

struct NaiveAbacusResult {
  std::vector<std::uint64_t> terminals;
  std::uint64_t chips_added = 0;
};

/// Straight transcription of the add-and-fire loop: linear scans, machine
/// integers, full-state comparison every cycle.
inline NaiveAbacusResult naive_abacus(const Adjacency& adj, std::size_t start) {
  const std::size_t n = adj.size();
  std::vector<std::uint64_t> out(n), critical(n), chips(n), term(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = adj[v].size() + 1;
    critical[v] = out[v] - 1;
  }
  chips = critical;
  std::uint64_t added = 0;
  do {
    ++chips[start];
    ++added;
    for (bool fired = true; fired;) {
      fired = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (chips[v] >= out[v]) {
          chips[v] -= out[v];
          ++term[v];
          for (auto u : adj[v]) ++chips[u];
          fired = true;
          break;
        }
      }
    }
  } while (chips != critical);
  return {term, added};
}

/// Leibniz-formula determinant; fine for n <= 7.
inline mpq_class leibniz_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Win probabilities from the start vertex by Cramer's rule on the
/// first-step equations  p_x(v) = (1[v==x] + sum_{u~v} p_x(u)) / (deg v + 1).
inline std::vector<mpq_class> cramer_win_probabilities(const buckfire::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    a[v][v] = static_cast<unsigned long>(g.degree(v) + 1);
    for (auto u : g.neighbors(v)) a[v][u] = -1;
  }
  const mpq_class det = leibniz_det(a);
  std::vector<mpq_class> p(n);
  for (std::size_t x = 0; x < n; ++x) {
    // rhs = e_x; replace column `start` with it to get p_x(start).
    auto ax = a;
    for (std::size_t v = 0; v < n; ++v) ax[v][g.start()] = (v == x) ? 1 : 0;
    p[x] = leibniz_det(ax) / det;
  }
  return p;
}

}  // namespace oracle
