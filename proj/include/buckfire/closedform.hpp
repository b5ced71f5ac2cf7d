#pragma once

#include <vector>

#include "buckfire/rational.hpp"
#include "buckfire/root_two.hpp"

namespace buckfire::closedform {

/// Root firing counts a(k, 0..n) of the complete k-ary tree abacus:
/// a(k,0) = 1, a(k,1) = 2, a(k,n) = (k+2) a(k,n-1) - k a(k,n-2).
struct SequenceTable {
  int k = 2;
  std::vector<BigInt> values;
};

SequenceTable sequence_table(int k, int n_max);

BigInt a_binary(int n);
BigInt a_kary(int k, int n);

/// ((2 - sqrt2)^n + (2 + sqrt2)^n) / 2, evaluated in Z[sqrt2].
RootTwo a_binary_closed(int n);

/// Total terminal chips: sum_j k^j a(k, n-j).
BigInt t_kary(int k, int n);
BigInt t_binary(int n);

/// ((2 + sqrt2)^(n+1) - (2 - sqrt2)^(n+1)) / (2 sqrt2).
RootTwo t_binary_closed(int n);

/// Probability that one particular vertex at `level` wins. Throws
/// LevelOutOfRange unless 0 <= level <= n.
Rational p_kary(int k, int n, int level);
Rational p_binary(int n, int level);

/// sqrt2 / (2 + sqrt2)^(level+1), the n -> infinity limit of p_binary(n, level).
RootTwo limit_p_binary(int level);

/// |p - limit| evaluated at high precision, then rounded to double.
double distance_to(const Rational& p, const RootTwo& limit);

struct ConvergenceRow {
  int n = 0;
  double p = 0.0;
  double error = 0.0;
};

/// Rows n = level .. n_max for the binary tree.
std::vector<ConvergenceRow> convergence_report(int n_max, int level);

}  // namespace buckfire::closedform
