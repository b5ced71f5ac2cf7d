#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace buckfire {

/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Always "num/den", integers included ("1/1", "0/1").
std::string to_fraction_string(const Rational& q);
/// Inverse of to_fraction_string; a bare integer is also accepted.
Rational parse_fraction(const std::string& text);

/// Round-to-nearest double.
double to_double(const Rational& q);
/// %.17g rendering of a double.
std::string format_double(double x);

Rational sum(const std::vector<Rational>& values);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Rational> row(std::size_t r) const;
  Rational row_sum(std::size_t r) const;

  /// Rows [r0, r0+nr) by columns [c0, c0+nc).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  /// result(i, j) = this(perm[i], perm[j]).
  RationalMatrix permuted(const std::vector<std::size_t>& perm) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Solves A X = B by exact Gauss-Jordan elimination. Pivot rows are chosen by
/// the first nonzero entry at or below the diagonal; throws SingularMatrix
/// when a column has none.
RationalMatrix solve(RationalMatrix a, RationalMatrix b);

/// Greedy minimum-degree elimination order for the nonzero pattern of
/// A + A^T. Leaves of a tree come out first, so trees eliminate without fill.
std::vector<std::size_t> minimum_degree_order(const RationalMatrix& a);

/// solve() on the system symmetrically permuted by minimum_degree_order.
/// Same exact result, far less fill on sparse boards.
RationalMatrix solve_reordered(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace buckfire
