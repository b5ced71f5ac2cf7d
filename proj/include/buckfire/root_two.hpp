#pragma once

#include <string>

#include "buckfire/rational.hpp"

namespace buckfire {

/// Exact element (a + b*sqrt2) / d of Q(sqrt2), kept with d > 0 and
/// gcd(a, b, d) = 1 so equal values have equal components.
class RootTwo {
 public:
  RootTwo() : a_(0), b_(0), d_(1) {}
  RootTwo(long a) : a_(a), b_(0), d_(1) {}  // NOLINT: implicit integer lift
  explicit RootTwo(BigInt a, BigInt b = 0, BigInt d = 1);

  static RootTwo sqrt2() { return RootTwo(0, 1); }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& d() const noexcept { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Throws DimensionMismatch when the sqrt2 part is nonzero.
  Rational rational_value() const;

  /// a - b*sqrt2 over d.
  RootTwo conjugate() const { return RootTwo(a_, -b_, d_); }
  /// x * conj(x), always rational.
  Rational norm() const;

  RootTwo pow(unsigned exponent) const;

  /// Correct to `bits` of precision before the final round to double.
  double to_double(unsigned bits = 256) const;
  std::string to_string() const;

  RootTwo& operator+=(const RootTwo& o);
  RootTwo& operator-=(const RootTwo& o);
  RootTwo& operator*=(const RootTwo& o);
  /// Throws SingularMatrix on division by zero.
  RootTwo& operator/=(const RootTwo& o);

  friend RootTwo operator+(RootTwo x, const RootTwo& y) { return x += y; }
  friend RootTwo operator-(RootTwo x, const RootTwo& y) { return x -= y; }
  friend RootTwo operator*(RootTwo x, const RootTwo& y) { return x *= y; }
  friend RootTwo operator/(RootTwo x, const RootTwo& y) { return x /= y; }
  friend RootTwo operator-(const RootTwo& x) { return RootTwo(-x.a_, -x.b_, x.d_); }
  friend bool operator==(const RootTwo& x, const RootTwo& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  void normalize();

  BigInt a_;
  BigInt b_;
  BigInt d_;
};

}  // namespace buckfire
