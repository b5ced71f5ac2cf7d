#include "buckfire/root_two.hpp"

#include <mpfr.h>

#include "buckfire/error.hpp"

namespace buckfire {

RootTwo::RootTwo(BigInt a, BigInt b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ == 0) throw Error(ErrorCode::SingularMatrix, "zero denominator in Z[sqrt2] value");
  normalize();
}

void RootTwo::normalize() {
  if (d_ < 0) {
    a_ = -a_;
    b_ = -b_;
    d_ = -d_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational RootTwo::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorCode::DimensionMismatch, to_string() + " is irrational");
  }
  return ratio(a_, d_);
}

Rational RootTwo::norm() const {
  return ratio(a_ * a_ - 2 * b_ * b_, d_ * d_);
}

RootTwo RootTwo::pow(unsigned exponent) const {
  RootTwo result(1);
  RootTwo base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

double RootTwo::to_double(unsigned bits) const {
  mpfr_t root, num, tmp;
  mpfr_inits2(bits, root, num, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt_ui(root, 2, MPFR_RNDN);
  mpfr_mul_z(num, root, b_.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(tmp, a_.get_mpz_t(), MPFR_RNDN);
  mpfr_add(num, num, tmp, MPFR_RNDN);
  mpfr_div_z(num, num, d_.get_mpz_t(), MPFR_RNDN);
  const double result = mpfr_get_d(num, MPFR_RNDN);
  mpfr_clears(root, num, tmp, static_cast<mpfr_ptr>(nullptr));
  return result;
}

std::string RootTwo::to_string() const {
  std::string s = "(" + a_.get_str();
  s += (b_ < 0) ? " - " : " + ";
  s += BigInt(abs(b_)).get_str() + "*sqrt2)";
  if (d_ != 1) s += "/" + d_.get_str();
  return s;
}

RootTwo& RootTwo::operator+=(const RootTwo& o) {
  a_ = a_ * o.d_ + o.a_ * d_;
  b_ = b_ * o.d_ + o.b_ * d_;
  d_ *= o.d_;
  normalize();
  return *this;
}

RootTwo& RootTwo::operator-=(const RootTwo& o) { return *this += -o; }

RootTwo& RootTwo::operator*=(const RootTwo& o) {
  BigInt a = a_ * o.a_ + 2 * b_ * o.b_;
  BigInt b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ *= o.d_;
  normalize();
  return *this;
}

RootTwo& RootTwo::operator/=(const RootTwo& o) {
  // x / y = x * conj(y) * d_y^2 / (a_y^2 - 2 b_y^2) / d_y, done in integers.
  const BigInt n = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  if (n == 0) throw Error(ErrorCode::SingularMatrix, "division by zero in Z[sqrt2]");
  *this *= RootTwo(o.a_, -o.b_, 1);
  a_ *= o.d_;
  b_ *= o.d_;
  d_ *= n;
  normalize();
  return *this;
}

}  // namespace buckfire
