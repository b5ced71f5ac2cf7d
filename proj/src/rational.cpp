#include "buckfire/rational.hpp"

#include <mpfr.h>

#include <cstdio>
#include <limits>

#include "buckfire/error.hpp"

namespace buckfire {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::Parse, "not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  mpfr_t x;
  mpfr_init2(x, 53);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  const double result = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return result;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Rational RationalMatrix::row_sum(std::size_t r) const {
  Rational total = 0;
  for (std::size_t c = 0; c < cols_; ++c) total += (*this)(r, c);
  return total;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block exceeds matrix bounds");
  }
  RationalMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

RationalMatrix RationalMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (rows_ != cols_ || perm.size() != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "permutation needs a square matrix of equal size");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
  }
  return out;
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  }
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RationalMatrix solve(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, "solve needs square A and matching B rows");
  }
  const std::size_t m = b.cols();
  auto swap_rows = [](RationalMatrix& x, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(r1, c), x(r2, c));
  };

  Rational factor;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) {
      throw Error(ErrorCode::SingularMatrix,
                  "no nonzero pivot in column " + std::to_string(col));
    }
    if (pivot != col) {
      swap_rows(a, pivot, col);
      swap_rows(b, pivot, col);
    }

    const Rational inv = 1 / a(col, col);
    for (std::size_t c = col; c < n; ++c) {
      if (sgn(a(col, c)) != 0) a(col, c) *= inv;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (sgn(b(col, c)) != 0) b(col, c) *= inv;
    }

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      factor = a(r, col);
      for (std::size_t c = col; c < n; ++c) {
        if (sgn(a(col, c)) != 0) a(r, c) -= factor * a(col, c);
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (sgn(b(col, c)) != 0) b(r, c) -= factor * b(col, c);
      }
    }
  }
  return b;
}

std::vector<std::size_t> minimum_degree_order(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (sgn(a(i, j)) != 0 || sgn(a(j, i)) != 0) && !linked[i][j]) {
        linked[i][j] = 1;
        ++degree[i];
      }
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> nbrs;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && (best == n || degree[v] < degree[best])) best = v;
    }
    order.push_back(best);
    alive[best] = 0;
    nbrs.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (alive[u] && linked[best][u]) {
        nbrs.push_back(u);
        --degree[u];
      }
    }
    for (std::size_t x : nbrs) {
      for (std::size_t y : nbrs) {
        if (x != y && !linked[x][y]) {
          linked[x][y] = 1;
          ++degree[x];
        }
      }
    }
  }
  return order;
}

RationalMatrix solve_reordered(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, "solve needs square A and matching B rows");
  }
  const auto order = minimum_degree_order(a);
  RationalMatrix pb(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) pb(i, c) = b(order[i], c);
  }
  const RationalMatrix px = solve(a.permuted(order), std::move(pb));
  RationalMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(order[i], c) = px(i, c);
  }
  return x;
}

}  // namespace buckfire
