#include "buckfire/closedform.hpp"

#include <mpfr.h>

#include <string>

#include "buckfire/error.hpp"

namespace buckfire::closedform {

namespace {

void require_branching(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidTreeSpec, "branching factor must be >= 2");
}

void require_levels(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidTreeSpec, "level count must be >= 0");
}

const RootTwo kTwoPlus(2, 1);
const RootTwo kTwoMinus(2, -1);

}  // namespace

SequenceTable sequence_table(int k, int n_max) {
  require_branching(k);
  require_levels(n_max);
  SequenceTable table{k, {}};
  table.values.reserve(static_cast<std::size_t>(n_max) + 1);
  table.values.emplace_back(1);
  if (n_max >= 1) table.values.emplace_back(2);
  for (int n = 2; n <= n_max; ++n) {
    const auto& prev = table.values[static_cast<std::size_t>(n - 1)];
    const auto& prev2 = table.values[static_cast<std::size_t>(n - 2)];
    table.values.push_back((k + 2) * prev - k * prev2);
  }
  return table;
}

BigInt a_kary(int k, int n) { return sequence_table(k, n).values.back(); }

BigInt a_binary(int n) { return a_kary(2, n); }

RootTwo a_binary_closed(int n) {
  require_levels(n);
  const auto e = static_cast<unsigned>(n);
  return (kTwoMinus.pow(e) + kTwoPlus.pow(e)) / RootTwo(2);
}

BigInt t_kary(int k, int n) {
  const auto a = sequence_table(k, n).values;
  BigInt total = 0;
  BigInt width = 1;
  for (int j = 0; j <= n; ++j) {
    total += width * a[static_cast<std::size_t>(n - j)];
    width *= k;
  }
  return total;
}

BigInt t_binary(int n) { return t_kary(2, n); }

RootTwo t_binary_closed(int n) {
  require_levels(n);
  const auto e = static_cast<unsigned>(n) + 1;
  return (kTwoPlus.pow(e) - kTwoMinus.pow(e)) / (RootTwo(2) * RootTwo::sqrt2());
}

Rational p_kary(int k, int n, int level) {
  require_branching(k);
  require_levels(n);
  if (level < 0 || level > n) {
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(level) +
                                                " outside [0, " + std::to_string(n) + "]");
  }
  const auto a = sequence_table(k, n).values;
  return ratio(a[static_cast<std::size_t>(n - level)], t_kary(k, n));
}

Rational p_binary(int n, int level) { return p_kary(2, n, level); }

RootTwo limit_p_binary(int level) {
  if (level < 0) throw Error(ErrorCode::LevelOutOfRange, "level must be >= 0");
  return RootTwo::sqrt2() / kTwoPlus.pow(static_cast<unsigned>(level) + 1);
}

double distance_to(const Rational& p, const RootTwo& limit) {
  constexpr mpfr_prec_t bits = 512;
  mpfr_t x, y, root;
  mpfr_inits2(bits, x, y, root, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(x, p.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt_ui(root, 2, MPFR_RNDN);
  mpfr_mul_z(y, root, limit.b().get_mpz_t(), MPFR_RNDN);
  mpfr_add_z(y, y, limit.a().get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(y, y, limit.d().get_mpz_t(), MPFR_RNDN);
  mpfr_sub(x, x, y, MPFR_RNDN);
  mpfr_abs(x, x, MPFR_RNDN);
  const double result = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clears(x, y, root, static_cast<mpfr_ptr>(nullptr));
  return result;
}

std::vector<ConvergenceRow> convergence_report(int n_max, int level) {
  if (level < 0 || level > n_max) {
    throw Error(ErrorCode::LevelOutOfRange, "level must lie in [0, n_max]");
  }
  const RootTwo limit = limit_p_binary(level);
  std::vector<ConvergenceRow> rows;
  for (int n = level; n <= n_max; ++n) {
    const Rational p = p_binary(n, level);
    rows.push_back({n, to_double(p), distance_to(p, limit)});
  }
  return rows;
}

}  // namespace buckfire::closedform
