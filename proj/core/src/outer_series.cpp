// SPDX-License-Identifier: Apache-2.0
#include "transasym/outer_series.hpp"

#include <stdexcept>

namespace transasym {

namespace {

// Right-hand side of the order-n recurrence, n >= 1.
LaurentSeries recurrence_rhs(const BigReal& mu,
                             const std::vector<LaurentSeries>& v, long n) {
  long prec = mu.prec_bits();
  LaurentSeries rhs =
      v[n - 1].derivative().derivative().scaled(
          BigComplex(BigReal(-2L, prec) * mu, BigReal(0L, prec)));
  LaurentSeries conv;
  for (long j = 0; j <= n - 1; ++j) {
    conv = conv + v[j].derivative() * v[n - 1 - j];
  }
  return rhs + conv.scaled(BigComplex(2, 0, prec));
}

}  // namespace

OuterSeriesTable build_outer_series(const BigReal& mu, long n_max) {
  if (!(mu > BigReal(0L, mu.prec_bits()))) {
    throw std::invalid_argument("build_outer_series: mu must be positive");
  }
  if (n_max < 1) throw std::invalid_argument("build_outer_series: n_max must be >= 1");
  long prec = mu.prec_bits();

  std::vector<LaurentSeries> v;
  v.reserve(n_max + 1);
  LaurentSeries v0;
  v0.set(-1, BigComplex(BigReal(0L, prec), BigReal("-0.5", prec)));
  v.push_back(std::move(v0));

  for (long n = 1; n <= n_max; ++n) {
    LaurentSeries rhs = recurrence_rhs(mu, v, n);
    LaurentSeries vn;
    for (const auto& [k, c] : rhs.coeffs()) {
      if (k == -1) {
        // The z^-1 mode is homogeneous; a source here would force a log term.
        // Structurally the recurrence never produces one.
        throw std::logic_error("build_outer_series: unexpected z^-1 source");
      }
      vn.set(k, c / BigReal(k + 1, prec));
    }
    v.push_back(std::move(vn));
  }
  return OuterSeriesTable(mu, std::move(v));
}

LaurentSeries OuterSeriesTable::recurrence_residual(long n) const {
  if (n < 1 || n > n_max()) {
    throw std::invalid_argument("recurrence_residual: n out of range");
  }
  long prec = mu_.prec_bits();
  LaurentSeries lhs;
  {
    // z*V_n' + V_n
    LaurentSeries d = terms_[n].derivative();
    for (const auto& [k, c] : d.coeffs()) lhs.add(k + 1, c);
    lhs = lhs + terms_[n];
  }
  LaurentSeries rhs =
      terms_[n - 1].derivative().derivative().scaled(
          BigComplex(BigReal(-2L, prec) * mu_, BigReal(0L, prec)));
  LaurentSeries conv;
  for (long j = 0; j <= n - 1; ++j) {
    conv = conv + terms_[j].derivative() * terms_[n - 1 - j];
  }
  rhs = rhs + conv.scaled(BigComplex(2, 0, prec));
  return lhs - rhs;
}

std::vector<BigComplex> a0_coefficients(const OuterSeriesTable& table, long m_max) {
  if (m_max < 1) throw std::invalid_argument("a0_coefficients: m_max must be >= 1");
  long prec = table.mu().prec_bits();
  // Coefficient of xi^(1-2m) can only come from orders n with
  // m-1 <= n <= 2m-2, so the table must extend to n = 2*m_max - 2.
  if (table.n_max() < 2 * m_max - 2) {
    throw std::invalid_argument("a0_coefficients: table too short for m_max");
  }
  std::vector<BigComplex> out;
  out.reserve(m_max);
  for (long m = 1; m <= m_max; ++m) {
    BigComplex a(prec);
    for (long n = std::max(0L, m - 1); n <= 2 * m - 2; ++n) {
      a += table.term(n).get(1 - 2 * m, prec);
    }
    out.push_back(a);
  }
  return out;
}

std::vector<BigComplex> a0_coefficients(const BigReal& mu, long m_max) {
  if (m_max < 1) throw std::invalid_argument("a0_coefficients: m_max must be >= 1");
  return a0_coefficients(build_outer_series(mu, std::max(1L, 2 * m_max - 2)), m_max);
}

long optimal_truncation_index(const OuterSeriesTable& table, const BigComplex& xi) {
  if (xi.is_zero()) throw std::domain_error("optimal_truncation_index: xi = 0");
  BigReal chi_mag = norm(xi) / (BigReal(4L, table.mu().prec_bits()) * table.mu());
  long n = floor(chi_mag).to_long() + 1;
  return std::min(n, table.n_max() + 1);
}

BigComplex evaluate_truncated(const OuterSeriesTable& table, const BigComplex& xi,
                              const std::variant<TruncationSpec, OptimalTruncation>& spec) {
  if (xi.is_zero()) throw std::domain_error("evaluate_truncated: xi = 0");
  long n_terms;
  if (std::holds_alternative<OptimalTruncation>(spec)) {
    n_terms = optimal_truncation_index(table, xi);
  } else {
    n_terms = std::get<TruncationSpec>(spec).n;
  }
  if (n_terms > table.n_max() + 1) {
    throw std::invalid_argument("evaluate_truncated: table shorter than N");
  }
  BigComplex acc(xi.prec_bits());
  for (long n = 0; n < n_terms; ++n) acc += table.term(n).evaluate(xi);
  return acc;
}

long smallest_term_index(const OuterSeriesTable& table, const BigComplex& xi) {
  if (xi.is_zero()) throw std::domain_error("smallest_term_index: xi = 0");
  long best = 0;
  BigReal best_mag = abs(table.term(0).evaluate(xi));
  for (long n = 1; n <= table.n_max(); ++n) {
    BigReal mag = abs(table.term(n).evaluate(xi));
    if (mag < best_mag) {
      best_mag = mag;
      best = n;
    }
  }
  return best;
}

}  // namespace transasym
