// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/laurent.hpp"

#include <string>
#include <variant>
#include <vector>

namespace transasym {

/// Truncation point N with the fractional offset omega that makes
/// N = |chi| + omega integer at the evaluation point.
struct TruncationSpec {
  long n = 1;
  BigReal omega;
};

/// The algebraic series terms V_0..V_n of the far-field expansion, one
/// Laurent polynomial per order. Construction runs the defining recurrence
///   z*V_n' + V_n = -2*mu*V_{n-1}'' + 2*sum_j V_j'*V_{n-1-j}
/// with the o(1/|z|) decay condition killing the homogeneous 1/z mode.
class OuterSeriesTable {
 public:
  OuterSeriesTable(BigReal mu, std::vector<LaurentSeries> terms)
      : mu_(std::move(mu)), terms_(std::move(terms)) {}

  const BigReal& mu() const { return mu_; }
  long n_max() const { return static_cast<long>(terms_.size()) - 1; }
  const LaurentSeries& term(long n) const { return terms_.at(n); }
  const std::vector<LaurentSeries>& terms() const { return terms_; }

  /// Residual of the recurrence at order n, as a Laurent polynomial; every
  /// coefficient should vanish to working precision.
  LaurentSeries recurrence_residual(long n) const;

 private:
  BigReal mu_;
  std::vector<LaurentSeries> terms_;
};

OuterSeriesTable build_outer_series(const BigReal& mu, long n_max);

/// Far-field coefficients a_m^(0) of xi^(1-2m), m = 1..m_max. Result[i] is
/// a_{i+1}^(0).
std::vector<BigComplex> a0_coefficients(const BigReal& mu, long m_max);

/// Same, read off an already-built table (collapses epsilon = 1, z = xi).
std::vector<BigComplex> a0_coefficients(const OuterSeriesTable& table, long m_max);

/// Partial sum of the divergent series at z = xi with epsilon absorbed.
/// spec picks the term count; "optimal" truncates after the smallest term,
/// N = floor(|xi^2/4mu|) + 1 capped at the table size.
struct OptimalTruncation {};
BigComplex evaluate_truncated(const OuterSeriesTable& table, const BigComplex& xi,
                              const std::variant<TruncationSpec, OptimalTruncation>& spec);

/// The N that "optimal" resolves to at this point.
long optimal_truncation_index(const OuterSeriesTable& table, const BigComplex& xi);

/// Index of the smallest-magnitude term of the series at xi (divergence
/// signature diagnostic).
long smallest_term_index(const OuterSeriesTable& table, const BigComplex& xi);

}  // namespace transasym
