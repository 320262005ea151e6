// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/lateorder.hpp"

#include <vector>

namespace transasym {

/// Two-index coefficient table a[m][n]: the coefficient of tau^n xi^(1-2m)
/// in the double expansion of U. Normalization a[0][0] = 0, a[0][1] = 1.
class CoeffTable {
 public:
  CoeffTable(BigReal mu, std::vector<std::vector<BigComplex>> a)
      : mu_(std::move(mu)), a_(std::move(a)) {}

  const BigReal& mu() const { return mu_; }
  long m_max() const { return static_cast<long>(a_.size()) - 1; }
  long n_max() const { return a_.empty() ? -1 : static_cast<long>(a_[0].size()) - 1; }
  const BigComplex& at(long m, long n) const { return a_.at(m).at(n); }

 private:
  BigReal mu_;
  std::vector<std::vector<BigComplex>> a_;
};

CoeffTable build_coeff_table(const BigReal& mu, long m_max, long n_max);

/// sigma = 2 pi i Lambda where the exponential is active, 0 otherwise;
/// alpha = 1 + i/(2 mu).
struct TransseriesParams {
  BigReal mu;
  BigComplex sigma;
  BigComplex alpha;

  static TransseriesParams active(const LateOrderData& data);
  static TransseriesParams inactive(const BigReal& mu);
};

/// tau = sigma xi^(-alpha) e^(-xi^2/4mu), principal power.
BigComplex tau(const BigComplex& xi, const TransseriesParams& params);

/// Rational function N(tau)/(1+tau)^(m+1); the closed form of the
/// transasymptotic sum A_m, m <= 2.
struct TransasymptoticFn {
  long m = 0;
  std::vector<BigComplex> num;  // numerator coefficients, ascending in tau
  long den_power = 1;           // denominator (1+tau)^den_power

  BigComplex value(const BigComplex& tau_val) const;
  BigComplex derivative(const BigComplex& tau_val) const;
  /// Taylor coefficients about tau = 0, indices 0..n_max.
  std::vector<BigComplex> taylor(long n_max) const;
};

TransasymptoticFn A_fn(long m, const BigReal& mu);

/// A_m(tau_val); throws at the pole tau = -1.
BigComplex A_closed(long m, const BigComplex& tau_val, const BigReal& mu);

/// Thrown when a resummed evaluation lands on the tau = -1 pole locus; the
/// index estimate names the nearest pole family member.
struct TauPoleError : std::runtime_error {
  TauPoleError(const std::string& what, long m_index)
      : std::runtime_error(what), m_index_estimate(m_index) {}
  long m_index_estimate;
};

/// Sum_{m=0}^{m_terms-1} A_m(tau(xi)) xi^(1-2m), m_terms in 1..3.
BigComplex evaluate_resummed(const BigComplex& xi,
                             const TransseriesParams& params, long m_terms);

/// Residual of the defining ODE chain
///   A_m - tau A_m' - 2 mu alpha tau A_{m-1}' - 2 mu (2m-3) A_{m-1}
///     - sum_l A_l A_{m-l} + (i/2) delta_{m1} = 0
/// at each sample, for m = 0..2. Derivatives are analytic.
struct AOdeReport {
  std::vector<BigReal> residuals;  // samples x {m=0,1,2}, flattened
  BigReal max_residual;
  bool pass = false;
};

AOdeReport verify_A_odes(const BigReal& mu,
                         const std::vector<BigComplex>& sample_taus,
                         const BigReal& tolerance);

/// Direct double sum over the table, for cross-checks at small |tau|.
BigComplex evaluate_double_sum(const BigComplex& xi,
                               const TransseriesParams& params,
                               const CoeffTable& table);

}  // namespace transasym
