// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/bigcomplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace transasym {

/// Late-order data for one mu: the Stokes prefactor constant Lambda and the
/// index gamma = 1/2 - i/(4 mu).
struct LateOrderData {
  BigReal mu;
  BigComplex lambda;
  BigComplex gamma;
  long n_used = 0;
  long converged_digits = 0;
};

/// Coefficients of the inner-region series, V^_0 = -i/(4 sqrt(mu)).
struct InnerCoeffs {
  BigReal mu;
  std::vector<BigComplex> vhat;
};

enum class SectorLabel {
  no_exponential,
  small_exponential,
  large_exponential,
  stokes_curve,
  anti_stokes_curve,
};

/// Sector of the Stokes geometry. ids: 1 = (-3pi/4,-pi/4), 2 = (-pi/4,pi/4),
/// 3 = (pi/4,3pi/4), 4 = the sector containing the negative real axis.
struct SectorClass {
  SectorLabel label;
  int sector_id;
};

std::string sector_label_name(SectorLabel label);

/// chi = xi^2 / (4 mu).
BigComplex singulant(const BigComplex& xi, const BigReal& mu);

/// G = Lambda * xi^(-i/2mu), principal power.
BigComplex prefactor(const BigComplex& xi, const LateOrderData& data);

/// Builds the inner-coefficient recurrence up to n_max.
InnerCoeffs build_inner_coeffs(const BigReal& mu, long n_max);

/// Lambda_n = vhat_n * (4mu)^(i/4mu) / Gamma(n + 1/2 - i/4mu) at one n.
BigComplex lambda_ratio(const InnerCoeffs& coeffs, long n);

/// Runs the recurrence to n_max and estimates Lambda with a Cauchy-style
/// convergence check between n_max/2 and n_max. Throws if the drift between
/// successive decades is not shrinking (carries the drift history).
LateOrderData compute_lambda(const BigReal& mu, long n_max);

struct LambdaConvergenceError : std::runtime_error {
  explicit LambdaConvergenceError(const std::string& what,
                                  std::vector<double> drift)
      : std::runtime_error(what), drift_history(std::move(drift)) {}
  std::vector<double> drift_history;
};

SectorClass classify_sector(const BigComplex& xi, const BigReal& mu);

/// 2 pi i Lambda xi^(-i/2mu) e^(-xi^2/4mu): the exponential switched on
/// across the positive real axis.
BigComplex u_exp(const BigComplex& xi, const LateOrderData& data);

/// Error-function Stokes multiplier in polar singulant variables
/// chi = r e^(i theta): 0 before the curve, 1/2 on it, 1 after.
BigReal stokes_multiplier(const BigReal& theta, const BigReal& r);

}  // namespace transasym
