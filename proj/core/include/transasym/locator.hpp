// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/transseries.hpp"

#include <vector>

namespace transasym {

enum class RootKind { pole, zero };
enum class PredictionOrder { leading, log_corrected, full };

std::string root_kind_name(RootKind kind);
std::string prediction_order_name(PredictionOrder order);

/// Constants of the inversion series for one root family.
/// Poles: tau0 = -1, tau1 = -i/2 + 1/(8mu) - 2mu, tau2 = 8mu^2 - 1/(128mu^2)
/// + 9imu/2, c = [4mu, -2mu*alpha, 0, alpha^2*mu, tau1].
/// Zeros: tau1 = i/2.
struct LocatorSeries {
  RootKind kind;
  BigReal mu;
  BigComplex alpha;
  BigComplex tau0;
  BigComplex tau1;
  BigComplex tau2;
  std::vector<BigComplex> c;
};

LocatorSeries pole_series(const BigReal& mu);
LocatorSeries zero_series(const BigReal& mu);

struct Prediction {
  RootKind kind;
  long M = 0;
  int quadrant = 1;  // 1 for M > 0, 2 for M < 0
  BigComplex xi;
  BigComplex xi_squared;
  PredictionOrder order = PredictionOrder::full;
};

/// Pole predictions for each M in [m_min, m_max], M != 0. r_p = log(sigma) +
/// (2M+1) pi i; full order inverts
///   xi^2 = 4 mu r_p - 2 mu alpha log(4 mu r_p)
///        + (alpha^2 mu log(4 mu r_p) + tau1) / r_p
/// and leading order keeps xi^2 = 8 mu M pi i. xi is placed in the upper
/// half-plane.
std::vector<Prediction> predict_poles(const BigReal& mu,
                                      const LateOrderData& data, long m_min,
                                      long m_max, PredictionOrder order);

/// Zero predictions: r_z = log(2 sigma) + (2M - 1/2) pi i, which absorbs the
/// log(tau1) = pi i/2 - log 2 constant, and
///   xi^2 = 4 mu r_z - 2 (alpha-2) mu log(4 mu r_z).
/// Only leading and full orders are meaningful here.
std::vector<Prediction> predict_zeros(const BigReal& mu,
                                      const LateOrderData& data, long m_min,
                                      long m_max,
                                      PredictionOrder order = PredictionOrder::full);

/// Self-consistency diagnostic: |tau(xi) - (tau0 + tau1/xi^2 + tau2/xi^4)|
/// for poles, |tau(xi) - tau1/xi^2| for zeros. Shrinks along the family.
BigReal residual_at_prediction(const Prediction& pred,
                               const TransseriesParams& params);

}  // namespace transasym
