// SPDX-License-Identifier: Apache-2.0
#include "transasym/locator.hpp"

#include <stdexcept>

namespace transasym {

std::string root_kind_name(RootKind kind) {
  return kind == RootKind::pole ? "pole" : "zero";
}

std::string prediction_order_name(PredictionOrder order) {
  switch (order) {
    case PredictionOrder::leading: return "leading";
    case PredictionOrder::log_corrected: return "log_corrected";
    case PredictionOrder::full: return "full";
  }
  return "unknown";
}

LocatorSeries pole_series(const BigReal& mu) {
  long prec = mu.prec_bits();
  BigReal one(1L, prec), two(2L, prec), four(4L, prec), eight(8L, prec);
  LocatorSeries s;
  s.kind = RootKind::pole;
  s.mu = mu;
  s.alpha = BigComplex(one, one / (two * mu));
  s.tau0 = BigComplex(-1, 0, prec);
  s.tau1 = BigComplex(one / (eight * mu) - two * mu, BigReal(-0.5, prec));
  s.tau2 = BigComplex(eight * mu * mu - one / (BigReal(128L, prec) * mu * mu),
                      BigReal(4.5, prec) * mu);
  BigComplex alpha2 = s.alpha * s.alpha;
  s.c = {to_complex(four * mu), to_complex(-two * mu) * s.alpha,
         BigComplex(prec), alpha2 * to_complex(mu), s.tau1};
  return s;
}

LocatorSeries zero_series(const BigReal& mu) {
  long prec = mu.prec_bits();
  BigReal one(1L, prec), two(2L, prec);
  LocatorSeries s;
  s.kind = RootKind::zero;
  s.mu = mu;
  s.alpha = BigComplex(one, one / (two * mu));
  s.tau0 = BigComplex(prec);
  s.tau1 = BigComplex(BigReal(0L, prec), BigReal(0.5, prec));
  s.tau2 = BigComplex(prec);
  return s;
}

namespace {

BigComplex upper_half_sqrt(const BigComplex& z2) {
  BigComplex xi = csqrt(z2);
  if (xi.im < BigReal(0L, xi.prec_bits())) return -xi;
  return xi;
}

Prediction make_prediction(RootKind kind, long M, PredictionOrder order,
                           BigComplex xi2) {
  Prediction p;
  p.kind = kind;
  p.M = M;
  p.quadrant = M > 0 ? 1 : 2;
  p.order = order;
  p.xi_squared = xi2;
  p.xi = upper_half_sqrt(xi2);
  return p;
}

}  // namespace

std::vector<Prediction> predict_poles(const BigReal& mu,
                                      const LateOrderData& data, long m_min,
                                      long m_max, PredictionOrder order) {
  if (m_min > m_max) throw std::invalid_argument("predict_poles: empty range");
  long prec = mu.prec_bits();
  LocatorSeries s = pole_series(mu);
  BigComplex sigma = TransseriesParams::active(data).sigma;
  BigComplex log_sigma = clog(sigma);
  BigReal pi_v = pi(prec);
  BigReal four_mu = BigReal(4L, prec) * mu;

  std::vector<Prediction> out;
  for (long M = m_min; M <= m_max; ++M) {
    if (M == 0) throw std::invalid_argument("predict_poles: M = 0 not asymptotic");
    if (order == PredictionOrder::leading) {
      out.push_back(make_prediction(
          RootKind::pole, M, order,
          BigComplex(BigReal(0L, prec), BigReal(8L, prec) * mu * pi_v * M)));
      continue;
    }
    BigComplex r = log_sigma +
                   BigComplex(BigReal(0L, prec), BigReal(2 * M + 1, prec) * pi_v);
    BigComplex log_4mur = clog(to_complex(four_mu) * r);
    BigComplex xi2 = to_complex(four_mu) * r -
                     to_complex(BigReal(2L, prec) * mu) * s.alpha * log_4mur;
    if (order == PredictionOrder::full) {
      xi2 += (s.alpha * s.alpha * to_complex(mu) * log_4mur + s.tau1) / r;
    }
    out.push_back(make_prediction(RootKind::pole, M, order, xi2));
  }
  return out;
}

std::vector<Prediction> predict_zeros(const BigReal& mu,
                                      const LateOrderData& data, long m_min,
                                      long m_max, PredictionOrder order) {
  if (m_min > m_max) throw std::invalid_argument("predict_zeros: empty range");
  long prec = mu.prec_bits();
  LocatorSeries s = zero_series(mu);
  BigComplex sigma = TransseriesParams::active(data).sigma;
  BigReal pi_v = pi(prec);
  BigReal four_mu = BigReal(4L, prec) * mu;
  BigComplex log_2sigma = clog(BigComplex(2, 0, prec) * sigma);
  BigComplex two(2, 0, prec);

  std::vector<Prediction> out;
  for (long M = m_min; M <= m_max; ++M) {
    if (M == 0) throw std::invalid_argument("predict_zeros: M = 0 not asymptotic");
    if (order == PredictionOrder::leading) {
      out.push_back(make_prediction(
          RootKind::zero, M, order,
          BigComplex(BigReal(0L, prec), BigReal(8L, prec) * mu * pi_v * M)));
      continue;
    }
    BigComplex r = log_2sigma +
                   BigComplex(BigReal(0L, prec),
                              (BigReal(2 * M, prec) - BigReal(0.5, prec)) * pi_v);
    // Direct inversion of log tau = log(tau1 / xi^2): the log(i/2) constant
    // is absorbed into r_z, leaving no further additive terms.
    BigComplex log_4mur = clog(to_complex(four_mu) * r);
    BigComplex xi2 = to_complex(four_mu) * r -
                     to_complex(BigReal(2L, prec) * mu) * (s.alpha - two) * log_4mur;
    out.push_back(make_prediction(RootKind::zero, M, order, xi2));
  }
  return out;
}

BigReal residual_at_prediction(const Prediction& pred,
                               const TransseriesParams& params) {
  if (pred.xi.is_zero()) throw std::domain_error("residual_at_prediction: xi = 0");
  long prec = params.mu.prec_bits();
  BigComplex t = tau(pred.xi, params);
  BigComplex inv_xi2 = BigComplex(1, 0, prec) / (pred.xi * pred.xi);
  LocatorSeries s = pred.kind == RootKind::pole ? pole_series(params.mu)
                                                : zero_series(params.mu);
  BigComplex target = s.tau0 + s.tau1 * inv_xi2;
  if (pred.kind == RootKind::pole) target += s.tau2 * inv_xi2 * inv_xi2;
  return abs(t - target);
}

}  // namespace transasym
