// SPDX-License-Identifier: Apache-2.0
#include "transasym/lateorder.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace transasym {

std::string sector_label_name(SectorLabel label) {
  switch (label) {
    case SectorLabel::no_exponential: return "no_exponential";
    case SectorLabel::small_exponential: return "small_exponential";
    case SectorLabel::large_exponential: return "large_exponential";
    case SectorLabel::stokes_curve: return "stokes_curve";
    case SectorLabel::anti_stokes_curve: return "anti_stokes_curve";
  }
  return "unknown";
}

BigComplex singulant(const BigComplex& xi, const BigReal& mu) {
  return (xi * xi) / (BigReal(4L, mu.prec_bits()) * mu);
}

BigComplex prefactor(const BigComplex& xi, const LateOrderData& data) {
  if (xi.is_zero()) throw std::domain_error("prefactor: xi = 0");
  long prec = data.mu.prec_bits();
  BigComplex exponent(BigReal(0L, prec),
                      BigReal(-1L, prec) / (BigReal(2L, prec) * data.mu));
  return data.lambda * cpow(xi, exponent);
}

InnerCoeffs build_inner_coeffs(const BigReal& mu, long n_max) {
  if (!(mu > BigReal(0L, mu.prec_bits()))) {
    throw std::invalid_argument("build_inner_coeffs: mu must be positive");
  }
  if (n_max < 0) throw std::invalid_argument("build_inner_coeffs: n_max < 0");
  long prec = mu.prec_bits();
  BigReal root_mu = sqrt(mu);
  BigReal inv_root_mu = BigReal(1L, prec) / root_mu;

  InnerCoeffs out{mu, {}};
  out.vhat.reserve(n_max + 1);
  out.vhat.emplace_back(BigReal(0L, prec),
                        BigReal(-1L, prec) / (BigReal(4L, prec) * root_mu));
  BigReal half(0.5, prec);
  for (long n = 1; n <= n_max; ++n) {
    BigComplex sum(prec);
    for (long j = 0; j < n; ++j) {
      sum += ((BigReal(j, prec) + half) / BigReal(n, prec)) *
             (out.vhat[j] * out.vhat[n - j - 1]);
    }
    out.vhat.push_back((BigReal(n, prec) - half) * out.vhat[n - 1] +
                       inv_root_mu * sum);
  }
  return out;
}

BigComplex lambda_ratio(const InnerCoeffs& coeffs, long n) {
  if (n < 0 || n >= static_cast<long>(coeffs.vhat.size())) {
    throw std::invalid_argument("lambda_ratio: n out of range");
  }
  long prec = coeffs.mu.prec_bits();
  BigReal quarter_over_mu =
      BigReal(1L, prec) / (BigReal(4L, prec) * coeffs.mu);
  BigComplex four_mu(BigReal(4L, prec) * coeffs.mu, BigReal(0L, prec));
  BigComplex power = cpow(four_mu, BigComplex(BigReal(0L, prec), quarter_over_mu));
  BigComplex gamma_arg(BigReal(n, prec) + BigReal(0.5, prec), -quarter_over_mu);
  return coeffs.vhat[n] * power / cexp(log_gamma(gamma_arg));
}

LateOrderData compute_lambda(const BigReal& mu, long n_max) {
  if (n_max < 100) throw std::invalid_argument("compute_lambda: n_max must be >= 100");
  long prec = mu.prec_bits();
  InnerCoeffs coeffs = build_inner_coeffs(mu, n_max);

  // The raw ratio converges like Lambda + c/n; Richardson extrapolation
  // 2 Lambda_n - Lambda_{n/2} kills the 1/n term. Drift is sampled between
  // extrapolated estimates at halving checkpoints and must keep shrinking.
  std::vector<long> checkpoints;
  for (long n = n_max; n >= 100; n /= 2) checkpoints.push_back(n);
  std::reverse(checkpoints.begin(), checkpoints.end());

  std::vector<BigComplex> estimates;
  estimates.reserve(checkpoints.size());
  for (long n : checkpoints) {
    BigComplex two(2, 0, prec);
    estimates.push_back(two * lambda_ratio(coeffs, n) -
                        lambda_ratio(coeffs, n / 2));
  }

  std::vector<double> drift;
  for (std::size_t k = 1; k < estimates.size(); ++k) {
    drift.push_back(abs(estimates[k] - estimates[k - 1]).to_double());
  }
  for (std::size_t k = 1; k < drift.size(); ++k) {
    if (drift[k] >= drift[k - 1]) {
      throw LambdaConvergenceError(
          "compute_lambda: ratio drift not shrinking; increase n_max", drift);
    }
  }

  LateOrderData data;
  data.mu = mu;
  data.lambda = estimates.back();
  data.gamma = BigComplex(
      BigReal(0.5, prec),
      BigReal(-1L, prec) / (BigReal(4L, prec) * mu));
  data.n_used = n_max;
  if (!drift.empty()) {
    BigReal d(drift.back(), prec);
    data.converged_digits =
        d.is_zero() ? prec / 4 : floor(-log10(d)).to_long();
  }
  return data;
}

SectorClass classify_sector(const BigComplex& xi, const BigReal& mu) {
  if (xi.is_zero()) throw std::domain_error("classify_sector: xi = 0");
  BigComplex chi = singulant(xi, mu);
  BigReal zero(0L, mu.prec_bits());

  if (chi.im.is_zero() && chi.re > zero) {
    // Positive real chi: the real axis of xi. id 2 on the positive half.
    return {SectorLabel::stokes_curve, xi.re > zero ? 2 : 4};
  }
  if (chi.re.is_zero()) {
    // Rays arg xi in {pi/4, 3pi/4, -pi/4, -3pi/4}; tag with the adjacent
    // sector on the exponential side (3, 4) or sector 1 below the axis.
    BigReal theta = arg(xi);
    BigReal half_pi = pi(mu.prec_bits()) / 2L;
    int id = (theta > zero) ? (theta < half_pi ? 3 : 4) : 1;
    return {SectorLabel::anti_stokes_curve, id};
  }

  BigReal theta = arg(xi);
  BigReal quarter_pi = pi(mu.prec_bits()) / 4L;
  if (theta > -(quarter_pi * 3L) && theta < -quarter_pi) {
    return {SectorLabel::no_exponential, 1};
  }
  if (theta > -quarter_pi && theta < quarter_pi) {
    // Stokes curve at arg 0 splits the sector: the exponential is switched
    // on only after crossing counterclockwise.
    return {theta > zero ? SectorLabel::small_exponential
                         : SectorLabel::no_exponential,
            2};
  }
  if (theta > quarter_pi && theta < quarter_pi * 3L) {
    return {SectorLabel::large_exponential, 3};
  }
  return {theta > zero ? SectorLabel::small_exponential
                       : SectorLabel::no_exponential,
          4};
}

BigComplex u_exp(const BigComplex& xi, const LateOrderData& data) {
  if (xi.is_zero()) throw std::domain_error("u_exp: xi = 0");
  long prec = data.mu.prec_bits();
  BigComplex two_pi_i(BigReal(0L, prec), BigReal(2L, prec) * pi(prec));
  return two_pi_i * prefactor(xi, data) * cexp(-singulant(xi, data.mu));
}

BigReal stokes_multiplier(const BigReal& theta, const BigReal& r) {
  long prec = std::max(theta.prec_bits(), r.prec_bits());
  if (!(r > BigReal(0L, prec))) {
    throw std::invalid_argument("stokes_multiplier: r must be positive");
  }
  BigReal vartheta = theta * sqrt(r) / sqrt(BigReal(2L, prec));
  return (BigReal(1L, prec) + erf_real(vartheta)) / 2L;
}

}  // namespace transasym
