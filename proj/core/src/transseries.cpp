// SPDX-License-Identifier: Apache-2.0
#include "transasym/transseries.hpp"

#include <stdexcept>

namespace transasym {

namespace {

BigComplex ipow(const BigComplex& z, long k) {
  long p = z.prec_bits();
  if (k == 0) return BigComplex(1, 0, p);
  BigComplex base = k > 0 ? z : BigComplex(1, 0, p) / z;
  unsigned long e = k > 0 ? static_cast<unsigned long>(k)
                          : static_cast<unsigned long>(-k);
  BigComplex acc(1, 0, p);
  while (e > 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return acc;
}

// Quadratic term C_m^(n) = sum over ordered splits (n1+n2=n, m1+m2=m) of
// a_{m1}^(n1) a_{m2}^(n2); entries outside the filled region are zero.
BigComplex quad_term(const std::vector<std::vector<BigComplex>>& a, long m,
                     long n, long prec) {
  BigComplex c(prec);
  for (long n1 = 0; n1 <= n; ++n1) {
    for (long m1 = 0; m1 <= m; ++m1) {
      c += a[m1][n1] * a[m - m1][n - n1];
    }
  }
  return c;
}

}  // namespace

CoeffTable build_coeff_table(const BigReal& mu, long m_max, long n_max) {
  if (m_max < 2 || n_max < 2) {
    throw std::invalid_argument("build_coeff_table: need m_max, n_max >= 2");
  }
  long prec = mu.prec_bits();
  BigComplex alpha(BigReal(1L, prec),
                   BigReal(1L, prec) / (BigReal(2L, prec) * mu));
  BigComplex i_quarter(BigReal(0L, prec), BigReal(0.25, prec));
  BigReal half(0.5, prec);

  // The n = 1 row at index m needs a_{m+1}^(0); build one extra column entry.
  long m_ext = m_max + 1;
  std::vector<std::vector<BigComplex>> a(
      m_ext + 1, std::vector<BigComplex>(n_max + 1, BigComplex(prec)));

  // n = 0 row: (1/2) a_m = -mu (3-2m) a_{m-1} + (1/2) C_m - (i/4) delta_{m1}.
  for (long m = 1; m <= m_ext; ++m) {
    BigComplex rhs = to_complex(-mu * BigReal(3 - 2 * m, prec)) * a[m - 1][0] +
                     half * quad_term(a, m, 0, prec);
    if (m == 1) rhs -= i_quarter;
    a[m][0] = BigReal(2L, prec) * rhs;
  }

  // n = 1 row is degenerate; a_0^(1) = 1 is the normalization, and the
  // equation one order up gives 2 mu m a_m = -sum_{k=2}^{m+1} a_k^(0) a_{m+1-k}.
  a[0][1] = BigComplex(1, 0, prec);
  for (long m = 1; m <= m_max; ++m) {
    BigComplex s(prec);
    for (long k = 2; k <= m + 1; ++k) s += a[k][0] * a[m + 1 - k][1];
    a[m][1] = -s / (BigReal(2L, prec) * mu * BigReal(m, prec));
  }

  // n >= 2: ((1-n)/2) a_m^(n) = -mu (3-2m-n alpha) a_{m-1}^(n) + (1/2) C_m^(n).
  for (long n = 2; n <= n_max; ++n) {
    for (long m = 0; m <= m_max; ++m) {
      BigComplex coeff =
          BigComplex(BigReal(3 - 2 * m, prec), BigReal(0L, prec)) -
          BigReal(n, prec) * alpha;
      BigComplex rhs =
          (m >= 1 ? to_complex(-mu) * coeff * a[m - 1][n] : BigComplex(prec)) +
          half * quad_term(a, m, n, prec);
      a[m][n] = rhs * (BigReal(2L, prec) / BigReal(1 - n, prec));
    }
  }

  a.resize(m_max + 1);
  return CoeffTable(mu, std::move(a));
}

TransseriesParams TransseriesParams::active(const LateOrderData& data) {
  long prec = data.mu.prec_bits();
  TransseriesParams p;
  p.mu = data.mu;
  p.sigma = BigComplex(BigReal(0L, prec), BigReal(2L, prec) * pi(prec)) *
            data.lambda;
  p.alpha = BigComplex(BigReal(1L, prec),
                       BigReal(1L, prec) / (BigReal(2L, prec) * data.mu));
  return p;
}

TransseriesParams TransseriesParams::inactive(const BigReal& mu) {
  long prec = mu.prec_bits();
  TransseriesParams p;
  p.mu = mu;
  p.sigma = BigComplex(prec);
  p.alpha = BigComplex(BigReal(1L, prec),
                       BigReal(1L, prec) / (BigReal(2L, prec) * mu));
  return p;
}

BigComplex tau(const BigComplex& xi, const TransseriesParams& params) {
  if (xi.is_zero()) throw std::domain_error("tau: xi = 0");
  if (params.sigma.is_zero()) return BigComplex(params.mu.prec_bits());
  return params.sigma * cpow(xi, -params.alpha) *
         cexp(-singulant(xi, params.mu));
}

BigComplex TransasymptoticFn::value(const BigComplex& tau_val) const {
  long prec = tau_val.prec_bits();
  BigComplex n(prec);
  for (auto it = num.rbegin(); it != num.rend(); ++it) n = n * tau_val + *it;
  BigComplex one_plus = BigComplex(1, 0, prec) + tau_val;
  return n / ipow(one_plus, den_power);
}

BigComplex TransasymptoticFn::derivative(const BigComplex& tau_val) const {
  long prec = tau_val.prec_bits();
  BigComplex n(prec), nd(prec);
  for (auto it = num.rbegin(); it != num.rend(); ++it) {
    nd = nd * tau_val + n;
    n = n * tau_val + *it;
  }
  BigComplex one_plus = BigComplex(1, 0, prec) + tau_val;
  return (nd * one_plus - BigReal(den_power, prec) * n) /
         ipow(one_plus, den_power + 1);
}

std::vector<BigComplex> TransasymptoticFn::taylor(long n_max) const {
  long prec = num.empty() ? BigReal::kMinPrecBits : num[0].prec_bits();
  // (1+tau)^(-p) = sum_k (-1)^k C(p+k-1,k) tau^k.
  std::vector<BigComplex> binom(n_max + 1, BigComplex(prec));
  binom[0] = BigComplex(1, 0, prec);
  for (long k = 1; k <= n_max; ++k) {
    binom[k] = binom[k - 1] *
               to_complex(BigReal(-(den_power + k - 1), prec) / BigReal(k, prec));
  }
  std::vector<BigComplex> out(n_max + 1, BigComplex(prec));
  for (long k = 0; k <= n_max; ++k) {
    for (long j = 0; j <= k && j < static_cast<long>(num.size()); ++j) {
      out[k] += num[j] * binom[k - j];
    }
  }
  return out;
}

TransasymptoticFn A_fn(long m, const BigReal& mu) {
  long prec = mu.prec_bits();
  BigComplex i = make_i(prec);
  BigComplex one(1, 0, prec);
  BigReal four_mu = BigReal(4L, prec) * mu;
  TransasymptoticFn f;
  f.m = m;
  f.den_power = m + 1;
  switch (m) {
    case 0:
      f.num = {BigComplex(prec), one};
      break;
    case 1: {
      BigComplex q = one - i * four_mu;  // 1 - 4 i mu
      f.num = {BigComplex(0, 0, prec) - i / BigReal(2L, prec),
               q / to_complex(BigReal(8L, prec) * mu),
               i * q / BigReal(2L, prec)};
      break;
    }
    case 2: {
      BigReal mu2 = mu * mu;
      BigReal mu3 = mu2 * mu;
      BigReal mu4 = mu2 * mu2;
      BigComplex scale =
          -one / to_complex(BigReal(128L, prec) * mu2);
      BigComplex c0 = to_complex(BigReal(32L, prec) * mu2) *
                      (one + i * four_mu);
      BigComplex c1 = BigComplex(BigReal(32L, prec) * mu2 - BigReal(1L, prec),
                                 BigReal(192L, prec) * mu3);
      BigComplex c2 = BigComplex(BigReal(1536L, prec) * mu4 -
                                     BigReal(128L, prec) * mu2 +
                                     BigReal(1L, prec),
                                 BigReal(704L, prec) * mu3 - four_mu * 4L);
      BigComplex c3 = to_complex(BigReal(32L, prec) * mu2) *
                      BigComplex(BigReal(32L, prec) * mu2 - BigReal(1L, prec),
                                 BigReal(12L, prec) * mu);
      f.num = {scale * c0, scale * c1, scale * c2, scale * c3};
      break;
    }
    default:
      throw std::invalid_argument("A_fn: closed forms exist for m <= 2 only");
  }
  return f;
}

BigComplex A_closed(long m, const BigComplex& tau_val, const BigReal& mu) {
  long prec = std::max(tau_val.prec_bits(), mu.prec_bits());
  if ((BigComplex(1, 0, prec) + tau_val).is_zero()) {
    throw std::domain_error("A_closed: pole at tau = -1");
  }
  return A_fn(m, mu).value(tau_val);
}

BigComplex evaluate_resummed(const BigComplex& xi,
                             const TransseriesParams& params, long m_terms) {
  if (m_terms < 1 || m_terms > 3) {
    throw std::invalid_argument("evaluate_resummed: m_terms must be 1..3");
  }
  long prec = std::max(xi.prec_bits(), params.mu.prec_bits());
  BigComplex t = tau(xi, params);
  BigComplex one_plus = BigComplex(1, 0, prec) + t;
  if (abs(one_plus) < pow2(8 - prec, prec)) {
    // Estimate which pole family member this is from Im(xi^2/4mu).
    long m_idx = 0;
    if (!params.sigma.is_zero()) {
      BigReal im_r = singulant(xi, params.mu).im - clog(params.sigma).im;
      m_idx = floor(im_r / (BigReal(2L, prec) * pi(prec)) + BigReal(0.5, prec))
                  .to_long();
    }
    throw TauPoleError("evaluate_resummed: tau = -1 pole", m_idx);
  }
  BigComplex acc(prec);
  BigComplex xi_pow = xi;  // xi^(1-2m)
  BigComplex inv_xi2 = BigComplex(1, 0, prec) / (xi * xi);
  for (long m = 0; m < m_terms; ++m) {
    acc += A_fn(m, params.mu).value(t) * xi_pow;
    xi_pow *= inv_xi2;
  }
  return acc;
}

AOdeReport verify_A_odes(const BigReal& mu,
                         const std::vector<BigComplex>& sample_taus,
                         const BigReal& tolerance) {
  long prec = mu.prec_bits();
  BigComplex alpha(BigReal(1L, prec),
                   BigReal(1L, prec) / (BigReal(2L, prec) * mu));
  BigComplex i_half(BigReal(0L, prec), BigReal(0.5, prec));
  TransasymptoticFn fn[3] = {A_fn(0, mu), A_fn(1, mu), A_fn(2, mu)};

  AOdeReport report;
  report.max_residual = BigReal(0L, prec);
  for (const BigComplex& t : sample_taus) {
    BigComplex a[3], ad[3];
    for (int m = 0; m < 3; ++m) {
      a[m] = fn[m].value(t);
      ad[m] = fn[m].derivative(t);
    }
    for (int m = 0; m < 3; ++m) {
      BigComplex e = a[m] - t * ad[m];
      if (m >= 1) {
        e -= BigReal(2L, prec) * mu * alpha * t * ad[m - 1];
        e -= to_complex(BigReal(2L * (2 * m - 3), prec) * mu) * a[m - 1];
      }
      for (int l = 0; l <= m; ++l) e -= a[l] * a[m - l];
      if (m == 1) e += i_half;
      BigReal r = abs(e);
      report.residuals.push_back(r);
      if (r > report.max_residual) report.max_residual = r;
    }
  }
  report.pass = report.max_residual < tolerance;
  return report;
}

BigComplex evaluate_double_sum(const BigComplex& xi,
                               const TransseriesParams& params,
                               const CoeffTable& table) {
  long prec = std::max(xi.prec_bits(), params.mu.prec_bits());
  BigComplex t = tau(xi, params);
  BigComplex acc(prec);
  BigComplex xi_pow = xi;
  BigComplex inv_xi2 = BigComplex(1, 0, prec) / (xi * xi);
  for (long m = 0; m <= table.m_max(); ++m) {
    BigComplex row(prec);
    for (long n = table.n_max(); n >= 0; --n) row = row * t + table.at(m, n);
    acc += row * xi_pow;
    xi_pow *= inv_xi2;
  }
  return acc;
}

}  // namespace transasym
