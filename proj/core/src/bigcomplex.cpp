// SPDX-License-Identifier: Apache-2.0
#include "transasym/bigcomplex.hpp"

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace transasym {

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) {
  BigReal r(z.prec_bits());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex cexp(const BigComplex& z) {
  long p = z.prec_bits();
  BigReal s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  BigReal m = exp(z.re);
  return {m * c, m * s};
}

BigComplex clog(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("clog: z = 0");
  return {log(abs(z)), arg(z)};
}

BigComplex cpow(const BigComplex& z, const BigComplex& a) {
  if (z.is_zero()) {
    if (a.is_zero()) return BigComplex(1, 0, std::max(z.prec_bits(), a.prec_bits()));
    if (a.re.sign() > 0) return BigComplex(std::max(z.prec_bits(), a.prec_bits()));
    throw std::domain_error("cpow: 0 base with Re(exponent) <= 0");
  }
  if (a.is_zero()) return BigComplex(1, 0, std::max(z.prec_bits(), a.prec_bits()));
  return cexp(a * clog(z));
}

BigComplex csqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  long p = z.prec_bits();
  BigComplex h(BigReal("0.5", p), BigReal(0L, p));
  return cexp(h * clog(z));
}

namespace {

// Bernoulli numbers B_2, B_4, ... as exact rationals, grown on demand.
class BernoulliTable {
 public:
  // B_{2k} for k >= 1.
  mpq_class even(std::size_t k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (all_.size() < 2 * k + 1) grow();
    return all_[2 * k];
  }

 private:
  void grow() {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, starting from B_0 = 1.
    if (all_.empty()) {
      all_.emplace_back(1);
      return;
    }
    std::size_t m = all_.size();
    mpq_class acc(0);
    mpz_class binom(1);  // C(m+1, j), updated incrementally
    for (std::size_t j = 0; j < m; ++j) {
      acc += mpq_class(binom) * all_[j];
      binom *= static_cast<unsigned long>(m + 1 - j);
      binom /= static_cast<unsigned long>(j + 1);
    }
    mpq_class b = -acc / mpq_class(static_cast<unsigned long>(m + 1));
    b.canonicalize();
    all_.push_back(b);
  }

  std::mutex mu_;
  std::vector<mpq_class> all_;
};

BernoulliTable& bernoulli() {
  static BernoulliTable t;
  return t;
}

BigReal from_mpq(const mpq_class& q, long prec) {
  BigReal r(prec);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// Stirling series for log Gamma, valid once Re(z) is large enough that the
// asymptotic tail dips below 2^-prec before it turns around.
BigComplex stirling_log_gamma(const BigComplex& z, long prec) {
  BigComplex lz = clog(z);
  BigReal half("0.5", prec);
  BigComplex acc = (BigComplex(z.re - half, z.im)) * lz - z;
  BigReal ln2pi = log(BigReal(2L, prec) * pi(prec));
  acc.re += ln2pi * half;

  BigComplex inv_z = BigComplex(1, 0, prec) / z;
  BigComplex inv_z2 = inv_z * inv_z;
  BigComplex w = inv_z;  // z^{1-2k}, starting at k = 1
  BigReal cutoff = pow2(-(prec + 8), prec);
  BigReal prev_mag(-1L, prec);
  for (std::size_t k = 1; k <= 4096; ++k) {
    mpq_class coeff = bernoulli().even(k) /
                      mpq_class(static_cast<unsigned long>(2 * k * (2 * k - 1)));
    BigComplex term = from_mpq(coeff, prec) * w;
    BigReal mag = abs(term);
    if (prev_mag.sign() >= 0 && mag > prev_mag) {
      throw std::runtime_error(
          "log_gamma: Stirling series diverging before reaching tolerance");
    }
    acc += term;
    if (mag < cutoff * abs(acc)) return acc;
    prev_mag = mag;
    w *= inv_z2;
  }
  throw std::runtime_error("log_gamma: Stirling series did not converge");
}

bool is_nonpositive_integer(const BigComplex& z) {
  if (!z.im.is_zero()) return false;
  if (z.re.sign() > 0) return false;
  return floor(z.re) == z.re;
}

}  // namespace

BigComplex log_gamma(const BigComplex& z) {
  if (is_nonpositive_integer(z)) {
    throw std::domain_error("log_gamma: pole at nonpositive integer");
  }
  long prec = z.prec_bits() + 32;
  // Re(z) must reach ~prec*ln2/(2*pi) before Stirling closes at 2^-prec.
  long threshold = std::max(32L, prec / 9 + 8);
  BigComplex zz(z.re + BigReal(0L, prec), z.im + BigReal(0L, prec));

  BigComplex shift_log(prec);
  while (zz.re < BigReal(threshold, prec)) {
    shift_log += clog(zz);
    zz.re += BigReal(1L, prec);
  }
  BigComplex result = stirling_log_gamma(zz, prec) - shift_log;
  // Round back to the caller's precision.
  BigReal re(z.prec_bits()), im(z.prec_bits());
  mpfr_set(re.raw(), result.re.raw(), MPFR_RNDN);
  mpfr_set(im.raw(), result.im.raw(), MPFR_RNDN);
  return {re, im};
}

}  // namespace transasym
