// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace transasym {

/// Software binary float with a configurable mantissa. All operations round
/// to nearest and are bit-deterministic at fixed precision. The result of a
/// binary operation carries the larger of the two operand precisions.
class BigReal {
 public:
  static constexpr long kMinPrecBits = 64;

  BigReal() : BigReal(kMinPrecBits) {}

  explicit BigReal(long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    mpfr_set_zero(v_, 1);
  }

  BigReal(long value, long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  BigReal(double value, long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigReal(const std::string& decimal, long prec_bits) {
    check_prec(prec_bits);
    mpfr_init2(v_, prec_bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("BigReal: cannot parse '" + decimal + "'");
    }
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigReal() { mpfr_clear(v_); }

  long prec_bits() const { return mpfr_get_prec(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  // Raw handle, for the few call sites that drive mpfr directly.
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a) {
    BigReal r(a.prec_bits());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
  BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
  BigReal& operator*=(const BigReal& b) { return *this = *this * b; }
  BigReal& operator/=(const BigReal& b) { return *this = *this / b; }

  friend BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec_bits());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec_bits());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }

 private:
  static void check_prec(long prec_bits) {
    if (prec_bits < kMinPrecBits) {
      throw std::invalid_argument("BigReal: prec_bits must be >= 64");
    }
  }
  static long join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec_bits(), b.prec_bits());
  }

  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal erf_real(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal pow_si(const BigReal& x, long n);
BigReal pi(long prec_bits);

/// 2^e at the given precision; used for ulp-scale tolerances.
BigReal pow2(long e, long prec_bits);

/// Evaluation settings shared by every convergent-series routine.
struct PrecisionConfig {
  long prec_bits = 256;
  BigReal series_tol;

  explicit PrecisionConfig(long bits = 256)
      : prec_bits(bits), series_tol(pow2(16 - bits, bits)) {
    validate();
  }
  PrecisionConfig(long bits, BigReal tol)
      : prec_bits(bits), series_tol(std::move(tol)) {
    validate();
  }

  void validate() const {
    if (prec_bits < BigReal::kMinPrecBits) {
      throw std::invalid_argument("PrecisionConfig: prec_bits must be >= 64");
    }
    if (!(series_tol > BigReal(0L, prec_bits)) ||
        series_tol < pow2(1 - prec_bits, prec_bits)) {
      throw std::invalid_argument(
          "PrecisionConfig: series_tol must satisfy 0 < 2^(1-prec) <= tol");
    }
  }
};

}  // namespace transasym
