// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/bigreal.hpp"

namespace transasym {

/// Complex scalar over BigReal. Principal branches everywhere: clog returns
/// Im in (-pi, pi], cpow and csqrt are defined through clog.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(long prec_bits) : re(prec_bits), im(prec_bits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(long r, long i, long prec_bits)
      : re(r, prec_bits), im(i, prec_bits) {}

  long prec_bits() const { return std::max(re.prec_bits(), im.prec_bits()); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return {a.re * s, a.im * s};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
    return a * s;
  }
  friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
    return {a.re / s, a.im / s};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }

  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator-=(const BigComplex& b) { return *this = *this - b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
  BigComplex& operator/=(const BigComplex& b) { return *this = *this / b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);

BigComplex cexp(const BigComplex& z);
BigComplex clog(const BigComplex& z);        // z != 0
BigComplex cpow(const BigComplex& z, const BigComplex& a);
BigComplex csqrt(const BigComplex& z);

/// log Gamma(z), principal for Re(z) > 0, extended by the functional
/// equation elsewhere. Poles of Gamma raise std::domain_error.
BigComplex log_gamma(const BigComplex& z);

inline BigComplex make_i(long prec_bits) { return BigComplex(0, 1, prec_bits); }
inline BigComplex to_complex(const BigReal& x) {
  return BigComplex(x, BigReal(0L, x.prec_bits()));
}

}  // namespace transasym
