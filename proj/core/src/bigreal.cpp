// SPDX-License-Identifier: Apache-2.0
#include "transasym/bigreal.hpp"

#include <cstdio>
#include <vector>

namespace transasym {

std::string BigReal::to_string(int digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) {
    throw std::runtime_error("BigReal::to_string: formatting failed");
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
template <typename F>
BigReal unary(const BigReal& x, F f) {
  BigReal r(x.prec_bits());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal log2(const BigReal& x) { return unary(x, mpfr_log2); }
BigReal log10(const BigReal& x) { return unary(x, mpfr_log10); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal erf_real(const BigReal& x) { return unary(x, mpfr_erf); }
BigReal floor(const BigReal& x) {
  BigReal r(x.prec_bits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(y.prec_bits(), x.prec_bits()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow_si(const BigReal& x, long n) {
  BigReal r(x.prec_bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigReal pi(long prec_bits) {
  BigReal r(prec_bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigReal pow2(long e, long prec_bits) {
  BigReal r(1L, prec_bits);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace transasym
