// SPDX-License-Identifier: Apache-2.0
#include "transasym/laurent.hpp"

#include <stdexcept>

namespace transasym {

void LaurentSeries::set(long power, BigComplex c) {
  if (c.is_zero()) {
    coeffs_.erase(power);
  } else {
    coeffs_[power] = std::move(c);
  }
}

void LaurentSeries::add(long power, const BigComplex& c) {
  auto it = coeffs_.find(power);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(power, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

BigComplex LaurentSeries::get(long power, long prec_bits) const {
  auto it = coeffs_.find(power);
  if (it == coeffs_.end()) return BigComplex(prec_bits);
  return it->second;
}

long LaurentSeries::min_power() const {
  if (coeffs_.empty()) throw std::logic_error("LaurentSeries: empty");
  return coeffs_.begin()->first;
}

long LaurentSeries::max_power() const {
  if (coeffs_.empty()) throw std::logic_error("LaurentSeries: empty");
  return coeffs_.rbegin()->first;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries d;
  for (const auto& [k, c] : coeffs_) {
    if (k == 0) continue;
    d.set(k - 1, c * BigReal(k, c.prec_bits()));
  }
  return d;
}

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
}  // namespace

BigComplex LaurentSeries::evaluate(const BigComplex& z) const {
  BigComplex acc(z.prec_bits());
  for (const auto& [k, c] : coeffs_) {
    acc += c * ipow(z, k);
  }
  return acc;
}

BigReal LaurentSeries::max_coeff_abs() const {
  BigReal m(0L, 64);
  for (const auto& [k, c] : coeffs_) {
    (void)k;
    BigReal a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r = a;
  for (const auto& [k, c] : b.coeffs_) r.add(k, c);
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r = a;
  for (const auto& [k, c] : b.coeffs_) r.add(k, -c);
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      r.add(ka + kb, ca * cb);
    }
  }
  return r;
}

LaurentSeries LaurentSeries::scaled(const BigComplex& s) const {
  LaurentSeries r;
  for (const auto& [k, c] : coeffs_) r.set(k, c * s);
  return r;
}

}  // namespace transasym
