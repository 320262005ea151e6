// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/bigcomplex.hpp"

#include <map>

namespace transasym {

/// Finite Laurent polynomial: map from integer power k to the coefficient of
/// z^k. Coefficients whose magnitude underflows to zero are dropped.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  void set(long power, BigComplex c);
  void add(long power, const BigComplex& c);
  bool has(long power) const { return coeffs_.find(power) != coeffs_.end(); }
  BigComplex get(long power, long prec_bits) const;

  const std::map<long, BigComplex>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  long min_power() const;
  long max_power() const;

  LaurentSeries derivative() const;
  BigComplex evaluate(const BigComplex& z) const;
  BigReal max_coeff_abs() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(const BigComplex& s) const;

 private:
  std::map<long, BigComplex> coeffs_;
};

}  // namespace transasym
