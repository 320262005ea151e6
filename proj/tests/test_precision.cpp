// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <transasym/bigcomplex.hpp>

#include <random>
#include <vector>

using namespace transasym;

namespace {

constexpr long kPrec = 256;

BigReal tol_ulp(long ulps) { return pow2(-kPrec, kPrec) * ulps; }

std::vector<BigComplex> sample_points() {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> d(-8.0, 8.0);
  std::vector<BigComplex> out;
  for (int i = 0; i < 40; ++i) {
    out.emplace_back(BigReal(d(rng), kPrec), BigReal(d(rng), kPrec));
  }
  return out;
}

}  // namespace

TEST_CASE("BigReal basics") {
  BigReal a(3L, kPrec);
  BigReal b(2L, kPrec);
  CHECK((a + b).to_long() == 5);
  CHECK((a * b).to_long() == 6);
  CHECK((a / b).to_double() == doctest::Approx(1.5));
  CHECK((a - b).to_long() == 1);
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a == BigReal(3L, kPrec));
  CHECK((-a).sign() == -1);
  CHECK(BigReal(kPrec).is_zero());
}

TEST_CASE("BigReal precision join and minimum") {
  BigReal lo(1L, 64);
  BigReal hi(1L, 512);
  CHECK((lo + hi).prec_bits() == 512);
  CHECK((hi * lo).prec_bits() == 512);
  CHECK_THROWS_AS(BigReal(1L, 32), std::invalid_argument);
  CHECK_THROWS_AS(BigReal("not a number", kPrec), std::invalid_argument);
}

TEST_CASE("BigReal decimal round trip at 30 digits") {
  BigReal x = pi(kPrec) / 7L;
  std::string s = x.to_string(30);
  BigReal y(s, kPrec);
  CHECK(abs(x - y) < BigReal("1e-28", kPrec));
}

TEST_CASE("BigReal operations are deterministic") {
  BigReal x = sqrt(BigReal(2L, kPrec));
  BigReal y = sqrt(BigReal(2L, kPrec));
  CHECK(x == y);
  CHECK(exp(log(x)) == exp(log(y)));
  CHECK(x.to_string(40) == y.to_string(40));
}

TEST_CASE("pow2 and elementary identities") {
  CHECK(pow2(3, kPrec).to_long() == 8);
  CHECK(pow2(-1, kPrec).to_double() == doctest::Approx(0.5));
  BigReal one(1L, kPrec);
  CHECK(abs(exp(BigReal(0L, kPrec)) - one).is_zero());
  CHECK(abs(sin(pi(kPrec))) < tol_ulp(64));
  CHECK(abs(cos(pi(kPrec)) + one) < tol_ulp(64));
  CHECK(erf_real(BigReal(0L, kPrec)).is_zero());
  CHECK(abs(erf_real(BigReal(10L, kPrec)) - one) < BigReal("1e-40", kPrec));
  CHECK(pow_si(BigReal(3L, kPrec), 4).to_long() == 81);
  CHECK(floor(BigReal(2.7, kPrec)).to_long() == 2);
}

TEST_CASE("PrecisionConfig validation") {
  CHECK_THROWS_AS(PrecisionConfig(32), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionConfig(256, BigReal(0L, 256)),
                  std::invalid_argument);
  PrecisionConfig cfg(128);
  CHECK(cfg.series_tol == pow2(16 - 128, 128));
}

TEST_CASE("clog principal branch") {
  BigComplex minus_one(-1, 0, kPrec);
  BigComplex l = clog(minus_one);
  CHECK(abs(l.re) < tol_ulp(16));
  CHECK(abs(l.im - pi(kPrec)) < tol_ulp(64));
  CHECK_THROWS_AS(clog(BigComplex(kPrec)), std::domain_error);
}

TEST_CASE("cexp/clog round trip within 16 ulp relative") {
  for (const BigComplex& z : sample_points()) {
    if (abs(z) < BigReal(0.1, kPrec)) continue;
    BigComplex back = cexp(clog(z));
    CHECK(abs(back - z) / abs(z) < tol_ulp(16));
  }
}

TEST_CASE("csqrt squares back and picks the principal branch") {
  for (const BigComplex& z : sample_points()) {
    if (z.is_zero()) continue;
    BigComplex r = csqrt(z);
    CHECK(abs(r * r - z) / abs(z) < tol_ulp(32));
    CHECK(r.re >= -tol_ulp(16) * abs(r));
  }
}

TEST_CASE("cpow identities") {
  BigComplex one(1, 0, kPrec);
  BigComplex two(2, 0, kPrec);
  for (const BigComplex& z : sample_points()) {
    if (abs(z) < BigReal(0.1, kPrec)) continue;
    CHECK(abs(cpow(z, one) - z) / abs(z) < tol_ulp(16));
    CHECK(abs(cpow(z, two) - z * z) / abs(z * z) < tol_ulp(32));
  }
}

TEST_CASE("log_gamma recurrence and known values") {
  // log Gamma(z+1) = log Gamma(z) + log z away from the branch cut.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(0.5, 6.0);
  std::uniform_real_distribution<double> im(-4.0, 4.0);
  for (int i = 0; i < 20; ++i) {
    BigComplex z(BigReal(re(rng), kPrec), BigReal(im(rng), kPrec));
    BigComplex lhs = log_gamma(z + BigComplex(1, 0, kPrec));
    BigComplex rhs = log_gamma(z) + clog(z);
    CHECK(abs(lhs - rhs) < BigReal("1e-70", kPrec));
  }
  // Gamma(5) = 24, Gamma(1/2) = sqrt(pi).
  BigComplex g5 = cexp(log_gamma(BigComplex(5, 0, kPrec)));
  CHECK(abs(g5 - BigComplex(24, 0, kPrec)) < BigReal("1e-70", kPrec));
  BigComplex gh = log_gamma(BigComplex(BigReal(0.5, kPrec), BigReal(0L, kPrec)));
  CHECK(abs(gh.re - log(pi(kPrec)) / 2L) < BigReal("1e-70", kPrec));
  CHECK(abs(gh.im) < BigReal("1e-70", kPrec));
}

TEST_CASE("log_gamma rejects poles") {
  CHECK_THROWS_AS(log_gamma(BigComplex(0, 0, kPrec)), std::domain_error);
  CHECK_THROWS_AS(log_gamma(BigComplex(-3, 0, kPrec)), std::domain_error);
}

TEST_CASE("complex helpers") {
  BigComplex z(3, -4, kPrec);
  CHECK(abs(z).to_double() == doctest::Approx(5.0));
  CHECK(norm(z).to_long() == 25);
  CHECK(conj(z).im.to_long() == 4);
  CHECK(arg(BigComplex(0, 1, kPrec)).to_double() ==
        doctest::Approx(1.5707963267948966));
  CHECK(make_i(kPrec).im.to_long() == 1);
}
