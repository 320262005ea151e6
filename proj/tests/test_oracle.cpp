// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <transasym/oracle.hpp>

#include "support/taylor_riccati.hpp"

using namespace transasym;

namespace {

constexpr long kPrec = 256;

const LinearSolution& solution() {
  static LinearSolution sol =
      build_linear_solution(BigReal(1L, kPrec), PrecisionConfig(kPrec));
  return sol;
}

BigComplex ci(double re, double im) {
  return BigComplex(BigReal(re, kPrec), BigReal(im, kPrec));
}

}  // namespace

TEST_CASE("Kummer series special values") {
  PrecisionConfig cfg(kPrec);
  BigComplex a(2, 1, kPrec);
  BigComplex b(3, 0, kPrec);
  CHECK(kummer_m(a, b, BigComplex(kPrec), cfg) == BigComplex(1, 0, kPrec));
  // M(1, 1, z) = e^z.
  BigComplex one(1, 0, kPrec);
  for (double x : {-2.0, 0.5, 3.0}) {
    BigComplex z = ci(x, 1.0);
    BigComplex got = kummer_m(one, one, z, cfg);
    CHECK(abs(got - cexp(z)) < BigReal("1e-70", kPrec) * abs(cexp(z)));
  }
  // Derivative relation d/dz M(a,b,z) = (a/b) M(a+1,b+1,z), checked by
  // central difference.
  BigComplex z = ci(0.7, -0.3);
  BigReal h("1e-25", kPrec);
  BigComplex hh(h, BigReal(0L, kPrec));
  BigComplex num =
      (kummer_m(a, b, z + hh, cfg) - kummer_m(a, b, z - hh, cfg)) /
      (h * 2L);
  BigComplex ana = (a / b) * kummer_m(a + one, b + one, z, cfg);
  CHECK(abs(num - ana) < BigReal("1e-45", kPrec));
}

TEST_CASE("Kummer series refuses when cancellation exhausts precision") {
  PrecisionConfig low(64);
  BigComplex a(BigReal(0L, 64), BigReal(-0.125, 64));
  BigComplex b(BigReal(0.5, 64), BigReal(0L, 64));
  bool threw = false;
  try {
    kummer_m(a, b, BigComplex(-36, 0, 64), low);
  } catch (const PrecisionExhaustedError& e) {
    threw = true;
    CHECK(e.needed_bits > 64);
  }
  CHECK(threw);
  // The same point passes at the bits the error asked for.
  PrecisionConfig high(kPrec);
  BigComplex ah(BigReal(0L, kPrec), BigReal(-0.125, kPrec));
  BigComplex bh(BigReal(0.5, kPrec), BigReal(0L, kPrec));
  CHECK(kummer_m(ah, bh, BigComplex(-36, 0, kPrec), high).is_finite());
  CHECK(required_prec_bits(BigReal(12L, kPrec), BigReal(1L, kPrec)) > 64);
}

TEST_CASE("anchored solution reproduces the far field") {
  const LinearSolution& sol = solution();
  CHECK(sol.fit_residual < BigReal("1e-3", kPrec));
  // U(-10i) = -i/(2 xi) + O(xi^-3) = 0.05 + O(1e-3).
  BigComplex u = oracle_u(sol, ci(0, -10));
  CHECK(abs(u - ci(0.05, 0)) < BigReal("5e-3", kPrec));
}

TEST_CASE("oracle satisfies the Riccati equation") {
  const LinearSolution& sol = solution();
  BigReal mu = sol.mu;
  BigReal h("1e-20", kPrec);
  BigComplex hh(h, BigReal(0L, kPrec));
  BigComplex half_i(BigReal(0L, kPrec), BigReal(0.5, kPrec));
  for (auto xi : {ci(1.5, -2.0), ci(-3.0, -1.0), ci(4.0, 1.0)}) {
    BigComplex du =
        (oracle_u(sol, xi + hh) - oracle_u(sol, xi - hh)) / (h * 2L);
    BigComplex u = oracle_u(sol, xi);
    // 2 mu U' = U^2 - xi U - i/2.
    BigComplex res = (mu * 2L) * du - u * u + xi * u + half_i;
    CHECK(abs(res) < BigReal("1e-35", kPrec));
  }
}

TEST_CASE("oracle agrees with an independent Taylor integrator") {
  const LinearSolution& sol = solution();
  BigComplex start = ci(0, -10);
  BigComplex end = ci(0, 2);
  BigComplex u = testsupport::riccati_integrate(oracle_u(sol, start), start,
                                                end, sol.mu, 60, 40);
  CHECK(abs(u - oracle_u(sol, end)) < BigReal("1e-10", kPrec));
}

TEST_CASE("Newton roots are stable under precision doubling") {
  const LinearSolution& lo = solution();
  LinearSolution hi = build_linear_solution(BigReal(1L, 512), PrecisionConfig(512));
  std::vector<BigComplex> seeds = {ci(3.6, 4.3)};
  auto r_lo = find_roots(lo, RootKind::pole, seeds);
  auto r_hi = find_roots(hi, RootKind::pole,
                         std::vector<BigComplex>{BigComplex(
                             BigReal(3.6, 512), BigReal(4.3, 512))});
  REQUIRE(r_lo.size() == 1);
  REQUIRE(r_hi.size() == 1);
  REQUIRE(r_lo[0].converged);
  REQUIRE(r_hi[0].converged);
  CHECK(abs(r_lo[0].xi - r_hi[0].xi) < BigReal("1e-20", kPrec));
  CHECK(r_lo[0].newton_iters < 30);
}

TEST_CASE("duplicate seeds collapse to one root") {
  const LinearSolution& sol = solution();
  std::vector<BigComplex> seeds = {ci(3.6, 4.3), ci(3.62, 4.32),
                                   ci(3.58, 4.28)};
  auto roots = find_roots(sol, RootKind::pole, seeds);
  CHECK(roots.size() == 1);
}

TEST_CASE("winding counts flag poles and zeros with the right sign") {
  const LinearSolution& sol = solution();
  // One pole near 3.61 + 4.31i.
  auto g1 = phase_grid(sol, 3.35, 3.90, 4.05, 4.60, 23, 23);
  auto w1 = find_winding_points(g1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].winding == -1);
  CHECK(w1[0].x == doctest::Approx(3.61).epsilon(0.02));
  CHECK(w1[0].y == doctest::Approx(4.31).epsilon(0.02));
  // One zero near 3.93 + 2.38i.
  auto g2 = phase_grid(sol, 3.70, 4.20, 2.10, 2.60, 23, 23);
  auto w2 = find_winding_points(g2);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].winding == 1);
  // A patch with neither.
  auto g3 = phase_grid(sol, -1.0, 1.0, -2.0, -1.0, 17, 9);
  CHECK(find_winding_points(g3).empty());
}

TEST_CASE("phase grid geometry") {
  const LinearSolution& sol = solution();
  auto g = phase_grid(sol, -1.0, 1.0, -3.0, -2.0, 5, 3);
  CHECK(g.nx == 5);
  CHECK(g.ny == 3);
  CHECK(g.x(0) == doctest::Approx(-1.0));
  CHECK(g.x(4) == doctest::Approx(1.0));
  CHECK(g.y(2) == doctest::Approx(-2.0));
  CHECK(g.phase.size() == 15);
  for (double p : g.phase) {
    CHECK(p <= 3.1415926535897932 + 1e-12);
    CHECK(p >= -3.1415926535897932 - 1e-12);
  }
}
