// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance gate. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <transasym/lambda_cache.hpp>
#include <transasym/oracle.hpp>
#include <transasym/outer_series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace transasym;

namespace {

constexpr long kPrec = 256;

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %2d  %-28s %s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

BigComplex ci(double re, double im, long prec = kPrec) {
  return BigComplex(BigReal(re, prec), BigReal(im, prec));
}

std::vector<BigReal> mu_values() {
  return {BigReal(0.5, kPrec), BigReal(1L, kPrec), BigReal(2L, kPrec)};
}

// Shared oracle solutions and root sweeps, built once.
struct Sweep {
  std::vector<double> pole_err;  // index by M - 2
  std::vector<double> zero_err;
  std::vector<RootRecord> pole_roots;
  std::vector<RootRecord> zero_roots;
};

std::map<double, Sweep> g_sweeps;

double max_rel_err_anchors(const BigReal& mu) {
  BigReal one(1L, kPrec);
  auto t = build_coeff_table(mu, 3, 2);
  std::vector<std::pair<BigComplex, BigComplex>> pairs = {
      {t.at(1, 1), BigComplex(one / (mu * 8L), BigReal(0.5, kPrec))},
      {t.at(2, 1), BigComplex(BigReal(0.5, kPrec) + one / (mu * mu * 128L),
                              (mu * 3L) / 2L)},
      {t.at(3, 1),
       BigComplex((mu * 55L) / 12L + one / (mu * 24L) +
                      one / (mu * mu * mu * 3072L),
                  mu * mu * 10L - BigReal(7L, kPrec) / 16L -
                      one / (mu * mu * 256L))},
      {t.at(0, 2), BigComplex(-1, 0, kPrec)},
      {t.at(1, 2), BigComplex(mu * 2L - one / (mu * 4L), BigReal(0L, kPrec))},
      {t.at(2, 2),
       BigComplex(BigReal(0.25, kPrec) - mu * mu * 12L - one / (mu * mu * 32L),
                  one / (mu * 8L) - mu * 7L)},
  };
  double worst = 0.0;
  for (const auto& [got, want] : pairs) {
    worst = std::max(worst, (abs(got - want) / abs(want)).to_double());
  }
  return worst;
}

void criterion_1() {
  double worst = 0.0;
  for (const BigReal& mu : mu_values()) {
    worst = std::max(worst, max_rel_err_anchors(mu));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "[max rel err %.2e]", worst);
  report(1, "coefficient_anchors", worst < 1e-20, buf);
}

void criterion_2() {
  bool pass = true;
  double worst_taylor = 0.0;
  double worst_ode = 0.0;
  std::mt19937 rng(20260823);
  std::uniform_real_distribution<double> d(-0.6, 0.6);
  for (const BigReal& mu : mu_values()) {
    auto t = build_coeff_table(mu, 2, 12);
    for (long m = 0; m <= 2; ++m) {
      auto tay = A_fn(m, mu).taylor(12);
      for (long n = 0; n <= 12; ++n) {
        double err = (abs(t.at(m, n) - tay[n]) /
                      (abs(tay[n]) + BigReal(1L, kPrec))).to_double();
        worst_taylor = std::max(worst_taylor, err);
      }
    }
    std::vector<BigComplex> taus;
    for (int i = 0; i < 10; ++i) taus.push_back(ci(d(rng), d(rng)));
    auto rep = verify_A_odes(mu, taus, BigReal("1e-30", kPrec));
    pass = pass && rep.pass;
    worst_ode = std::max(worst_ode, rep.max_residual.to_double());
  }
  pass = pass && worst_taylor < 1e-30 && worst_ode < 1e-30;
  char buf[96];
  std::snprintf(buf, sizeof buf, "[taylor %.1e, ode %.1e]", worst_taylor,
                worst_ode);
  report(2, "transasymptotic_sums", pass, buf);
}

void criterion_3() {
  BigReal mu(1L, kPrec);
  auto coeffs = build_inner_coeffs(mu, 1000);
  BigComplex two(2, 0, kPrec);
  auto est = [&](long n) {
    return two * lambda_ratio(coeffs, n) - lambda_ratio(coeffs, n / 2);
  };
  double drift = abs(est(1000) - est(500)).to_double();

  std::vector<double> sweep;
  for (double m : {0.3, 0.4, 0.5}) {
    auto data = compute_lambda(BigReal(m, kPrec), 400);
    sweep.push_back(abs(data.lambda).to_double());
  }
  bool increasing_below_half = sweep[0] > sweep[1] && sweep[1] > sweep[2];
  char buf[96];
  std::snprintf(buf, sizeof buf, "[drift %.1e, |L| %.3f>%.3f>%.3f]", drift,
                sweep[0], sweep[1], sweep[2]);
  report(3, "lambda_convergence", drift < 1e-6 && increasing_below_half, buf);
}

void criterion_4() {
  BigReal mu(1L, kPrec);
  auto table = build_outer_series(mu, 45);
  BigComplex z(0, -2, kPrec);
  BigComplex chi = singulant(z, mu);
  BigComplex gamma(BigReal(0.5, kPrec), BigReal(-0.25, kPrec));
  BigComplex one(1, 0, kPrec);
  bool pass = true;
  double at40 = 0.0;
  for (long n = 40; n <= 45; ++n) {
    BigComplex ratio =
        table.term(n).evaluate(z) * chi /
        ((BigComplex(n, 0, kPrec) + gamma - one) * table.term(n - 1).evaluate(z));
    double dev = abs(ratio - one).to_double();
    if (n == 40) at40 = dev;
    pass = pass && dev < 0.05;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "[|ratio-1| at n=40: %.2e]", at40);
  report(4, "late_order_ratio", pass, buf);
}

void criterion_5() {
  BigReal mu(1L, kPrec);
  auto table = build_outer_series(mu, 40);
  auto data = compute_lambda(mu, 1000);
  auto sol = build_linear_solution(mu, PrecisionConfig(kPrec));
  BigReal theta = pi(kPrec) / 8L;
  std::vector<double> rel;
  for (long r : {4L, 5L, 6L}) {
    BigComplex xi(BigReal(r, kPrec) * cos(theta), BigReal(r, kPrec) * sin(theta));
    BigComplex remainder =
        oracle_u(sol, xi) - evaluate_truncated(table, xi, OptimalTruncation{});
    BigComplex ue = u_exp(xi, data);
    rel.push_back((abs(remainder - ue) / abs(ue)).to_double());
  }
  bool pass = rel[0] < 0.3 && rel[1] < rel[0] && rel[2] < rel[1];
  char buf[96];
  std::snprintf(buf, sizeof buf, "[rel err %.3f > %.3f > %.3f]", rel[0], rel[1],
                rel[2]);
  report(5, "stokes_remainder", pass, buf);
}

void build_sweeps() {
  for (const BigReal& mu : mu_values()) {
    auto data = compute_lambda(mu, 1000);
    auto sol = build_linear_solution(mu, PrecisionConfig(kPrec));
    Sweep s;
    for (RootKind kind : {RootKind::pole, RootKind::zero}) {
      auto preds = kind == RootKind::pole
                       ? predict_poles(mu, data, 2, 12, PredictionOrder::full)
                       : predict_zeros(mu, data, 2, 12);
      auto roots = find_roots(sol, kind, preds);
      auto& errs = kind == RootKind::pole ? s.pole_err : s.zero_err;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        double e = (i < roots.size() && roots[i].converged)
                       ? abs(roots[i].xi - preds[i].xi).to_double()
                       : 1e9;
        errs.push_back(e);
      }
      (kind == RootKind::pole ? s.pole_roots : s.zero_roots) = roots;
    }
    g_sweeps.emplace(mu.to_double(), std::move(s));
  }
}

void criterion_6() {
  bool pass = true;
  double worst_tail = 0.0;
  for (const auto& [mu, s] : g_sweeps) {
    for (std::size_t i = 1; i < s.pole_err.size(); ++i) {
      pass = pass && s.pole_err[i] < s.pole_err[i - 1];
    }
    // M = 10, 11, 12 are indices 8..10.
    for (std::size_t i = 8; i < s.pole_err.size(); ++i) {
      pass = pass && s.pole_err[i] < 1e-2;
      worst_tail = std::max(worst_tail, s.pole_err[i]);
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "[decay strict, max err M>=10: %.1e]",
                worst_tail);
  report(6, "pole_prediction_error", pass, buf);
}

void criterion_7() {
  bool pass = true;
  for (const auto& [mu, s] : g_sweeps) {
    for (std::size_t i = 1; i < s.zero_err.size(); ++i) {
      pass = pass && s.zero_err[i] < s.zero_err[i - 1];
    }
    for (std::size_t i = 0; i < s.zero_err.size(); ++i) {
      pass = pass && s.pole_err[i] < s.zero_err[i];
    }
    // Interlacing: sorted by modulus, oracle poles and zeros alternate.
    std::vector<std::pair<double, int>> all;
    for (const auto& r : s.pole_roots) {
      if (r.converged) all.emplace_back(abs(r.xi).to_double(), 0);
    }
    for (const auto& r : s.zero_roots) {
      if (r.converged) all.emplace_back(abs(r.xi).to_double(), 1);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i) {
      pass = pass && all[i].second != all[i - 1].second;
    }
  }
  report(7, "zero_prediction_error", pass,
         "[decay, pole<zero, interlaced moduli]");
}

void criterion_8() {
  const Sweep& s = g_sweeps.at(1.0);
  const RootRecord& last = s.pole_roots.back();
  double dev = std::abs(arg(last.xi).to_double() - std::atan(1.0));
  char buf[96];
  std::snprintf(buf, sizeof buf, "[|arg - pi/4| = %.4f rad at M=12]", dev);
  report(8, "leading_order_ray", last.converged && dev < 0.05, buf);
}

void criterion_9() {
  BigReal mu(1L, kPrec);
  auto sol = build_linear_solution(mu, PrecisionConfig(kPrec));

  // Riccati residual at 50 random points, derivative by central difference.
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  BigReal h("1e-20", kPrec);
  BigComplex hh(h, BigReal(0L, kPrec));
  BigComplex half_i(BigReal(0L, kPrec), BigReal(0.5, kPrec));
  double worst_res = 0.0;
  int n_pts = 0;
  while (n_pts < 50) {
    double x = d(rng), y = d(rng);
    if (x * x + y * y > 100.0 || x * x + y * y < 0.25) continue;
    ++n_pts;
    BigComplex xi = ci(x, y);
    BigComplex du = (oracle_u(sol, xi + hh) - oracle_u(sol, xi - hh)) / (h * 2L);
    BigComplex u = oracle_u(sol, xi);
    BigComplex res = (mu * 2L) * du - u * u + xi * u + half_i;
    worst_res = std::max(worst_res, abs(res).to_double());
  }

  // Far-field coefficients by polynomial fit in 1/xi^2 on the anchored
  // stretch of the negative imaginary axis.
  long fit_prec = 1024;
  BigReal mu_hi(1L, fit_prec);
  auto sol_hi = build_linear_solution(mu_hi, PrecisionConfig(fit_prec));
  const int NP = 5;
  long pts[NP] = {14, 18, 22, 26, 28};
  std::vector<std::vector<BigComplex>> A(NP, std::vector<BigComplex>(NP));
  std::vector<BigComplex> b(NP);
  for (int i = 0; i < NP; ++i) {
    BigComplex xi(0L, -pts[i], fit_prec);
    BigComplex x = BigComplex(1, 0, fit_prec) / (xi * xi);
    BigComplex pw(1, 0, fit_prec);
    for (int j = 0; j < NP; ++j) {
      A[i][j] = pw;
      pw *= x;
    }
    b[i] = oracle_u(sol_hi, xi) * xi;
  }
  for (int k = 0; k < NP; ++k) {
    int p = k;
    for (int i = k + 1; i < NP; ++i) {
      if (abs(A[i][k]) > abs(A[p][k])) p = i;
    }
    std::swap(A[p], A[k]);
    std::swap(b[p], b[k]);
    for (int i = k + 1; i < NP; ++i) {
      BigComplex f = A[i][k] / A[k][k];
      for (int j = k; j < NP; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  for (int k = NP - 1; k >= 0; --k) {
    for (int j = k + 1; j < NP; ++j) b[k] -= A[k][j] * b[j];
    b[k] /= A[k][k];
  }
  std::vector<BigComplex> want = {ci(0, -0.5, fit_prec), ci(-0.25, -1, fit_prec),
                                  ci(-2.5, -5.75, fit_prec)};
  double worst_fit = 0.0;
  for (int j = 0; j < 3; ++j) {
    worst_fit = std::max(worst_fit,
                         (abs(b[j] - want[j]) / abs(want[j])).to_double());
  }

  // Root stability under precision doubling.
  LinearSolution sol_512 =
      build_linear_solution(BigReal(1L, 512), PrecisionConfig(512));
  auto r_lo = find_roots(sol, RootKind::pole,
                         std::vector<BigComplex>{ci(3.6, 4.3)});
  auto r_hi = find_roots(sol_512, RootKind::pole,
                         std::vector<BigComplex>{ci(3.6, 4.3, 512)});
  double shift = abs(r_lo[0].xi - r_hi[0].xi).to_double();
  bool stable = r_lo[0].converged && r_hi[0].converged && shift < 1e-20;

  bool pass = worst_res < 1e-30 && worst_fit < 5e-4 && stable;
  char buf[120];
  std::snprintf(buf, sizeof buf, "[riccati %.1e, far-field %.1e, shift %.1e]",
                worst_res, worst_fit, shift);
  report(9, "oracle_self_consistency", pass, buf);
}

void criterion_10() {
  BigReal mu(1L, kPrec);
  auto sol = build_linear_solution(mu, PrecisionConfig(kPrec));
  auto grid = phase_grid(sol, -8, 8, -8, 0, 129, 65);
  auto wp = find_winding_points(grid);
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%zu winding points in [-8,8]x[-8,0]]",
                wp.size());
  report(10, "no_pole_sector", wp.empty(), buf);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  build_sweeps();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("ACCEPTANCE: all 10 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
  return 1;
}
