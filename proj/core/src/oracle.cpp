// SPDX-License-Identifier: Apache-2.0
#include "transasym/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace transasym {

BigComplex kummer_m(const BigComplex& a, const BigComplex& b,
                    const BigComplex& z, const PrecisionConfig& cfg) {
  long prec = cfg.prec_bits;
  if (b.im.is_zero()) {
    BigReal bf = floor(b.re);
    if (bf == b.re && !(b.re > BigReal(0L, prec))) {
      throw std::domain_error("kummer_m: b is a nonpositive integer");
    }
  }
  BigComplex term(1, 0, prec);
  BigComplex sum = term;
  BigReal max_mag = abs(sum);
  const long k_cap = 100000;
  for (long k = 0; k < k_cap; ++k) {
    BigComplex kk(static_cast<long>(k), 0, prec);
    term = term * (a + kk) / (b + kk) * z / BigReal(k + 1, prec);
    sum += term;
    BigReal mag = abs(sum);
    if (mag > max_mag) max_mag = mag;
    if (abs(term) < cfg.series_tol * (mag + BigReal(1L, prec))) break;
    if (k == k_cap - 1) {
      throw std::runtime_error("kummer_m: series did not converge");
    }
  }
  // Cancellation guard: lost bits = log2(max partial sum / result).
  if (!sum.is_zero()) {
    BigReal lost = log2(max_mag / (abs(sum) + pow2(-prec, prec)));
    long needed = lost.to_long() + 32;
    if (needed > prec) {
      throw PrecisionExhaustedError(
          "kummer_m: cancellation exceeds working precision", needed + 32);
    }
  }
  return sum;
}

long required_prec_bits(const BigReal& xi_abs, const BigReal& mu) {
  // Cancellation digits scale with |s| = |xi|^2/4mu; log2(e) ~ 1.4427.
  double s = xi_abs.to_double() * xi_abs.to_double() / (4.0 * mu.to_double());
  long bits = static_cast<long>(s * 1.4427) + 96;
  return std::max(bits, BigReal::kMinPrecBits);
}

namespace {

struct KummerParams {
  BigComplex a_even, a_odd;
  BigComplex b_even, b_odd;
};

KummerParams params_for(const BigReal& mu, long prec) {
  BigReal eighth = BigReal(1L, prec) / (BigReal(8L, prec) * mu);
  KummerParams p;
  p.a_even = BigComplex(BigReal(0L, prec), -eighth);
  p.a_odd = BigComplex(BigReal(0.5, prec), -eighth);
  p.b_even = BigComplex(BigReal(0.5, prec), BigReal(0L, prec));
  p.b_odd = BigComplex(BigReal(1.5, prec), BigReal(0L, prec));
  return p;
}

// Even/odd basis values and xi-derivatives at xi, via s = -xi^2/4mu and
// M'(a,b,s) = (a/b) M(a+1,b+1,s).
struct Basis {
  BigComplex even, deven;
  BigComplex odd, dodd;
};

Basis basis_at(const BigReal& mu, const PrecisionConfig& cfg,
               const BigComplex& xi) {
  long prec = cfg.prec_bits;
  KummerParams p = params_for(mu, prec);
  BigComplex s = -(xi * xi) / (BigReal(4L, prec) * mu);
  BigComplex ds = -xi / (BigReal(2L, prec) * mu);  // ds/dxi

  BigComplex one(1, 0, prec);
  BigComplex me = kummer_m(p.a_even, p.b_even, s, cfg);
  BigComplex me_s = p.a_even / p.b_even *
                    kummer_m(p.a_even + one, p.b_even + one, s, cfg);
  BigComplex mo = kummer_m(p.a_odd, p.b_odd, s, cfg);
  BigComplex mo_s = p.a_odd / p.b_odd *
                    kummer_m(p.a_odd + one, p.b_odd + one, s, cfg);

  Basis b;
  b.even = me;
  b.deven = me_s * ds;
  b.odd = xi * mo;
  b.dodd = mo + xi * mo_s * ds;
  return b;
}

// Three-term far-field target -i/(2 xi) + a2/xi^3 + a3/xi^5.
BigComplex far_field_target(const BigReal& mu, const BigComplex& xi) {
  long prec = mu.prec_bits();
  BigComplex a1(BigReal(0L, prec), BigReal(-0.5, prec));
  BigComplex a2(BigReal(-0.25, prec), -mu);
  BigComplex a3(BigReal(-2.5, prec) * mu,
                BigReal(0.25, prec) - BigReal(6L, prec) * mu * mu);
  BigComplex inv_xi2 = BigComplex(1, 0, prec) / (xi * xi);
  return (a1 + (a2 + a3 * inv_xi2) * inv_xi2) / xi;
}

// Coefficient ratio c_odd/c_even from the anchor condition U(xi) = target.
BigComplex anchor_ratio(const BigReal& mu, const PrecisionConfig& cfg,
                        const BigComplex& xi) {
  long prec = cfg.prec_bits;
  Basis b = basis_at(mu, cfg, xi);
  BigComplex t = far_field_target(mu, xi);
  BigReal two_mu = BigReal(2L, prec) * mu;
  // c_e (2mu E' + t E) + c_o (2mu O' + t O) = 0
  return -(to_complex(two_mu) * b.deven + t * b.even) /
         (to_complex(two_mu) * b.dodd + t * b.odd);
}

}  // namespace

LinearSolution build_linear_solution(const BigReal& mu,
                                     const PrecisionConfig& cfg) {
  if (!(mu > BigReal(0L, cfg.prec_bits))) {
    throw std::invalid_argument("build_linear_solution: mu must be positive");
  }
  long prec = cfg.prec_bits;
  BigReal mu_p = mu + BigReal(0L, prec);  // carry working precision

  BigComplex anchor1(BigReal(0L, prec), BigReal(-20L, prec));
  BigComplex anchor2(BigReal(0L, prec), BigReal(-30L, prec));
  BigComplex rho1 = anchor_ratio(mu_p, cfg, anchor1);
  BigComplex rho2 = anchor_ratio(mu_p, cfg, anchor2);

  // The deeper anchor is more asymptotic; the other bounds the fit error.
  BigReal disagreement = abs(rho1 - rho2);
  BigReal scale = abs(rho2) + BigReal(1L, prec);
  if (disagreement / scale > BigReal(1e-3, prec)) {
    throw std::runtime_error(
        "build_linear_solution: far-field fit anchors disagree");
  }
  LinearSolution sol{mu_p, BigComplex(1, 0, prec), rho2, cfg, disagreement};
  return sol;
}

WValue eval_w(const LinearSolution& sol, const BigComplex& xi) {
  Basis b = basis_at(sol.mu, sol.cfg, xi);
  WValue v;
  v.w = sol.c_even * b.even + sol.c_odd * b.odd;
  v.dw = sol.c_even * b.deven + sol.c_odd * b.dodd;
  return v;
}

BigComplex oracle_u(const LinearSolution& sol, const BigComplex& xi) {
  long prec = sol.cfg.prec_bits;
  WValue v = eval_w(sol, xi);
  if (v.w.is_zero()) throw std::domain_error("oracle_u: pole of U");
  return to_complex(BigReal(-2L, prec) * sol.mu) * v.dw / v.w;
}

std::vector<RootRecord> find_roots(const LinearSolution& sol, RootKind kind,
                                   const std::vector<BigComplex>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("find_roots: no seeds");
  long prec = sol.cfg.prec_bits;
  long prec_digits = static_cast<long>(prec * 0.30103);
  BigReal step_tol = pow2(-(2 * prec) / 3, prec);
  BigReal residual_tol =
      exp(BigReal(-prec_digits / 3, prec) * log(BigReal(10L, prec)));
  BigReal dedup(1e-6, prec);

  std::vector<RootRecord> out;
  for (const BigComplex& seed : seeds) {
    BigComplex x = seed;
    RootRecord rec;
    rec.kind = kind;
    // f = w for poles of U, f = w' for zeros; w'' comes from the ODE.
    auto f_df = [&](const BigComplex& at) {
      WValue v = eval_w(sol, at);
      if (kind == RootKind::pole) return std::pair{v.w, v.dw};
      BigComplex ddw =
          -(at / (BigReal(2L, prec) * sol.mu)) * v.dw +
          BigComplex(BigReal(0L, prec),
                     BigReal(1L, prec) / (BigReal(8L, prec) * sol.mu * sol.mu)) *
              v.w;
      return std::pair{v.dw, ddw};
    };
    try {
      BigReal last_step(-1L, prec);
      for (long it = 0; it < 64; ++it) {
        auto [f, df] = f_df(x);
        if (df.is_zero()) break;
        BigComplex step = f / df;
        x -= step;
        rec.newton_iters = it + 1;
        BigReal mag = abs(step);
        if (mag < step_tol * (abs(x) + BigReal(1L, prec))) break;
        // Stagnation at the cancellation noise floor counts as converged;
        // the residual gate below still decides.
        if (it > 4 && !(last_step < BigReal(0L, prec)) && mag * 4L > last_step) {
          break;
        }
        last_step = mag;
      }
      auto [f, df] = f_df(x);
      rec.residual = df.is_zero() ? abs(f) : abs(f) / abs(df);
      rec.converged = rec.residual < residual_tol;
    } catch (const PrecisionExhaustedError&) {
      // Newton wandered into a region the working precision cannot resolve.
      rec.residual = BigReal(1L, prec);
      rec.converged = false;
    }
    rec.xi = x;
    if (rec.converged) {
      bool duplicate = false;
      for (const RootRecord& r : out) {
        if (r.converged && abs(r.xi - x) < dedup) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RootRecord> find_roots(const LinearSolution& sol, RootKind kind,
                                   const std::vector<Prediction>& preds) {
  std::vector<BigComplex> seeds;
  seeds.reserve(preds.size());
  for (const Prediction& p : preds) seeds.push_back(p.xi);
  std::vector<RootRecord> recs = find_roots(sol, kind, seeds);
  for (RootRecord& r : recs) {
    if (!r.converged) continue;
    BigReal best;
    for (const Prediction& p : preds) {
      BigReal d = abs(r.xi - p.xi);
      if (!r.matched_M || d < best) {
        best = d;
        r.matched_M = p.M;
      }
    }
  }
  return recs;
}

double PhaseGrid::x(long ix) const {
  return nx > 1 ? x_min + (x_max - x_min) * ix / double(nx - 1) : x_min;
}
double PhaseGrid::y(long iy) const {
  return ny > 1 ? y_min + (y_max - y_min) * iy / double(ny - 1) : y_min;
}

PhaseGrid phase_grid(const LinearSolution& sol, double x_min, double x_max,
                     double y_min, double y_max, long nx, long ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("phase_grid: need nx, ny >= 2");
  long prec = sol.cfg.prec_bits;
  PhaseGrid g{x_min, x_max, y_min, y_max, nx, ny, {}};
  g.phase.resize(nx * ny);
  for (long iy = 0; iy < ny; ++iy) {
    for (long ix = 0; ix < nx; ++ix) {
      BigComplex xi(BigReal(g.x(ix), prec), BigReal(g.y(iy), prec));
      double value;
      if (xi.is_zero()) {
        value = std::numeric_limits<double>::quiet_NaN();
      } else {
        WValue v = eval_w(sol, xi);
        if (v.w.is_zero()) {
          value = std::numeric_limits<double>::quiet_NaN();
        } else {
          BigComplex u = to_complex(BigReal(-2L, prec) * sol.mu) * v.dw / v.w;
          value = u.is_zero() ? std::numeric_limits<double>::quiet_NaN()
                              : arg(u).to_double();
        }
      }
      g.phase[iy * nx + ix] = value;
    }
  }
  return g;
}

namespace {
double wrap_diff(double a, double b) {
  double d = a - b;
  while (d > M_PI) d -= 2 * M_PI;
  while (d < -M_PI) d += 2 * M_PI;
  return d;
}
}  // namespace

std::vector<WindingPoint> find_winding_points(const PhaseGrid& grid) {
  std::vector<WindingPoint> out;
  for (long iy = 0; iy + 1 < grid.ny; ++iy) {
    for (long ix = 0; ix + 1 < grid.nx; ++ix) {
      double p00 = grid.at(ix, iy), p10 = grid.at(ix + 1, iy);
      double p11 = grid.at(ix + 1, iy + 1), p01 = grid.at(ix, iy + 1);
      if (std::isnan(p00) || std::isnan(p10) || std::isnan(p11) ||
          std::isnan(p01)) {
        continue;
      }
      double total = wrap_diff(p10, p00) + wrap_diff(p11, p10) +
                     wrap_diff(p01, p11) + wrap_diff(p00, p01);
      int w = static_cast<int>(std::lround(total / (2 * M_PI)));
      if (w != 0) {
        out.push_back({0.5 * (grid.x(ix) + grid.x(ix + 1)),
                       0.5 * (grid.y(iy) + grid.y(iy + 1)), w});
      }
    }
  }
  return out;
}

}  // namespace transasym
