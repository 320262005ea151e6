// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/locator.hpp"

#include <optional>
#include <vector>

namespace transasym {

/// Thrown when catastrophic cancellation in a series sum exhausts the
/// working precision; retry with at least `needed_bits`.
struct PrecisionExhaustedError : std::runtime_error {
  PrecisionExhaustedError(const std::string& what, long needed)
      : std::runtime_error(what), needed_bits(needed) {}
  long needed_bits;
};

/// Kummer confluent hypergeometric M(a,b,z) by direct series, summed until
/// |term| < series_tol * |partial sum|. Tracks the largest partial sum to
/// guard against cancellation.
BigComplex kummer_m(const BigComplex& a, const BigComplex& b,
                    const BigComplex& z, const PrecisionConfig& cfg);

/// Bits needed to evaluate w near xi: cancellation in the Kummer sums grows
/// like e^{|xi|^2/4mu}.
long required_prec_bits(const BigReal& xi_abs, const BigReal& mu);

/// w(xi) = c_even M(-i/8mu, 1/2, s) + c_odd xi M(1/2 - i/8mu, 3/2, s) with
/// s = -xi^2/4mu solves 2 mu^2 w'' + mu xi w' - (i/4) w = 0; the coefficient
/// ratio enforces the far-field behaviour U ~ -i/(2 xi) on the negative
/// imaginary axis, where U = -2 mu w'/w.
struct LinearSolution {
  BigReal mu;
  BigComplex c_even;
  BigComplex c_odd;
  PrecisionConfig cfg;
  BigReal fit_residual;  // anchor disagreement of the two-point fit
};

LinearSolution build_linear_solution(const BigReal& mu,
                                     const PrecisionConfig& cfg);

/// w, w' at xi; w'' available through the ODE.
struct WValue {
  BigComplex w;
  BigComplex dw;
};
WValue eval_w(const LinearSolution& sol, const BigComplex& xi);

/// U(xi) = -2 mu w'/w.
BigComplex oracle_u(const LinearSolution& sol, const BigComplex& xi);

struct RootRecord {
  RootKind kind;
  BigComplex xi;
  long newton_iters = 0;
  BigReal residual;
  std::optional<long> matched_M;
  bool converged = false;
};

/// Newton iteration on f = w (poles of U) or f = w' (zeros of U), seeded
/// from asymptotic predictions; converged roots are deduplicated at 1e-6.
std::vector<RootRecord> find_roots(const LinearSolution& sol, RootKind kind,
                                   const std::vector<BigComplex>& seeds);

/// find_roots seeded from predictions, with matched_M assigned by nearest
/// prediction.
std::vector<RootRecord> find_roots(const LinearSolution& sol, RootKind kind,
                                   const std::vector<Prediction>& preds);

/// Phase samples arg U on a rectangular grid; quiet NaN marks points where
/// w vanishes to working precision.
struct PhaseGrid {
  double x_min, x_max, y_min, y_max;
  long nx, ny;
  std::vector<double> phase;  // row-major, index = iy*nx + ix

  double at(long ix, long iy) const { return phase[iy * nx + ix]; }
  double x(long ix) const;
  double y(long iy) const;
};

PhaseGrid phase_grid(const LinearSolution& sol, double x_min, double x_max,
                     double y_min, double y_max, long nx, long ny);

struct WindingPoint {
  double x, y;
  int winding;  // +1 zero, -1 pole
};

/// Plaquette-wise winding of the phase field; nonzero cells contain a zero
/// or pole of U.
std::vector<WindingPoint> find_winding_points(const PhaseGrid& grid);

}  // namespace transasym
