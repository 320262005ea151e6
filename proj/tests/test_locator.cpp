// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <transasym/locator.hpp>

#include <algorithm>

using namespace transasym;

namespace {

constexpr long kPrec = 256;

LateOrderData lambda_data() {
  static LateOrderData data = compute_lambda(BigReal(1L, kPrec), 400);
  return data;
}

}  // namespace

TEST_CASE("leading-order pole sits on the diagonal") {
  BigReal mu(1L, kPrec);
  auto preds = predict_poles(mu, lambda_data(), 1, 1, PredictionOrder::leading);
  REQUIRE(preds.size() == 1);
  // xi^2 = 8 pi i M: xi = sqrt(8 pi) e^(i pi/4) = 3.5449(1 + i).
  CHECK(preds[0].xi.re.to_double() == doctest::Approx(3.5449077).epsilon(1e-5));
  CHECK(preds[0].xi.im.to_double() == doctest::Approx(3.5449077).epsilon(1e-5));
  CHECK(preds[0].quadrant == 1);
  CHECK(preds[0].M == 1);
}

TEST_CASE("negative M mirrors into the second quadrant") {
  BigReal mu(1L, kPrec);
  auto preds =
      predict_poles(mu, lambda_data(), -1, -1, PredictionOrder::leading);
  REQUIRE(preds.size() == 1);
  CHECK(preds[0].xi.re.to_double() == doctest::Approx(-3.5449077).epsilon(1e-5));
  CHECK(preds[0].xi.im.to_double() == doctest::Approx(3.5449077).epsilon(1e-5));
  CHECK(preds[0].quadrant == 2);
}

TEST_CASE("all predictions land in the upper half-plane") {
  BigReal mu(0.5, kPrec);
  auto data = compute_lambda(mu, 400);
  for (auto order : {PredictionOrder::leading, PredictionOrder::log_corrected,
                     PredictionOrder::full}) {
    for (const auto& range : {std::pair{-6L, -1L}, std::pair{1L, 6L}}) {
      for (const auto& p :
           predict_poles(mu, data, range.first, range.second, order)) {
        CHECK(p.xi.im > BigReal(0L, kPrec));
        CHECK(abs(p.xi * p.xi - p.xi_squared) <
              BigReal("1e-60", kPrec) * abs(p.xi_squared));
      }
    }
    if (order == PredictionOrder::log_corrected) continue;
    for (const auto& p : predict_zeros(mu, data, 2, 6, order)) {
      CHECK(p.xi.im > BigReal(0L, kPrec));
    }
  }
  CHECK(predict_poles(mu, data, 1, 4, PredictionOrder::full).size() == 4);
}

TEST_CASE("tau self-consistency residual shrinks along the pole family") {
  BigReal mu(1L, kPrec);
  auto data = lambda_data();
  auto params = TransseriesParams::active(data);
  auto preds = predict_poles(mu, data, 2, 10, PredictionOrder::full);
  BigReal prev;
  bool first = true;
  for (const auto& p : preds) {
    BigReal r = residual_at_prediction(p, params);
    if (!first) CHECK(r < prev);
    prev = r;
    first = false;
  }
  CHECK(prev < BigReal("1e-3", kPrec));
}

TEST_CASE("full order beats leading order on the tau residual") {
  BigReal mu(1L, kPrec);
  auto data = lambda_data();
  auto params = TransseriesParams::active(data);
  for (long M : {3L, 6L, 9L}) {
    auto full = predict_poles(mu, data, M, M, PredictionOrder::full);
    auto lead = predict_poles(mu, data, M, M, PredictionOrder::leading);
    CHECK(residual_at_prediction(full[0], params) <
          residual_at_prediction(lead[0], params));
  }
}

TEST_CASE("zero residual uses its own inversion constants") {
  BigReal mu(1L, kPrec);
  auto data = lambda_data();
  auto params = TransseriesParams::active(data);
  auto zeros = predict_zeros(mu, data, 2, 10);
  BigReal prev;
  bool first = true;
  for (const auto& z : zeros) {
    CHECK(z.kind == RootKind::zero);
    BigReal r = residual_at_prediction(z, params);
    if (!first) CHECK(r < prev);
    prev = r;
    first = false;
  }
}

TEST_CASE("predicted poles and zeros interlace in modulus") {
  BigReal mu(1L, kPrec);
  auto data = lambda_data();
  auto poles = predict_poles(mu, data, 2, 10, PredictionOrder::full);
  auto zeros = predict_zeros(mu, data, 2, 10);
  std::vector<std::pair<double, RootKind>> all;
  for (const auto& p : poles) all.emplace_back(abs(p.xi).to_double(), p.kind);
  for (const auto& z : zeros) all.emplace_back(abs(z.xi).to_double(), z.kind);
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i].second != all[i - 1].second);
  }
}

TEST_CASE("series constants and argument validation") {
  BigReal mu(1L, kPrec);
  auto ps = pole_series(mu);
  CHECK(ps.tau0 == BigComplex(-1, 0, kPrec));
  // tau1 = -i/2 + 1/(8 mu) - 2 mu = -15/8 - i/2 at mu = 1.
  CHECK(abs(ps.tau1 - BigComplex(BigReal(-1.875, kPrec), BigReal(-0.5, kPrec))) <
        BigReal("1e-70", kPrec));
  auto zs = zero_series(mu);
  CHECK(abs(zs.tau1 - BigComplex(BigReal(0L, kPrec), BigReal(0.5, kPrec))) <
        BigReal("1e-70", kPrec));
  CHECK(root_kind_name(RootKind::pole) == "pole");
  CHECK(prediction_order_name(PredictionOrder::full) == "full");
  CHECK_THROWS_AS(predict_poles(mu, lambda_data(), 0, 0, PredictionOrder::full),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict_poles(mu, lambda_data(), 3, 2, PredictionOrder::full),
                  std::invalid_argument);
}
