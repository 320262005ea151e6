// SPDX-License-Identifier: Apache-2.0
#include "transasym/lambda_cache.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace transasym {

namespace {

// Hex float rendering round-trips the binary value exactly.
std::string to_hex(const BigReal& x) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", x.raw());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigReal from_hex(const std::string& s, long prec_bits) {
  BigReal x(prec_bits);
  if (mpfr_set_str(x.raw(), s.c_str(), 16, MPFR_RNDN) != 0) {
    throw std::invalid_argument("LambdaCache: bad hex float '" + s + "'");
  }
  return x;
}

}  // namespace

std::optional<LateOrderData> LambdaCache::lookup(const BigReal& mu,
                                                 long prec_bits,
                                                 long n_max) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::string mu_hex = to_hex(mu);
  std::string line;
  std::optional<LateOrderData> found;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    if (j.value("prec_bits", -1L) != prec_bits) continue;
    if (j.value("n_max", -1L) != n_max) continue;
    if (j.value("mu_hex", std::string()) != mu_hex) continue;
    LateOrderData data;
    data.mu = mu;
    data.lambda = BigComplex(
        from_hex(j.at("lambda_re_hex").get<std::string>(), prec_bits),
        from_hex(j.at("lambda_im_hex").get<std::string>(), prec_bits));
    data.gamma = BigComplex(
        BigReal(0.5, prec_bits),
        BigReal(-1L, prec_bits) / (BigReal(4L, prec_bits) * mu));
    data.n_used = n_max;
    data.converged_digits = j.value("converged_digits", 0L);
    found = std::move(data);  // last record wins
  }
  return found;
}

void LambdaCache::store(const LateOrderData& data) {
  nlohmann::json j;
  j["mu"] = data.mu.to_string();
  j["mu_hex"] = to_hex(data.mu);
  j["prec_bits"] = data.mu.prec_bits();
  j["n_max"] = data.n_used;
  j["lambda_re"] = data.lambda.re.to_string();
  j["lambda_im"] = data.lambda.im.to_string();
  j["lambda_re_hex"] = to_hex(data.lambda.re);
  j["lambda_im_hex"] = to_hex(data.lambda.im);
  j["converged_digits"] = data.converged_digits;
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    throw std::runtime_error("LambdaCache: cannot open " + path_.string());
  }
  out << j.dump() << '\n';
}

LateOrderData cached_lambda(const BigReal& mu, long n_max, LambdaCache* cache) {
  if (cache) {
    auto hit = cache->lookup(mu, mu.prec_bits(), n_max);
    if (hit) return *hit;
  }
  LateOrderData data = compute_lambda(mu, n_max);
  if (cache) cache->store(data);
  return data;
}

}  // namespace transasym
