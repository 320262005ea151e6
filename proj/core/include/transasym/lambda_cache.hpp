// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "transasym/lateorder.hpp"

#include <filesystem>
#include <optional>

namespace transasym {

/// JSON-lines persistence for Lambda results. One record per
/// (mu, prec_bits, n_max) key; mu is matched on its exact binary value, so a
/// record is never reused across precision changes. Appends are atomic at
/// the line level; concurrent readers are safe.
class LambdaCache {
 public:
  explicit LambdaCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  std::optional<LateOrderData> lookup(const BigReal& mu, long prec_bits,
                                      long n_max) const;
  void store(const LateOrderData& data);

 private:
  std::filesystem::path path_;
};

/// compute_lambda with read-through caching; cache may be null.
LateOrderData cached_lambda(const BigReal& mu, long n_max, LambdaCache* cache);

}  // namespace transasym
