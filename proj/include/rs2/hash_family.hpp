/*
Copyright 2026 The rs2 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include "rs2/exact_math.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs2 {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t x);
/// Smallest prime >= x.
std::uint64_t next_prime(std::uint64_t x);

/// Polynomial hash family of degree k-1 over Z_p.
struct HashSpec {
  unsigned k = 2;
  std::uint64_t p = 2;
  std::uint64_t domain = 1;
  std::uint64_t range = 1;

  /// Throws std::invalid_argument on a non-prime p or p below domain/range.
  void validate() const;
  [[nodiscard]] unsigned seed_bits() const;
  /// p^k, saturating at 2^128 - 1.
  [[nodiscard]] u128 family_size() const;
  [[nodiscard]] std::string str() const;
};

/// Spec over the smallest prime >= max(domain, range).
HashSpec make_spec(unsigned k, std::uint64_t domain, std::uint64_t range);

using Seed = std::vector<std::uint64_t>;

/// Horner evaluation without domain checks.
inline std::uint64_t eval_poly(std::span<const std::uint64_t> a, std::uint64_t p, std::uint64_t x) {
  u128 acc = 0;
  const u128 xm = x % p;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = (acc * xm + a[i]) % p;
  }
  return static_cast<std::uint64_t>(acc);
}

/// (sum_i a_i x^i) mod p; throws std::out_of_range when x >= domain.
std::uint64_t evaluate(const HashSpec& spec, std::span<const std::uint64_t> seed, std::uint64_t x);

bool sample_indicator(const HashSpec& spec, std::span<const std::uint64_t> seed, std::uint64_t x, std::uint64_t threshold);

/// floor(p * num / den).
std::uint64_t threshold_for_probability(const HashSpec& spec, std::uint64_t num, std::uint64_t den);
/// floor(p / sqrt(d)).
std::uint64_t threshold_inv_sqrt(const HashSpec& spec, std::uint64_t d);
/// floor(p / d^r).
std::uint64_t threshold_inv_power(const HashSpec& spec, std::uint64_t d, Rational r);

/// Seed with lexicographic rank `index`, a_0 most significant.
Seed seed_at(const HashSpec& spec, u128 index);

/// Enumeration budget: RS2_BUDGET if set, otherwise 2^24.
std::uint64_t default_budget();

class FamilyEnumerator {
 public:
  /// Throws BudgetExceeded when p^k > budget.
  FamilyEnumerator(const HashSpec& spec, std::uint64_t budget);

  [[nodiscard]] std::uint64_t size() const { return size_; }
  /// Advances to the next seed; false once all p^k seeds were produced.
  bool next(Seed& out);

 private:
  HashSpec spec_;
  std::uint64_t size_ = 0;
  std::uint64_t produced_ = 0;
  Seed current_;
};

}  // namespace rs2
