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

#include <cstdint>
#include <string>
#include <string_view>

namespace rs2 {

using u128 = unsigned __int128;

/// Non-negative rational exponent or constant.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] std::string str() const;

  /// Accepts "a/b", an integer, or a plain decimal such as "0.05".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// floor(sqrt(x)) for 128-bit inputs.
std::uint64_t isqrt(u128 x);

/// floor(c * d^(-r)): the largest T with T^b * d^a <= c^b for r = a/b.
std::uint64_t floor_scaled_inv_power(std::uint64_t c, std::uint64_t d, Rational r);

/// ceil(c * d^r): the smallest T with T^b >= c^b * d^a for r = a/b.
std::uint64_t ceil_scaled_power(std::uint64_t c, std::uint64_t d, Rational r);

/// floor(d^r).
std::uint64_t floor_power(std::uint64_t d, Rational r);

/// x < d^r, decided exactly (x^b < d^a).
bool less_than_power(std::uint64_t x, std::uint64_t d, Rational r);

/// x > d^r, decided exactly (x^b > d^a).
bool greater_than_power(std::uint64_t x, std::uint64_t d, Rational r);

/// x * d^r <= bound, decided exactly ((x^b) * d^a <= bound^b).
bool scaled_power_at_most(std::uint64_t x, std::uint64_t d, Rational r, std::uint64_t bound);

/// ceil(2^frac_bits * 2^(e * r) / m): the fixed-point weight 2^(e*r)/m rounded up.
std::uint64_t ceil_fixed_pow2_ratio(unsigned frac_bits, std::uint64_t e, Rational r, std::uint64_t m);

/// Smallest integer c >= 0 with base^c >= target (target given as a double; base >= 2).
unsigned smallest_exponent_reaching(double base, double target);

}  // namespace rs2
