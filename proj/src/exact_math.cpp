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

#include "rs2/exact_math.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rs2 {
namespace {

using boost::multiprecision::cpp_int;

cpp_int big(std::uint64_t x) { return cpp_int(x); }

cpp_int power(const cpp_int& base, std::uint64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

void check_rational(Rational r) {
  if (r.den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (r.den > 4096 || r.num > 4096 * r.den) {
    throw std::invalid_argument("rational exponent " + r.str() + " too large for exact evaluation");
  }
}

// Largest T in [0, 2^64) with T^b * den <= num.
std::uint64_t floor_root(const cpp_int& num, const cpp_int& den, std::uint64_t b) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::numeric_limits<std::uint64_t>::max();
  // Invariant: lo satisfies the predicate, every value > hi does not.
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2 + 1;
    if (power(big(mid), b) * den <= num) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// Smallest T >= 0 with T^b * den >= num.
std::uint64_t ceil_root(const cpp_int& num, const cpp_int& den, std::uint64_t b) {
  const std::uint64_t t = floor_root(num, den, b);
  if (power(big(t), b) * den >= num) {
    return t;
  }
  return t + 1;
}

}  // namespace

std::string Rational::str() const {
  if (den == 1) {
    return std::to_string(num);
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(std::string_view text) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  Rational r;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    r = {parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1))};
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 12) {
      throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    }
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      scale *= 10;
    }
    const std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part);
    const std::uint64_t f = frac.empty() ? 0 : parse_u64(frac);
    r = {whole * scale + f, scale};
  } else {
    r = {parse_u64(text), 1};
  }
  if (r.den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  const std::uint64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::uint64_t isqrt(u128 x) {
  if (x == 0) {
    return 0;
  }
  const long double est = std::sqrt(static_cast<long double>(x));
  auto r = est >= 0x1p64L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(est);
  // Correct the floating estimate in both directions.
  while (static_cast<u128>(r) * r > x) {
    --r;
  }
  while (r < std::numeric_limits<std::uint64_t>::max() &&
         static_cast<u128>(r + 1) * (r + 1) <= x) {
    ++r;
  }
  return r;
}

std::uint64_t floor_scaled_inv_power(std::uint64_t c, std::uint64_t d, Rational r) {
  check_rational(r);
  if (d == 0) {
    throw std::invalid_argument("floor_scaled_inv_power: d must be positive");
  }
  return floor_root(power(big(c), r.den), power(big(d), r.num), r.den);
}

std::uint64_t ceil_scaled_power(std::uint64_t c, std::uint64_t d, Rational r) {
  check_rational(r);
  return ceil_root(power(big(c), r.den) * power(big(d), r.num), cpp_int(1), r.den);
}

std::uint64_t floor_power(std::uint64_t d, Rational r) {
  check_rational(r);
  return floor_root(power(big(d), r.num), cpp_int(1), r.den);
}

bool less_than_power(std::uint64_t x, std::uint64_t d, Rational r) {
  check_rational(r);
  return power(big(x), r.den) < power(big(d), r.num);
}

bool greater_than_power(std::uint64_t x, std::uint64_t d, Rational r) {
  check_rational(r);
  return power(big(x), r.den) > power(big(d), r.num);
}

bool scaled_power_at_most(std::uint64_t x, std::uint64_t d, Rational r, std::uint64_t bound) {
  check_rational(r);
  return power(big(x), r.den) * power(big(d), r.num) <= power(big(bound), r.den);
}

std::uint64_t ceil_fixed_pow2_ratio(unsigned frac_bits, std::uint64_t e, Rational r, std::uint64_t m) {
  check_rational(r);
  if (m == 0) {
    throw std::invalid_argument("ceil_fixed_pow2_ratio: m must be positive");
  }
  // T >= 2^frac_bits * 2^(e*a/b) / m  <=>  (T*m)^b >= 2^(frac_bits*b + e*a).
  const cpp_int num = cpp_int(1) << static_cast<unsigned>(frac_bits * r.den + e * r.num);
  return ceil_root(num, power(big(m), r.den), r.den);
}

unsigned smallest_exponent_reaching(double base, double target) {
  if (base < 2.0) {
    throw std::invalid_argument("smallest_exponent_reaching: base must be >= 2");
  }
  unsigned c = 0;
  double acc = 1.0;
  while (acc < target) {
    acc *= base;
    ++c;
  }
  return c;
}

}  // namespace rs2
