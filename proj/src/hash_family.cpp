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

#include "rs2/hash_family.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace rs2 {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) {
      r = mul_mod(r, b, m);
    }
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) {
    return false;
  }
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x % q == 0) {
      return x == q;
    }
  }
  std::uint64_t d = x - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t x) {
  if (x <= 2) {
    return 2;
  }
  for (std::uint64_t c = x | 1;; c += 2) {
    if (is_prime(c)) {
      return c;
    }
  }
}

void HashSpec::validate() const {
  if (k < 1) {
    throw std::invalid_argument("hash spec: k must be >= 1");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("hash spec: p = " + std::to_string(p) + " is not prime");
  }
  if (p < domain || p < range) {
    throw std::invalid_argument("hash spec: p must be >= domain and range");
  }
}

unsigned HashSpec::seed_bits() const { return k * static_cast<unsigned>(std::bit_width(p - 1)); }

u128 HashSpec::family_size() const {
  u128 size = 1;
  const u128 cap = ~static_cast<u128>(0);
  for (unsigned i = 0; i < k; ++i) {
    if (size > cap / p) {
      return cap;
    }
    size *= p;
  }
  return size;
}

std::string HashSpec::str() const { return "k=" + std::to_string(k) + ",p=" + std::to_string(p); }

HashSpec make_spec(unsigned k, std::uint64_t domain, std::uint64_t range) {
  HashSpec spec{k, next_prime(std::max(domain, range)), domain, range};
  spec.validate();
  return spec;
}

std::uint64_t evaluate(const HashSpec& spec, std::span<const std::uint64_t> seed, std::uint64_t x) {
  if (x >= spec.domain) {
    throw std::out_of_range("hash input " + std::to_string(x) + " outside domain " + std::to_string(spec.domain));
  }
  if (seed.size() != spec.k) {
    throw std::invalid_argument("seed length differs from k");
  }
  return eval_poly(seed, spec.p, x);
}

bool sample_indicator(const HashSpec& spec, std::span<const std::uint64_t> seed, std::uint64_t x, std::uint64_t threshold) {
  return evaluate(spec, seed, x) < threshold;
}

std::uint64_t threshold_for_probability(const HashSpec& spec, std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num > den) {
    throw std::invalid_argument("probability must lie in [0, 1]");
  }
  return static_cast<std::uint64_t>(static_cast<u128>(spec.p) * num / den);
}

std::uint64_t threshold_inv_sqrt(const HashSpec& spec, std::uint64_t d) {
  if (d == 0) {
    throw std::invalid_argument("threshold_inv_sqrt: d must be positive");
  }
  return isqrt(static_cast<u128>(spec.p) * spec.p / d);
}

std::uint64_t threshold_inv_power(const HashSpec& spec, std::uint64_t d, Rational r) {
  return floor_scaled_inv_power(spec.p, d, r);
}

Seed seed_at(const HashSpec& spec, u128 index) {
  Seed s(spec.k);
  for (unsigned i = spec.k; i-- > 0;) {
    s[i] = static_cast<std::uint64_t>(index % spec.p);
    index /= spec.p;
  }
  return s;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RS2_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) {
      return v;
    }
  }
  return std::uint64_t{1} << 24;
}

FamilyEnumerator::FamilyEnumerator(const HashSpec& spec, std::uint64_t budget) : spec_(spec) {
  const u128 size = spec.family_size();
  if (size > budget) {
    throw BudgetExceeded("family of size p^k for " + spec.str() + " exceeds budget " + std::to_string(budget));
  }
  size_ = static_cast<std::uint64_t>(size);
  current_.assign(spec.k, 0);
}

bool FamilyEnumerator::next(Seed& out) {
  if (produced_ == size_) {
    return false;
  }
  if (produced_ > 0) {
    for (unsigned i = spec_.k; i-- > 0;) {
      if (++current_[i] < spec_.p) {
        break;
      }
      current_[i] = 0;
    }
  }
  ++produced_;
  out = current_;
  return true;
}

}  // namespace rs2
