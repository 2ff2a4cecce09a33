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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs2 {

class ModelViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Regime : std::uint8_t { Linear, Sublinear };

struct MpcConfig {
  Regime regime = Regime::Linear;
  Rational alpha{1, 2};
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t c_lin = 8;
  std::uint64_t c_sub = 4;
  std::uint64_t c_global = 8;
  std::uint64_t c_derand = 1;
  std::uint64_t c_prim = 1;

  static MpcConfig linear(std::uint64_t n, std::uint64_t m);
  static MpcConfig sublinear(std::uint64_t n, std::uint64_t m, Rational alpha);

  /// Machine memory S in words: c_lin n, or ceil(c_sub n^alpha).
  [[nodiscard]] std::uint64_t local_memory() const;
  [[nodiscard]] std::uint64_t global_cap() const { return c_global * (n + m); }
  [[nodiscard]] std::uint64_t machines() const;
};

enum class Category : std::uint8_t { Sampling, Gathering, Derandomization, Mis, Primitives, Coloring };
inline constexpr std::size_t kCategoryCount = 6;
const char* to_string(Category c);

enum class Primitive : std::uint8_t { DegreeComputation, NeighborhoodArrangement, SubgraphCollection, Sort, Aggregate };
const char* to_string(Primitive p);

struct LedgerEntry {
  Category category;
  std::string what;
  std::uint64_t rounds;
};

class RoundLedger {
 public:
  explicit RoundLedger(MpcConfig config = {}) : config_(config) {}

  void charge(Category c, std::uint64_t rounds, std::string what);
  void charge_primitive(Primitive kind);
  void charge_derand(std::string what);
  void account_space(std::uint64_t words);
  void finalize() { finalized_ = true; }

  [[nodiscard]] const MpcConfig& config() const { return config_; }
  [[nodiscard]] std::uint64_t rounds(Category c) const { return rounds_[static_cast<std::size_t>(c)]; }
  [[nodiscard]] std::uint64_t total_rounds() const;
  [[nodiscard]] std::uint64_t peak_space() const { return peak_space_; }
  [[nodiscard]] bool over_cap() const { return over_cap_; }
  [[nodiscard]] bool finalized() const { return finalized_; }
  /// Set when a charge arrives after finalize().
  [[nodiscard]] bool misuse() const { return misuse_; }
  [[nodiscard]] const std::vector<LedgerEntry>& entries() const { return entries_; }

 private:
  MpcConfig config_;
  std::array<std::uint64_t, kCategoryCount> rounds_{};
  std::vector<LedgerEntry> entries_;
  std::uint64_t peak_space_ = 0;
  bool over_cap_ = false;
  bool finalized_ = false;
  bool misuse_ = false;
};

struct GatherVerdict {
  bool ok = true;
  std::uint64_t words = 0;
  std::uint64_t capacity = 0;
  std::uint64_t deficit = 0;
};

GatherVerdict check_gather(const MpcConfig& config, std::uint64_t words);

}  // namespace rs2
