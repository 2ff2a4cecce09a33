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

#include "rs2/hash_family.hpp"
#include "rs2/mpc.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace rs2 {

enum class Backend : std::uint8_t { Auto, Exhaustive, Greedy, Scan, Random };
enum class MeanKind : std::uint8_t { Exact, Subfamily, None };

const char* to_string(Backend b);
const char* to_string(MeanKind k);
Backend parse_backend(const std::string& s);

/// Seed objective. `value` returns a non-negative integer; dividing by
/// `scale` gives the objective in natural units. Must be pure and safe to
/// call concurrently.
struct Objective {
  std::string name;
  std::uint64_t scale = 1;
  std::function<std::uint64_t(std::span<const std::uint64_t>)> value;
};

struct SearchResult {
  Seed seed;
  std::uint64_t value = 0;
  /// Sum of values over the examined seeds and their count; the mean is
  /// total / count.
  u128 total = 0;
  u128 count = 0;
  MeanKind mean_kind = MeanKind::None;
  Backend backend = Backend::Exhaustive;
  std::uint64_t examined = 0;

  [[nodiscard]] double mean() const;
  /// value <= total / count, decided in integers.
  [[nodiscard]] bool within_mean() const;
};

/// Lexicographically first minimizer over all p^k seeds.
SearchResult find_seed_exhaustive(const HashSpec& spec, const Objective& obj, std::uint64_t budget, unsigned threads = 1);

/// Fixes a_{k-1} down to a_0, each to the value minimizing the exact
/// conditional average over the still-free coefficients.
SearchResult find_seed_greedy(const HashSpec& spec, const Objective& obj, std::uint64_t stage_budget);

/// Scans a fixed pseudo-random subfamily in batches of kScanBatch. With a
/// target the scan stops after the first batch reaching it.
inline constexpr std::uint64_t kScanBatch = 64;
SearchResult find_seed_scan(const HashSpec& spec, const Objective& obj, std::uint64_t max_seeds,
                            std::optional<std::uint64_t> target, unsigned threads = 1, std::uint64_t salt = 0);

/// Seed with i.i.d. uniform coefficients.
SearchResult find_seed_random(const HashSpec& spec, const Objective& obj, std::mt19937_64& rng);

/// i-th seed of the scan subfamily.
Seed scan_seed(const HashSpec& spec, std::uint64_t index, std::uint64_t salt);

struct MeanCheck {
  bool holds = false;
  u128 total = 0;
  u128 count = 0;
  [[nodiscard]] double mean() const;
};

/// Exact family mean by enumeration, checked against `bound` (raw units).
MeanCheck verify_mean_bound(const HashSpec& spec, const Objective& obj, std::uint64_t bound, std::uint64_t budget);

struct DerandConfig {
  Backend backend = Backend::Auto;
  std::uint64_t budget = default_budget();
  /// Seeds examined per scan without a target.
  std::uint64_t scan_seeds = 64;
  /// Cap on seeds examined per scan with a target.
  std::uint64_t scan_limit = 4096;
  unsigned threads = 1;
  std::uint64_t random_seed = 1;
};

struct DerandStep {
  std::string stage;
  std::string objective;
  HashSpec spec;
  Backend backend = Backend::Exhaustive;
  std::uint64_t value = 0;
  std::uint64_t scale = 1;
  double mean = 0;
  MeanKind mean_kind = MeanKind::None;
  bool within_mean = true;
  std::uint64_t examined = 0;
  Seed seed;
};

/// Runs seed searches, charges each one to the ledger and logs it.
class Derandomizer {
 public:
  Derandomizer(DerandConfig config, RoundLedger* ledger);

  SearchResult search(const std::string& stage, const HashSpec& spec, const Objective& obj,
                      std::optional<std::uint64_t> target = std::nullopt);

  [[nodiscard]] const std::vector<DerandStep>& steps() const { return steps_; }
  [[nodiscard]] const DerandConfig& config() const { return config_; }

 private:
  DerandConfig config_;
  RoundLedger* ledger_;
  std::mt19937_64 rng_;
  std::vector<DerandStep> steps_;
};

}  // namespace rs2
