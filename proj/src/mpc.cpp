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

#include "rs2/mpc.hpp"

#include <algorithm>
#include <numeric>

namespace rs2 {

MpcConfig MpcConfig::linear(std::uint64_t n, std::uint64_t m) {
  MpcConfig c;
  c.regime = Regime::Linear;
  c.n = n;
  c.m = m;
  return c;
}

MpcConfig MpcConfig::sublinear(std::uint64_t n, std::uint64_t m, Rational alpha) {
  if (alpha.num == 0 || alpha.num >= alpha.den) {
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  }
  MpcConfig c;
  c.regime = Regime::Sublinear;
  c.alpha = alpha;
  c.n = n;
  c.m = m;
  return c;
}

std::uint64_t MpcConfig::local_memory() const {
  if (regime == Regime::Linear) {
    return c_lin * std::max<std::uint64_t>(n, 1);
  }
  return ceil_scaled_power(c_sub, std::max<std::uint64_t>(n, 1), alpha);
}

std::uint64_t MpcConfig::machines() const {
  const std::uint64_t s = local_memory();
  return std::max<std::uint64_t>(1, (global_cap() + s - 1) / s);
}

const char* to_string(Category c) {
  switch (c) {
    case Category::Sampling:
      return "sampling";
    case Category::Gathering:
      return "gathering";
    case Category::Derandomization:
      return "derandomization";
    case Category::Mis:
      return "mis";
    case Category::Primitives:
      return "primitives";
    case Category::Coloring:
      return "coloring";
  }
  return "?";
}

const char* to_string(Primitive p) {
  switch (p) {
    case Primitive::DegreeComputation:
      return "degree-computation";
    case Primitive::NeighborhoodArrangement:
      return "neighborhood-arrangement";
    case Primitive::SubgraphCollection:
      return "subgraph-collection";
    case Primitive::Sort:
      return "sort";
    case Primitive::Aggregate:
      return "aggregate";
  }
  return "?";
}

void RoundLedger::charge(Category c, std::uint64_t rounds, std::string what) {
  if (finalized_) {
    misuse_ = true;
    return;
  }
  rounds_[static_cast<std::size_t>(c)] += rounds;
  entries_.push_back({c, std::move(what), rounds});
}

void RoundLedger::charge_primitive(Primitive kind) { charge(Category::Primitives, config_.c_prim, to_string(kind)); }

void RoundLedger::charge_derand(std::string what) {
  charge(Category::Derandomization, config_.c_derand, std::move(what));
}

void RoundLedger::account_space(std::uint64_t words) {
  peak_space_ = std::max(peak_space_, words);
  if (words > config_.global_cap()) {
    over_cap_ = true;
  }
}

std::uint64_t RoundLedger::total_rounds() const { return std::accumulate(rounds_.begin(), rounds_.end(), std::uint64_t{0}); }

GatherVerdict check_gather(const MpcConfig& config, std::uint64_t words) {
  GatherVerdict v;
  v.words = words;
  v.capacity = config.local_memory();
  v.ok = words <= v.capacity;
  v.deficit = v.ok ? 0 : words - v.capacity;
  return v;
}

}  // namespace rs2
