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

#include "rs2/classification.hpp"
#include "rs2/derand.hpp"
#include "rs2/graph.hpp"
#include "rs2/hash_family.hpp"
#include "rs2/mpc.hpp"
#include "rs2/verify.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rs2 {

struct GatherSet {
  std::vector<char> sampled;
  std::vector<NodeId> part2;
  std::vector<NodeId> part3;
  /// V*, sorted local ids.
  std::vector<NodeId> star;
  std::vector<char> in_star;
  std::uint64_t degree_sum = 0;
};

/// Per-iteration thresholds and the sampling / MIS steps of one iteration.
/// Node ids passed to the hash are the original ids in `ids`.
class LinearStep {
 public:
  LinearStep(const Graph& active, std::span<const NodeId> ids, const NodeClassification& c, HashSpec sample_spec,
             HashSpec mis_spec);

  [[nodiscard]] std::vector<char> sample(std::span<const std::uint64_t> seed) const;
  [[nodiscard]] GatherSet gather(std::vector<char> sampled) const;
  /// Luby variant on the sampled Bad nodes; returns membership flags.
  [[nodiscard]] std::vector<char> partial_mis(const std::vector<char>& sampled, std::span<const std::uint64_t> seed) const;
  /// Lucky nodes of class i left unruled by `in_mis`, per class.
  [[nodiscard]] std::vector<std::uint64_t> unruled_counts(const std::vector<char>& sampled,
                                                          const std::vector<char>& in_mis) const;
  /// Sum over classes of weight_i * X_i, in 2^-32 units.
  [[nodiscard]] std::uint64_t q_value(const std::vector<std::uint64_t>& unruled) const;

  /// Degree sum of V*, as a function of the sampling seed.
  [[nodiscard]] Objective edges_objective() const;
  /// Pessimistic estimator Q for a fixed sampled set, as a function of the MIS seed.
  [[nodiscard]] Objective q_objective(const std::vector<char>& sampled) const;

  [[nodiscard]] const HashSpec& sample_spec() const { return sample_spec_; }
  [[nodiscard]] const HashSpec& mis_spec() const { return mis_spec_; }
  /// ceil(2^32 2^{i eps/2} / |lucky_i|), 0 for empty classes.
  [[nodiscard]] const std::vector<std::uint64_t>& weights() const { return weight_; }
  [[nodiscard]] const std::vector<std::uint64_t>& lucky_per_class() const { return lucky_count_; }
  [[nodiscard]] std::uint64_t sample_threshold(NodeId v) const { return sample_thr_[v]; }
  [[nodiscard]] std::uint64_t mis_threshold(unsigned cls) const { return mis_thr_[cls]; }

 private:
  [[nodiscard]] NodeId id(NodeId v) const { return ids_.empty() ? v : ids_[v]; }

  const Graph& g_;
  std::span<const NodeId> ids_;
  const NodeClassification& c_;
  HashSpec sample_spec_;
  HashSpec mis_spec_;
  std::vector<std::uint64_t> sample_thr_;
  std::vector<std::uint64_t> min_sampled_;  // ceil(d^0.1) per class
  std::vector<std::uint64_t> max_nbrs_;     // floor(d^{2 eps}) per class
  std::vector<std::uint64_t> mis_thr_;      // floor(p / d^{3 eps}) per class
  std::vector<std::uint64_t> weight_;
  std::vector<std::uint64_t> lucky_count_;
};

/// Maximal independent set of `g` containing `initial`, filled greedily in
/// ascending id order. Throws std::invalid_argument when `initial` is not independent.
std::vector<NodeId> local_mis_extend(const Graph& g, std::span<const NodeId> initial);

struct LinearConfig {
  ClassificationParams cls;
  unsigned k_sample = 4;
  unsigned k_mis = 2;
  unsigned max_iter = 20;
  /// Field sizes; default to the smallest prime >= n^3.
  std::optional<std::uint64_t> sample_prime;
  std::optional<std::uint64_t> mis_prime;
  DerandConfig derand;
  std::uint64_t c_lin = 8;
  std::uint64_t c_global = 8;
  std::uint64_t c_derand = 1;
  std::uint64_t c_prim = 1;
};

struct ClassEstimate {
  unsigned exp = 0;
  std::uint64_t lucky = 0;
  std::uint64_t unruled = 0;
  std::uint64_t weight = 0;
  bool identity_holds = true;
};

struct IterationRecord {
  unsigned index = 0;
  std::size_t active_nodes = 0;
  std::size_t active_edges = 0;
  std::size_t good = 0;
  std::size_t bad = 0;
  std::size_t small = 0;
  std::size_t lucky = 0;
  std::size_t sampled = 0;
  std::size_t part2 = 0;
  std::size_t part3 = 0;
  std::size_t gathered = 0;
  std::uint64_t degree_sum = 0;
  std::uint64_t gather_words = 0;
  std::size_t partial_mis = 0;
  std::size_t mis_added = 0;
  std::size_t removed = 0;
  std::uint64_t q_value = 0;
  std::vector<ClassEstimate> estimates;
  std::vector<BadStarRow> counting;
  bool counting_holds = true;
  bool good_all_ruled = true;
  Seed sample_seed;
  Seed mis_seed;
};

struct SurvivalRow {
  unsigned exp = 0;
  /// counts[k]: nodes of initial degree >= 2^exp still active after k iterations.
  std::vector<std::size_t> counts;
};

struct LinearResult {
  std::vector<NodeId> members;
  CertificateReport certificate;
  std::vector<IterationRecord> iterations;
  std::vector<SurvivalRow> survival;
  std::size_t residual_nodes = 0;
  std::size_t residual_edges = 0;
  std::size_t final_mis = 0;
  RoundLedger ledger;
  std::vector<DerandStep> derand_steps;
  HashSpec sample_spec;
  HashSpec mis_spec;
  /// max over iterations of degree_sum / n.
  double c_edges = 0;
  /// min over classes of -log(ratio)/log d after the first iteration; absent
  /// when no class had survivors.
  std::optional<double> eps_prime;
};

/// Rounds charged per iteration, and for the final gather-and-solve.
std::uint64_t linear_iteration_rounds(const LinearConfig& config);
std::uint64_t linear_final_rounds(const LinearConfig& config);

/// Throws ModelViolation when a gather does not fit or the residual is still too
/// large after max_iter iterations.
LinearResult run_linear(const Graph& g, const LinearConfig& config = {});

/// Greedy ascending-id MIS of the whole graph.
std::vector<NodeId> greedy_mis(const Graph& g);

}  // namespace rs2
