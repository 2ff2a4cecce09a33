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

#include "rs2/derand.hpp"
#include "rs2/graph.hpp"
#include "rs2/hash_family.hpp"
#include "rs2/mpc.hpp"
#include "rs2/verify.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs2 {

class NoCompliantSeed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ColoringInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SublinearConfig {
  Rational alpha{1, 2};
  Rational eps_hd{1, 20};
  std::uint64_t c_sub = 4;
  std::uint64_t c_global = 8;
  std::uint64_t c_derand = 1;
  std::uint64_t c_prim = 1;
  /// ID coloring is used when Delta^c_id >= n.
  unsigned c_id = 6;
  /// Constant c in k_hash = ceil(4 c log n / log Delta).
  std::uint64_t c_hash = 1;
  /// Overrides the machine memory S.
  std::optional<std::uint64_t> local_memory;
  unsigned sweep_cap = 10;
  unsigned max_highdeg_passes = 16;
  /// A reduce step is skipped when the expected number of violations under
  /// independent sampling exceeds this.
  double precheck_limit = 2.0;
  DerandConfig derand;

  [[nodiscard]] MpcConfig mpc(std::uint64_t n, std::uint64_t m) const;
};

/// Target side U and sample pool over the node ids of one graph. The pool is
/// a membership mask; U-nodes may belong to the pool as well.
struct Bipartition {
  std::vector<NodeId> U;
  std::vector<char> pool;
  /// Max over U of the number of pool neighbours.
  std::uint64_t delta = 0;
};

Bipartition make_bipartition(const Graph& g, std::vector<NodeId> U, std::vector<char> pool);
/// Pool neighbour count of every U-node, in U order.
std::vector<std::uint64_t> pool_degrees(const Graph& g, const Bipartition& b);
/// Same U, pool intersected with `keep`.
Bipartition restrict_pool(const Graph& g, const Bipartition& b, const std::vector<char>& keep);

struct SquareColoring {
  /// Color per node id; meaningful for pool nodes.
  std::vector<std::uint64_t> color;
  std::uint64_t palette = 0;
  std::string method;
  unsigned linial_rounds = 0;
  std::uint64_t gather_words = 0;
};

/// Pool nodes sharing a U-neighbour receive distinct colors. Uses ids when
/// delta^c_id >= n, otherwise Linial reduction on gathered conflict lists.
/// Charges coloring rounds when `ledger` is given. Throws ColoringInfeasible
/// when the two-hop gather exceeds `local_memory`.
SquareColoring color_square(const Graph& g, const Bipartition& b, unsigned c_id, std::uint64_t local_memory,
                            RoundLedger* ledger = nullptr);
/// Number of conflicting pool pairs, by exhaustive scan.
std::size_t coloring_conflicts(const Graph& g, const Bipartition& b, const SquareColoring& c);

/// Smallest R with 4 R^2 >= 9 delta, i.e. ceil(3 sqrt(delta) / 2).
std::uint64_t reduce_rate_denominator(std::uint64_t delta);
/// log2(n) * delta^0.6.
double heavy_threshold(std::uint64_t n, std::uint64_t delta);
/// deg / (3 sqrt(delta)) <= count <= deg / sqrt(delta), in integers.
bool in_reduce_window(std::uint64_t count, std::uint64_t deg, std::uint64_t delta);
/// ceil(4 c log n / log delta), at least 2.
unsigned hash_order(std::uint64_t n, std::uint64_t delta, std::uint64_t c);

struct ReduceResult {
  std::vector<char> sampled;
  HashSpec spec;
  Seed seed;
  std::uint64_t delta = 0;
  std::uint64_t threshold = 0;
  std::uint64_t heavy = 0;
  std::uint64_t violations = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t examined = 0;
  bool accepted = false;
  /// Pool count of every U-node after sampling.
  std::vector<std::uint64_t> counts;
  std::vector<char> heavy_flags;
};

/// One color-hashed reduction step at rate 1/R. The seed must leave no
/// tau-heavy U-node outside its window and no U-node without a sampled
/// neighbour; throws NoCompliantSeed otherwise.
ReduceResult degree_reduce_step(const Graph& g, const Bipartition& b, const SquareColoring& coloring, std::uint64_t n,
                                Derandomizer& dz, const SublinearConfig& cfg, const std::string& stage = "reduce");

/// Id-hashed sampling at rate n^-eps_hd. Every full group of `group`
/// consecutive pool edges of a U-node must hold mu +- mu^(2/3) sampled edges,
/// nodes of degree >= group^1.5 must land in [deg r / 2, 3 deg r / 2], and
/// every U-node keeps a sampled neighbour. Throws NoCompliantSeed otherwise.
ReduceResult degree_reduce_highdeg(const Graph& g, const Bipartition& b, std::uint64_t n, std::uint64_t group,
                                   Derandomizer& dz, const SublinearConfig& cfg, const std::string& stage = "highdeg");

struct WeakResult {
  ReduceResult step;
  std::vector<NodeId> exceptions;
  std::uint64_t bound = 0;
};

/// Id-hashed version of the reduction step that tolerates up to n/delta^0.01
/// window violations among tau-heavy U-nodes; those are returned as exceptions.
WeakResult weak_reduce(const Graph& g, const Bipartition& b, std::uint64_t n, Derandomizer& dz,
                       const SublinearConfig& cfg, const std::string& stage = "weak");

struct SparsifyStep {
  unsigned j = 0;
  std::uint64_t delta = 0;
  std::uint64_t heavy = 0;
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  double predicted = 0;
  bool accepted = false;
};

struct SparsifyResult {
  std::vector<char> sampled;
  std::uint64_t f = 0;
  unsigned highdeg_passes = 0;
  unsigned bootstrap_sweeps = 0;
  std::size_t bootstrap_exceptions = 0;
  std::uint64_t delta_prime = 0;
  std::uint64_t min_degree = 0;
  double c_meas = 0;
  int k_closed_form = 0;
  unsigned k_stop = 0;
  unsigned k_run = 0;
  std::string stop_reason;
  unsigned c_cap = 0;
  std::uint64_t cap = 0;
  std::uint64_t final_min = 0;
  std::uint64_t final_max = 0;
  bool interval_ok = true;
  bool coverage_ok = true;
  bool cap_ok = true;
  std::string coloring;
  std::uint64_t palette = 0;
  std::vector<SparsifyStep> steps;
  std::vector<std::uint64_t> final_counts;
};

/// ceil(log2(log2(x))) style helpers used by sparsify.
unsigned floor_log2_log2(std::uint64_t x);

SparsifyResult sparsify(const Graph& g, const Bipartition& b, std::uint64_t f, std::uint64_t n, Derandomizer& dz,
                        RoundLedger& ledger, const SublinearConfig& cfg, const std::string& stage = "sparsify");

struct FinalMisResult {
  std::vector<NodeId> members;
  std::uint64_t rounds = 0;
  std::uint64_t luby_rounds = 0;
  bool gathered = false;
};

/// MIS of g: gather-and-greedy when g fits in local memory, derandomized Luby
/// rounds otherwise. Rounds are charged under "mis".
FinalMisResult final_bounded_mis(const Graph& g, std::uint64_t local_memory, Derandomizer& dz, RoundLedger& ledger);

struct ClassRecord {
  unsigned i = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::size_t u_size = 0;
  std::size_t pool_size = 0;
  std::size_t sub_size = 0;
  std::size_t removed = 0;
  std::uint64_t max_remaining_degree = 0;
  bool invariant_ok = true;
  SparsifyResult sparsify;
};

struct SublinearResult {
  std::vector<NodeId> members;
  CertificateReport certificate;
  std::uint64_t delta = 0;
  std::uint64_t f = 0;
  std::vector<ClassRecord> classes;
  std::size_t mis_graph_nodes = 0;
  std::uint64_t mis_graph_degree = 0;
  std::uint64_t mis_graph_cap = 0;
  bool mis_graph_ok = true;
  FinalMisResult final_mis;
  RoundLedger ledger;
  std::vector<DerandStep> derand_steps;
  std::uint64_t local_memory = 0;
  /// Total rounds minus those of the final MIS.
  std::uint64_t rounds_excluding_final = 0;
};

SublinearResult run_sublinear(const Graph& g, const SublinearConfig& cfg = {});

}  // namespace rs2
