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

#include "rs2/graph.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rs2 {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// mt19937_64 with platform-independent bounded draws.
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// True with probability thr / 2^64 (thr = UINT64_MAX means always).
  bool chance(std::uint64_t thr) { return thr == UINT64_MAX || next() < thr; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

/// floor(p * 2^64) clamped, UINT64_MAX for p >= 1.
std::uint64_t probability_threshold(double p);

Graph gen_empty(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_star(std::size_t leaves);
Graph gen_clique(std::size_t n);
Graph gen_complete_bipartite(std::size_t a, std::size_t b);
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
/// Random bipartite graph: sides [0, a) and [a, a + b), edge probability p.
Graph gen_random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);
/// Uniform-ish d-regular graph: random pairing followed by degree-preserving
/// switches that remove loops and parallel edges.
Graph gen_regular(std::size_t n, std::size_t d, std::uint64_t seed);
/// Chung-Lu graph with power-law weights of exponent beta and mean degree avg.
Graph gen_chung_lu(std::size_t n, double beta, double avg, std::uint64_t seed);
/// d hubs of degree D; t targets adjacent to every hub; fillers attached to q
/// consecutive hubs each, cyclically, absorbing the remaining hub degree.
/// Ids are shuffled with `seed`.
Graph gen_bad_node_gadget(std::size_t d, std::size_t hub_degree, std::size_t t, std::size_t q, std::uint64_t seed);
/// Bad-node gadget with t = ceil(6 d^0.6), so every target is lucky.
Graph gen_lucky_gadget(std::size_t d, std::size_t hub_degree, std::size_t q, std::uint64_t seed);
/// Disjoint union, ids offset in argument order and then shuffled with `seed`
/// (no shuffle when seed == 0).
Graph gen_union(const std::vector<Graph>& parts, std::uint64_t seed);
/// Relabels nodes with a seeded random permutation.
Graph relabel(const Graph& g, std::uint64_t seed);

using GenParams = std::map<std::string, std::string>;

/// Parses "model:key=value,key=value".
std::pair<std::string, GenParams> parse_generator(const std::string& text);
/// Builds a graph from a model name and parameters; see README for the list.
Graph generate(const std::string& model, const GenParams& params, std::uint64_t seed);
Graph generate(const std::string& spec, std::uint64_t seed);

}  // namespace rs2
