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

#include "rs2/generators.hpp"

#include "rs2/classification.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

namespace rs2 {

std::uint64_t GenRng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw GeneratorError("GenRng::below: empty range");
  }
  const std::uint64_t floor = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= floor) {
      return r % bound;
    }
  }
}

std::uint64_t probability_threshold(double p) {
  if (!(p >= 0.0)) {
    throw GeneratorError("probability must be non-negative");
  }
  if (p >= 1.0) {
    return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

Graph gen_empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph gen_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) {
    e.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
  }
  return Graph::from_edges(n, std::move(e));
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) {
    throw GeneratorError("cycle needs n >= 3");
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  }
  return Graph::from_edges(n, std::move(e));
}

Graph gen_star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) {
    e.emplace_back(0, static_cast<NodeId>(i));
  }
  return Graph::from_edges(leaves + 1, std::move(e));
}

Graph gen_clique(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return Graph::from_edges(n, std::move(e));
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(a + j));
    }
  }
  return Graph::from_edges(a + b, std::move(e));
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  GenRng rng(seed);
  const std::uint64_t thr = probability_threshold(p);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(thr)) {
        e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return Graph::from_edges(n, std::move(e));
}

Graph gen_random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  GenRng rng(seed);
  const std::uint64_t thr = probability_threshold(p);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (rng.chance(thr)) {
        e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(a + j));
      }
    }
  }
  return Graph::from_edges(a + b, std::move(e));
}

Graph gen_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) {
    throw GeneratorError("d-regular graph needs n*d even");
  }
  if (d == 0) {
    return gen_empty(n);
  }
  if (d >= n) {
    throw GeneratorError("d-regular graph needs d < n");
  }
  GenRng rng(seed);
  std::vector<NodeId> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      stubs.push_back(static_cast<NodeId>(v));
    }
  }
  rng.shuffle(stubs);
  std::vector<Edge> e(stubs.size() / 2);
  std::multiset<Edge> present;
  auto key = [](NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = key(stubs[2 * i], stubs[2 * i + 1]);
    present.insert(e[i]);
  }
  auto bad = [&](const Edge& x) { return x.first == x.second || present.count(x) > 1; };
  const std::size_t limit = 1000 * e.size() + 1000;
  for (std::size_t attempts = 0;; ++attempts) {
    std::vector<std::size_t> broken;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (bad(e[i])) {
        broken.push_back(i);
      }
    }
    if (broken.empty()) {
      break;
    }
    if (attempts > limit) {
      throw GeneratorError("d-regular switching did not converge");
    }
    for (std::size_t i : broken) {
      if (!bad(e[i])) {
        continue;
      }
      const std::size_t j = rng.below(e.size());
      if (j == i) {
        continue;
      }
      auto [a, b] = e[i];
      auto [c, dd] = e[j];
      if (rng.below(2) == 1) {
        std::swap(c, dd);
      }
      const Edge x = key(a, c);
      const Edge y = key(b, dd);
      if (x.first == x.second || y.first == y.second || present.count(x) > 0 || present.count(y) > 0 || x == y) {
        continue;
      }
      present.erase(present.find(e[i]));
      present.erase(present.find(e[j]));
      e[i] = x;
      e[j] = y;
      present.insert(x);
      present.insert(y);
    }
  }
  return Graph::from_edges(n, std::move(e));
}

Graph gen_chung_lu(std::size_t n, double beta, double avg, std::uint64_t seed) {
  if (!(beta > 2.0)) {
    throw GeneratorError("chung-lu needs beta > 2");
  }
  std::vector<double> w(n);
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(static_cast<double>(i + 1), -1.0 / (beta - 1.0));
    total += w[i];
  }
  const double scale = avg * static_cast<double>(n) / total;
  for (auto& x : w) {
    x *= scale;
  }
  const double sum = avg * static_cast<double>(n);
  GenRng rng(seed);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(probability_threshold(std::min(1.0, w[i] * w[j] / sum)))) {
        e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return relabel(Graph::from_edges(n, std::move(e)), seed ^ 0x5bd1e995ULL);
}

Graph gen_bad_node_gadget(std::size_t d, std::size_t hub_degree, std::size_t t, std::size_t q, std::uint64_t seed) {
  if (d == 0 || t > hub_degree || q == 0 || q > d) {
    throw GeneratorError("bad-node gadget needs d >= 1, t <= D and 1 <= q <= d");
  }
  std::vector<Edge> e;
  for (std::size_t x = 0; x < t; ++x) {
    for (std::size_t h = 0; h < d; ++h) {
      e.emplace_back(static_cast<NodeId>(h), static_cast<NodeId>(d + x));
    }
  }
  const std::size_t slots = d * (hub_degree - t);
  NodeId filler = static_cast<NodeId>(d + t);
  for (std::size_t s = 0; s < slots; s += q) {
    for (std::size_t k = s; k < std::min(slots, s + q); ++k) {
      e.emplace_back(static_cast<NodeId>(k % d), filler);
    }
    ++filler;
  }
  Graph g = Graph::from_edges(filler, std::move(e));
  return seed == 0 ? g : relabel(g, seed);
}

Graph gen_lucky_gadget(std::size_t d, std::size_t hub_degree, std::size_t q, std::uint64_t seed) {
  return gen_bad_node_gadget(d, hub_degree, lucky_set_size(d), q, seed);
}

Graph gen_union(const std::vector<Graph>& parts, std::uint64_t seed) {
  std::vector<Edge> e;
  std::size_t offset = 0;
  for (const Graph& p : parts) {
    for (const auto& [u, v] : p.edges()) {
      e.emplace_back(static_cast<NodeId>(u + offset), static_cast<NodeId>(v + offset));
    }
    offset += p.node_count();
  }
  Graph g = Graph::from_edges(offset, std::move(e));
  return seed == 0 ? g : relabel(g, seed);
}

Graph relabel(const Graph& g, std::uint64_t seed) {
  std::vector<NodeId> perm(g.node_count());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = static_cast<NodeId>(i);
  }
  GenRng rng(seed);
  rng.shuffle(perm);
  std::vector<Edge> e;
  e.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    e.emplace_back(perm[u], perm[v]);
  }
  return Graph::from_edges(g.node_count(), std::move(e));
}

std::pair<std::string, GenParams> parse_generator(const std::string& text) {
  const auto colon = text.find(':');
  std::pair<std::string, GenParams> out{text.substr(0, colon), {}};
  if (colon == std::string::npos) {
    return out;
  }
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw GeneratorError("generator parameter '" + item + "' is not key=value");
    }
    out.second[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

namespace {

class Params {
 public:
  explicit Params(const GenParams& p) : p_(p) {}

  std::size_t count(const std::string& key, std::optional<std::size_t> fallback = std::nullopt) const {
    const auto it = p_.find(key);
    if (it == p_.end()) {
      if (!fallback) {
        throw GeneratorError("missing generator parameter '" + key + "'");
      }
      return *fallback;
    }
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) {
      throw GeneratorError("parameter '" + key + "' is not an integer");
    }
    return v;
  }

  double real(const std::string& key, std::optional<double> fallback = std::nullopt) const {
    const auto it = p_.find(key);
    if (it == p_.end()) {
      if (!fallback) {
        throw GeneratorError("missing generator parameter '" + key + "'");
      }
      return *fallback;
    }
    return std::stod(it->second);
  }

  std::vector<std::size_t> list(const std::string& key) const {
    const auto it = p_.find(key);
    if (it == p_.end()) {
      throw GeneratorError("missing generator parameter '" + key + "'");
    }
    std::vector<std::size_t> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, '+')) {
      out.push_back(std::stoull(item));
    }
    return out;
  }

 private:
  const GenParams& p_;
};

// Smallest hub degree making a degree-d target bad, plus a margin.
std::size_t bad_hub_degree(std::size_t d, Rational eps) {
  return floor_power(d, Rational{2 * (eps.den - eps.num), eps.den}) + 2;
}

}  // namespace

Graph generate(const std::string& model, const GenParams& params, std::uint64_t seed) {
  const Params p(params);
  if (model == "empty") {
    return gen_empty(p.count("n"));
  }
  if (model == "path") {
    return gen_path(p.count("n"));
  }
  if (model == "cycle") {
    return gen_cycle(p.count("n"));
  }
  if (model == "star") {
    return gen_star(p.count("leaves"));
  }
  if (model == "clique") {
    return gen_clique(p.count("n"));
  }
  if (model == "complete-bipartite") {
    return gen_complete_bipartite(p.count("a"), p.count("b"));
  }
  if (model == "gnp") {
    return gen_gnp(p.count("n"), p.real("p"), seed);
  }
  if (model == "bipartite") {
    return gen_random_bipartite(p.count("a"), p.count("b"), p.real("p"), seed);
  }
  if (model == "d-regular" || model == "regular") {
    return gen_regular(p.count("n"), p.count("d"), seed);
  }
  if (model == "chung-lu") {
    return gen_chung_lu(p.count("n"), p.real("beta", 2.5), p.real("avg", 8.0), seed);
  }
  if (model == "bad-node-gadget") {
    const std::size_t d = p.count("d");
    return gen_bad_node_gadget(d, p.count("D", bad_hub_degree(d, Rational{1, 40})), p.count("t", d), p.count("q", 1),
                               seed);
  }
  if (model == "lucky-gadget") {
    const std::size_t d = p.count("d");
    return gen_lucky_gadget(d, p.count("D", bad_hub_degree(d, Rational{1, 40})), p.count("q", 16), seed);
  }
  if (model == "class-union") {
    // Lucky gadgets for classes with a feasible hub degree, cliques above.
    std::vector<Graph> parts;
    const std::size_t max_hub = p.count("max_hub", 20000);
    for (std::size_t d : p.list("classes")) {
      const std::size_t hub = bad_hub_degree(d, Rational{1, 40});
      if (hub <= max_hub && lucky_set_size(d) <= hub) {
        parts.push_back(gen_lucky_gadget(d, hub, std::min<std::size_t>(p.count("q", 16), d), 0));
      } else {
        parts.push_back(gen_clique(d + d / 16 + 1));
      }
    }
    return gen_union(parts, seed);
  }
  throw GeneratorError("unknown generator model '" + model + "'");
}

Graph generate(const std::string& spec, std::uint64_t seed) {
  const auto [model, params] = parse_generator(spec);
  return generate(model, params, seed);
}

}  // namespace rs2
