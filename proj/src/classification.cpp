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

#include "rs2/classification.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace rs2 {
namespace {

constexpr unsigned kFrac = 32;

unsigned floor_log2(std::uint64_t x) { return static_cast<unsigned>(std::bit_width(x)) - 1; }

class GoodnessOracle {
 public:
  explicit GoodnessOracle(Rational eps) : eps_(eps) {}

  // floor(2^32 / sqrt(d)).
  std::uint64_t inv_sqrt(std::uint64_t d) {
    auto [it, fresh] = inv_sqrt_.try_emplace(d, 0);
    if (fresh) {
      it->second = isqrt((static_cast<u128>(1) << (2 * kFrac)) / d);
    }
    return it->second;
  }

  // ceil(2^32 * d^eps).
  std::uint64_t rhs(std::uint64_t d) {
    auto [it, fresh] = rhs_.try_emplace(d, 0);
    if (fresh) {
      it->second = d == 0 ? 0 : ceil_scaled_power(std::uint64_t{1} << kFrac, d, eps_);
    }
    return it->second;
  }

  bool good(const Graph& g, NodeId v) {
    const std::size_t deg = g.degree(v);
    u128 sum = 0;
    for (NodeId u : g.neighbors(v)) {
      sum += inv_sqrt(g.degree(u));
    }
    return sum >= rhs(deg);
  }

 private:
  Rational eps_;
  std::map<std::uint64_t, std::uint64_t> inv_sqrt_;
  std::map<std::uint64_t, std::uint64_t> rhs_;
};

}  // namespace

const char* to_string(NodeLabel label) {
  switch (label) {
    case NodeLabel::Good:
      return "good";
    case NodeLabel::Bad:
      return "bad";
    case NodeLabel::SmallDegree:
      return "small";
  }
  return "?";
}

std::size_t NodeClassification::lucky_words() const {
  std::size_t words = 0;
  for (std::size_t v = 0; v < label.size(); ++v) {
    if (lucky_set_index[v] >= 0) {
      words += lucky_sets[static_cast<std::size_t>(lucky_set_index[v])].size();
    }
  }
  return words;
}

std::size_t lucky_set_size(std::uint64_t d) { return ceil_scaled_power(6, d, Rational{3, 5}); }

bool is_good_node(const Graph& g, NodeId v, Rational epsilon) { return GoodnessOracle(epsilon).good(g, v); }

NodeClassification classify_nodes(const Graph& g, const ClassificationParams& params) {
  const std::size_t n = g.node_count();
  NodeClassification c;
  c.epsilon = params.epsilon;
  c.d0_exp = params.d0_exp;
  const std::size_t delta = g.max_degree();
  c.dmax_exp = delta <= 1 ? 0 : floor_log2(delta - 1) + 1;
  c.label.assign(n, NodeLabel::Good);
  c.bad_class.assign(n, -1);
  c.witness.assign(n, kNoNode);
  c.lucky_set_index.assign(n, -1);
  c.classes.assign(delta == 0 ? 1 : floor_log2(delta) + 1, {});

  GoodnessOracle oracle(params.epsilon);
  for (NodeId v = 0; v < n; ++v) {
    if (oracle.good(g, v)) {
      continue;
    }
    const std::size_t deg = g.degree(v);
    if (deg < (std::size_t{1} << params.d0_exp)) {
      c.label[v] = NodeLabel::SmallDegree;
      continue;
    }
    c.label[v] = NodeLabel::Bad;
    c.bad_class[v] = static_cast<int>(floor_log2(deg));
    c.classes[static_cast<std::size_t>(c.bad_class[v])].push_back(v);
  }

  std::vector<std::size_t> need(c.classes.size());
  for (std::size_t i = 0; i < need.size(); ++i) {
    need[i] = lucky_set_size(std::uint64_t{1} << i);
  }

  // Lowest-id witness per bad node: w qualifies for class i when it has at
  // least need[i] class-i neighbours.
  std::vector<std::size_t> count(c.classes.size(), 0);
  for (NodeId w = 0; w < n; ++w) {
    const auto nb = g.neighbors(w);
    bool any = false;
    for (NodeId u : nb) {
      if (c.bad_class[u] >= 0) {
        ++count[static_cast<std::size_t>(c.bad_class[u])];
        any = true;
      }
    }
    if (!any) {
      continue;
    }
    for (NodeId u : nb) {
      const int i = c.bad_class[u];
      if (i >= 0 && count[static_cast<std::size_t>(i)] >= need[static_cast<std::size_t>(i)] && c.witness[u] == kNoNode) {
        c.witness[u] = w;
      }
    }
    std::fill(count.begin(), count.end(), 0);
  }

  std::map<std::pair<NodeId, int>, std::int32_t> set_of;
  for (NodeId u = 0; u < n; ++u) {
    const NodeId w = c.witness[u];
    if (w == kNoNode) {
      continue;
    }
    const int i = c.bad_class[u];
    auto [it, fresh] = set_of.try_emplace({w, i}, static_cast<std::int32_t>(c.lucky_sets.size()));
    if (fresh) {
      std::vector<NodeId> s;
      for (NodeId x : g.neighbors(w)) {
        if (c.bad_class[x] == i) {
          s.push_back(x);
          if (s.size() == need[static_cast<std::size_t>(i)]) {
            break;
          }
        }
      }
      c.lucky_sets.push_back(std::move(s));
    }
    c.lucky_set_index[u] = it->second;
  }
  return c;
}

std::vector<BadStarRow> count_bad_star_classes(const Graph& g, const NodeClassification& c) {
  std::vector<BadStarRow> rows;
  const std::size_t n = g.node_count();
  for (std::size_t i = c.d0_exp; i < c.classes.size(); ++i) {
    const std::uint64_t d = std::uint64_t{1} << i;
    BadStarRow row;
    row.exp = static_cast<unsigned>(i);
    row.bad = c.classes[i].size();
    for (NodeId v : c.classes[i]) {
      row.lucky += c.is_lucky(v) ? 1 : 0;
    }
    row.star = row.bad - row.lucky;
    for (NodeId v = 0; v < n; ++v) {
      row.at_least_d += g.degree(v) >= d ? 1 : 0;
    }
    row.holds = scaled_power_at_most(row.star, d, Rational{2, 5}, 12 * row.at_least_d);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rs2
