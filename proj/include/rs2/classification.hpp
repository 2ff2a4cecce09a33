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
#include "rs2/graph.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace rs2 {

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class NodeLabel : std::uint8_t { Good, Bad, SmallDegree };

const char* to_string(NodeLabel label);

struct ClassificationParams {
  Rational epsilon{1, 40};
  unsigned d0_exp = 6;
};

struct NodeClassification {
  Rational epsilon;
  unsigned d0_exp = 0;
  unsigned dmax_exp = 0;

  std::vector<NodeLabel> label;
  /// Class exponent i (degree in [2^i, 2^{i+1})) for Bad nodes, -1 otherwise.
  std::vector<int> bad_class;
  std::vector<NodeId> witness;
  /// Index into lucky_sets, or -1 when the node is not lucky.
  std::vector<std::int32_t> lucky_set_index;
  /// Distinct S sets; nodes sharing a witness and class share one entry.
  std::vector<std::vector<NodeId>> lucky_sets;
  /// classes[i] lists the Bad nodes of class i in ascending id order.
  std::vector<std::vector<NodeId>> classes;

  [[nodiscard]] bool is_good(NodeId v) const { return label[v] == NodeLabel::Good; }
  [[nodiscard]] bool is_bad(NodeId v) const { return label[v] == NodeLabel::Bad; }
  [[nodiscard]] bool is_lucky(NodeId v) const { return lucky_set_index[v] >= 0; }
  [[nodiscard]] const std::vector<NodeId>& lucky_set(NodeId v) const {
    return lucky_sets[static_cast<std::size_t>(lucky_set_index[v])];
  }
  [[nodiscard]] std::size_t lucky_words() const;
};

/// ceil(6 d^0.6), the size of every lucky set in class d.
std::size_t lucky_set_size(std::uint64_t d);

/// Exact goodness test: sum over neighbours of 1/sqrt(deg) against deg(v)^eps,
/// both in 2^-32 fixed point.
bool is_good_node(const Graph& g, NodeId v, Rational epsilon);

NodeClassification classify_nodes(const Graph& g, const ClassificationParams& params = {});

struct BadStarRow {
  unsigned exp = 0;
  std::size_t bad = 0;
  std::size_t lucky = 0;
  std::size_t star = 0;
  std::size_t at_least_d = 0;
  bool holds = true;
};

/// Per class with d >= 2^{d0}: |B_d minus lucky| against 12 |V_{>=d}| / d^0.4.
std::vector<BadStarRow> count_bad_star_classes(const Graph& g, const NodeClassification& c);

}  // namespace rs2
