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
#include <span>
#include <vector>

namespace rs2 {

inline constexpr std::uint32_t kFar = 0xFFFFFFFFu;

struct CertificateReport {
  bool valid = true;
  unsigned beta = 2;
  std::vector<NodeId> out_of_range;
  std::vector<Edge> independence_violations;
  /// Nodes with no member within beta hops.
  std::vector<NodeId> uncovered;
  /// Distance to the set, or kFar when greater than beta.
  std::vector<std::uint32_t> distance;
};

CertificateReport verify_ruling_set(const Graph& g, std::span<const NodeId> members, unsigned beta = 2);

/// Multi-source BFS truncated at `limit` hops; entries beyond it are kFar.
std::vector<std::uint32_t> distance_to_set(const Graph& g, std::span<const NodeId> sources, unsigned limit);

}  // namespace rs2
