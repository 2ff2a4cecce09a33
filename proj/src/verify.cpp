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

#include "rs2/verify.hpp"

#include <algorithm>

namespace rs2 {

std::vector<std::uint32_t> distance_to_set(const Graph& g, std::span<const NodeId> sources, unsigned limit) {
  std::vector<std::uint32_t> dist(g.node_count(), kFar);
  std::vector<NodeId> frontier;
  for (NodeId s : sources) {
    if (s < g.node_count() && dist[s] != 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  std::vector<NodeId> next;
  for (std::uint32_t level = 1; level <= limit && !frontier.empty(); ++level) {
    next.clear();
    for (NodeId v : frontier) {
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] == kFar) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

CertificateReport verify_ruling_set(const Graph& g, std::span<const NodeId> members, unsigned beta) {
  CertificateReport r;
  r.beta = beta;
  std::vector<char> in_set(g.node_count(), 0);
  for (NodeId s : members) {
    if (s >= g.node_count()) {
      r.out_of_range.push_back(s);
    } else {
      in_set[s] = 1;
    }
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!in_set[u]) {
      continue;
    }
    for (NodeId v : g.neighbors(u)) {
      if (u < v && in_set[v]) {
        r.independence_violations.emplace_back(u, v);
      }
    }
  }
  r.distance = distance_to_set(g, members, beta);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (r.distance[v] == kFar) {
      r.uncovered.push_back(v);
    }
  }
  r.valid = r.out_of_range.empty() && r.independence_violations.empty() && r.uncovered.empty();
  return r;
}

}  // namespace rs2
