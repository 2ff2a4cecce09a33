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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rs2 {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph in compressed sparse row form. Adjacency lists are
/// sorted and symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a normalized graph. Duplicate and reversed edges collapse; a
  /// self-loop or an endpoint >= n throws GraphFormatError.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  [[nodiscard]] std::size_t edge_count() const { return adj_.size() / 2; }

  [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;

  /// Each edge once, as (u, v) with u < v, in ascending order.
  [[nodiscard]] std::vector<Edge> edges() const;

  /// Memory footprint in words: one per node plus one per adjacency entry.
  [[nodiscard]] std::size_t words() const { return node_count() + adj_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
};

struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_parent;
};

/// Subgraph induced on `nodes` (must be sorted and unique). Local id i maps to
/// to_parent[i].
Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Edge-list parser. An optional first line "n m" is taken as a header when m
/// matches the number of remaining edge lines; otherwise n = 1 + max id.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Writes the "n m" header followed by one "u v" line per edge.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace rs2
