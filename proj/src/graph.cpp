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

#include "rs2/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rs2 {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw GraphFormatError("self-loop at node " + std::to_string(u));
    }
    if (u >= n || v >= n) {
      throw GraphFormatError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint >= n = " + std::to_string(n));
    }
    if (u > v) {
      std::swap(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.offsets_[i + 1] += g.offsets_[i];
  }
  g.adj_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) {
    best = std::max(best, degree(static_cast<NodeId>(v)));
  }
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) {
    return false;
  }
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(static_cast<NodeId>(u))) {
      if (u < v) {
        out.emplace_back(static_cast<NodeId>(u), v);
      }
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(g.node_count(), static_cast<NodeId>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : g.neighbors(nodes[i])) {
      const NodeId j = local[w];
      if (j != static_cast<NodeId>(-1) && i < j) {
        edges.emplace_back(static_cast<NodeId>(i), j);
      }
    }
  }
  return {Graph::from_edges(nodes.size(), std::move(edges)), {nodes.begin(), nodes.end()}};
}

namespace {

struct Line {
  std::size_t number;
  std::uint64_t a;
  std::uint64_t b;
};

bool parse_line(std::string_view s, std::size_t number, Line& out) {
  auto skip_ws = [&](std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
      ++i;
    }
    return i;
  };
  std::size_t i = skip_ws(0);
  if (i == s.size() || s[i] == '#' || s[i] == '%') {
    return false;
  }
  std::uint64_t vals[2];
  for (auto& val : vals) {
    i = skip_ws(i);
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), val);
    if (ec != std::errc{}) {
      throw GraphFormatError("line " + std::to_string(number) + ": expected two non-negative integers");
    }
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (skip_ws(i) != s.size()) {
    throw GraphFormatError("line " + std::to_string(number) + ": trailing characters");
  }
  out = {number, vals[0], vals[1]};
  return true;
}

}  // namespace

Graph load_graph(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    Line parsed{};
    if (parse_line(line, number, parsed)) {
      lines.push_back(parsed);
    }
  }
  if (lines.empty()) {
    return Graph::from_edges(0, {});
  }

  const auto [hn, hm] = std::pair{lines.front().a, lines.front().b};
  const bool header = hn > 0 && hm <= hn * (hn - 1) / 2 && lines.size() - 1 == hm;
  std::size_t n = header ? hn : 0;
  std::vector<Edge> edges;
  for (std::size_t i = header ? 1 : 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.a == l.b) {
      throw GraphFormatError("line " + std::to_string(l.number) + ": self-loop at node " + std::to_string(l.a));
    }
    if (header && (l.a >= n || l.b >= n)) {
      throw GraphFormatError("line " + std::to_string(l.number) + ": node id >= declared n = " + std::to_string(n));
    }
    if (l.a > 0xFFFFFFFEULL || l.b > 0xFFFFFFFEULL) {
      throw GraphFormatError("line " + std::to_string(l.number) + ": node id too large");
    }
    if (!header) {
      n = std::max<std::size_t>(n, std::max(l.a, l.b) + 1);
    }
    edges.emplace_back(static_cast<NodeId>(l.a), static_cast<NodeId>(l.b));
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GraphFormatError("cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

}  // namespace rs2
