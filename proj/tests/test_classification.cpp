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
#include "rs2/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace rs2;

namespace {

// Returns +1 good, -1 bad, 0 when the margin is too thin for long double.
int goodness_by_float(const Graph& g, NodeId v, double eps) {
  const std::size_t deg = g.degree(v);
  if (deg == 0) {
    return 1;
  }
  long double sum = 0;
  for (NodeId w : g.neighbors(v)) {
    sum += 1.0L / std::sqrt(static_cast<long double>(g.degree(w)));
  }
  const long double rhs = std::pow(static_cast<long double>(deg), static_cast<long double>(eps));
  if (std::fabs(sum - rhs) < 1e-6L) {
    return 0;
  }
  return sum >= rhs ? 1 : -1;
}

}  // namespace

TEST_CASE("regular graphs are all good") {
  const Graph g = gen_regular(256, 16, 3);
  const NodeClassification c = classify_nodes(g);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    CHECK(c.is_good(v));
  }
  for (const auto& row : count_bad_star_classes(g, c)) {
    CHECK(row.star == 0);
    CHECK(row.holds);
  }
}

TEST_CASE("degree-4 node with heavy neighbours is bad") {
  // Node 0 joins hubs 1..4; each hub also has 255 private leaves.
  std::vector<Edge> edges;
  NodeId next = 5;
  for (NodeId h = 1; h <= 4; ++h) {
    edges.push_back({0, h});
    for (int i = 0; i < 255; ++i) {
      edges.push_back({h, next++});
    }
  }
  const Graph g = Graph::from_edges(next, edges);
  CHECK_FALSE(is_good_node(g, 0, {1, 40}));
  const NodeClassification c = classify_nodes(g, {{1, 40}, 2});
  CHECK(c.label[0] == NodeLabel::Bad);
  CHECK(c.bad_class[0] == 2);
  const NodeClassification d = classify_nodes(g, {{1, 40}, 6});
  CHECK(d.label[0] == NodeLabel::SmallDegree);
}

TEST_CASE("star leaves are small-degree") {
  const Graph g = gen_star(8);
  const NodeClassification c = classify_nodes(g, {{1, 40}, 1});
  CHECK(c.is_good(0));
  for (NodeId v = 1; v <= 8; ++v) {
    CHECK(c.label[v] == NodeLabel::SmallDegree);
  }
}

TEST_CASE("fixed-point goodness agrees with the float sum away from ties") {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gen_chung_lu(600, 2.2, 6, seed);
    for (Rational eps : {Rational{1, 40}, Rational{1, 4}, Rational{1, 2}}) {
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const int f = goodness_by_float(g, v, eps.value());
        if (f != 0) {
          CHECK(is_good_node(g, v, eps) == (f > 0));
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 5000);
}

TEST_CASE("lucky set size") {
  CHECK(lucky_set_size(64) == 73);
  CHECK(lucky_set_size(1) == 6);
  for (std::uint64_t d = 1; d <= 4096; d = d * 3 + 1) {
    const std::size_t t = lucky_set_size(d);
    // t^5 >= 6^5 d^3 > (t-1)^5
    const auto lhs = [](std::uint64_t x) { return static_cast<long double>(x) * x * x * x * x; };
    const long double rhs = 7776.0L * static_cast<long double>(d) * d * d;
    CHECK(lhs(t) >= rhs);
    CHECK(lhs(t - 1) < rhs);
  }
}

TEST_CASE("lucky gadget witnesses") {
  const Graph g = generate("lucky-gadget:d=64,q=16", 9);
  const NodeClassification c = classify_nodes(g);
  std::size_t lucky = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!c.is_lucky(u)) {
      CHECK(c.witness[u] == kNoNode);
      continue;
    }
    ++lucky;
    REQUIRE(c.is_bad(u));
    const NodeId w = c.witness[u];
    REQUIRE(g.has_edge(u, w));
    const auto& s = c.lucky_set(u);
    CHECK(s.size() == lucky_set_size(std::uint64_t{1} << c.bad_class[u]));
    std::size_t same = 0;
    for (NodeId x : g.neighbors(w)) {
      same += c.bad_class[x] == c.bad_class[u] ? 1 : 0;
    }
    CHECK(same >= s.size());
    for (NodeId x : s) {
      CHECK(g.has_edge(w, x));
      CHECK(c.bad_class[x] == c.bad_class[u]);
    }
    // No lower-id neighbour qualifies.
    for (NodeId y : g.neighbors(u)) {
      if (y >= w) {
        continue;
      }
      std::size_t cnt = 0;
      for (NodeId x : g.neighbors(y)) {
        cnt += c.bad_class[x] == c.bad_class[u] ? 1 : 0;
      }
      CHECK(cnt < s.size());
    }
  }
  CHECK(lucky > 0);
}

TEST_CASE("bad-star counting") {
  CHECK(count_bad_star_classes(gen_empty(0), classify_nodes(gen_empty(0))).empty());
  for (const char* spec : {"bad-node-gadget:d=64,q=16", "bad-node-gadget:d=128,q=16", "class-union:classes=64+128+256"}) {
    const Graph g = generate(spec, 2);
    const NodeClassification c = classify_nodes(g);
    for (const auto& row : count_bad_star_classes(g, c)) {
      const long double lhs = row.star * std::pow(static_cast<long double>(1ULL << row.exp), 0.4L);
      CHECK(row.holds == (lhs <= 12.0L * row.at_least_d));
      CHECK(row.holds);
    }
  }
}
