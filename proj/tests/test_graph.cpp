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

#include "oracles.hpp"
#include "rs2/generators.hpp"
#include "rs2/graph.hpp"
#include "rs2/verify.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace rs2;

TEST_CASE("edge-list parsing") {
  const Graph path = load_graph("0 1\n1 2");
  CHECK(path.node_count() == 3);
  CHECK(path.degree(0) == 1);
  CHECK(path.degree(1) == 2);
  CHECK(path.degree(2) == 1);

  const Graph single = load_graph("0 1\n1 0");
  CHECK(single.edge_count() == 1);

  CHECK_THROWS_AS(load_graph("0 0"), GraphFormatError);
  CHECK_THROWS_AS(load_graph("0 x"), GraphFormatError);
}

TEST_CASE("header and comments") {
  const Graph g = load_graph("# comment\n5 2\n% other\n0 1\n3 4\n");
  CHECK(g.node_count() == 5);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(2) == 0);
  CHECK_THROWS_AS(load_graph("3 1\n0 7\n"), GraphFormatError);
  // Without a matching count the first line is an edge.
  const Graph h = load_graph("2 3\n0 1\n");
  CHECK(h.node_count() == 4);
  CHECK(h.edge_count() == 2);
}

TEST_CASE("csr queries") {
  const Graph g = Graph::from_edges(5, {{3, 1}, {1, 0}, {1, 3}, {4, 2}});
  CHECK(g.edge_count() == 3);
  CHECK(g.max_degree() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 3}, {2, 4}});
  CHECK(g.words() == 5 + 6);
  const auto nb = g.neighbors(1);
  CHECK(std::vector<NodeId>(nb.begin(), nb.end()) == std::vector<NodeId>{0, 3});
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), GraphFormatError);
}

TEST_CASE("induced subgraph keeps parent ids") {
  const Graph g = gen_cycle(6);
  const std::vector<NodeId> keep{0, 1, 2, 4};
  const Subgraph s = induced_subgraph(g, keep);
  CHECK(s.graph.node_count() == 4);
  CHECK(s.graph.edge_count() == 2);
  CHECK(s.to_parent == keep);
  CHECK(s.graph.has_edge(0, 1));
  CHECK(s.graph.has_edge(1, 2));
  CHECK(s.graph.degree(3) == 0);
}

TEST_CASE("edge-list round trip") {
  const Graph g = gen_gnp(60, 0.1, 4);
  std::ostringstream os;
  write_edge_list(os, g);
  const Graph h = load_graph(os.str());
  CHECK(h.node_count() == g.node_count());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("ruling-set certificates on hand examples") {
  const Graph p = gen_path(5);
  const std::vector<NodeId> good{0, 3};
  const CertificateReport ok = verify_ruling_set(p, good);
  CHECK(ok.valid);
  CHECK(ok.distance == std::vector<std::uint32_t>{0, 1, 1, 0, 1});

  const std::vector<NodeId> adjacent{0, 1};
  const CertificateReport bad = verify_ruling_set(p, adjacent);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.independence_violations.size() == 1);
  CHECK(bad.independence_violations[0] == Edge{0, 1});
  CHECK(bad.uncovered == std::vector<NodeId>{4});

  const std::vector<NodeId> center{0};
  CHECK(verify_ruling_set(gen_star(8), center).valid);

  const std::vector<NodeId> out{9};
  const CertificateReport oor = verify_ruling_set(p, out);
  CHECK_FALSE(oor.valid);
  CHECK(oor.out_of_range == std::vector<NodeId>{9});

  CHECK(verify_ruling_set(gen_empty(0), {}).valid);
  CHECK_FALSE(verify_ruling_set(gen_empty(2), {}).valid);
}

TEST_CASE("verify matches the all-pairs oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + rng() % 40;
    const Graph g = gen_gnp(n, 0.05 + 0.02 * (trial % 6), trial);
    std::vector<NodeId> set;
    for (NodeId v = 0; v < n; ++v) {
      if (rng() % 5 == 0) {
        set.push_back(v);
      }
    }
    const auto edges = g.edges();
    for (unsigned beta : {1u, 2u, 3u}) {
      CHECK(verify_ruling_set(g, set, beta).valid == oracle::is_ruling_set(n, edges, set, beta));
    }
  }
}

TEST_CASE("distance_to_set stops at the limit") {
  const Graph p = gen_path(6);
  const std::vector<NodeId> src{0};
  const auto d = distance_to_set(p, src, 2);
  CHECK(d[0] == 0);
  CHECK(d[2] == 2);
  CHECK(d[3] == kFar);
}
