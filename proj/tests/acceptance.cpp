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

// Acceptance run: one PASS/FAIL line per criterion.

#include "oracles.hpp"
#include "rs2/derand.hpp"
#include "rs2/generators.hpp"
#include "rs2/harness.hpp"
#include "rs2/hash_family.hpp"
#include "rs2/linear.hpp"
#include "rs2/sublinear.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace rs2;

namespace {

// Pinned tolerances.
constexpr double kSuiteSeconds = 600.0;
constexpr double kMaxEdgesConstant = 16.0;
constexpr unsigned kMaxIterations = 20;
constexpr std::uint64_t kEpsPrimeDen = 50;  // eps' >= 1/50
constexpr double kMaxScalingConstant = 4.0;

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) {
      detail = why;
    }
    pass = false;
  }
};

struct SuiteRun {
  std::string source;
  Graph graph;
  LinearResult linear;
  SublinearResult sublinear;
  std::string error;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

std::vector<std::string> suite_specs() {
  return {
      "gnp:n=150,p=0.05@1",
      "gnp:n=150,p=0.05@2",
      "gnp:n=200,p=0.2@1",
      "d-regular:n=120,d=12@1",
      "chung-lu:n=200,avg=10@1",
      "star:leaves=150@1",
      "path:n=100@1",
      "cycle:n=199@1",
      "complete-bipartite:a=20,b=60@1",
      "bipartite:a=50,b=100,p=0.3@1",
      "clique:n=60@1",
      "empty:n=50@1",
      "d-regular:n=1024,d=16@1",
      "d-regular:n=2048,d=16@1",
      "d-regular:n=4096,d=16@1",
      "d-regular:n=8192,d=16@1",
      "d-regular:n=16384,d=16@1",
      "d-regular:n=16384,d=64@1",
      "gnp:n=4096,p=0.01@1",
      "gnp:n=16384,p=0.0012@1",
      "chung-lu:n=4096,avg=10@1",
      "chung-lu:n=8192,avg=12@2",
      "chung-lu:n=16384,avg=16@3",
      "bipartite:a=4096,b=4096,p=0.004@1",
      "complete-bipartite:a=64,b=4096@1",
      "star:leaves=16383@1",
      "path:n=16384@1",
      "cycle:n=16384@1",
      "clique:n=512@1",
      "class-union:classes=64+128+256+512+1024@1",
      "bad-node-gadget:d=64,q=16@1",
      "lucky-gadget:d=128,q=16@2",
  };
}

std::pair<std::string, std::uint64_t> split_seed(const std::string& s) {
  const auto at = s.rfind('@');
  return {s.substr(0, at), std::stoull(s.substr(at + 1))};
}

LinearResult linear_exact_steps(const Graph& g) {
  LinearConfig cfg;
  cfg.c_lin = 4;
  cfg.k_sample = 2;
  cfg.sample_prime = next_prime(std::max<std::size_t>(g.node_count(), 2));
  cfg.mis_prime = cfg.sample_prime;
  cfg.derand.backend = Backend::Exhaustive;
  return run_linear(g, cfg);
}

/// Smallest s with 2^(s^2) >= delta, as f = 2^s.
std::uint64_t sweep_f(std::uint64_t delta) {
  unsigned s = 1;
  while (s * s < 64 && (std::uint64_t{1} << (s * s)) < delta) {
    ++s;
  }
  return std::uint64_t{1} << s;
}

Bipartition first_side(const Graph& g, std::size_t a) {
  std::vector<NodeId> u(a);
  std::iota(u.begin(), u.end(), NodeId{0});
  std::vector<char> pool(g.node_count(), 0);
  for (std::size_t v = a; v < g.node_count(); ++v) {
    pool[v] = 1;
  }
  return make_bipartition(g, u, pool);
}

Graph padded(const Graph& g, std::size_t n) {
  std::vector<Edge> e = g.edges();
  return Graph::from_edges(std::max(n, g.node_count()), std::move(e));
}

// ---------------------------------------------------------------------------

void criterion_uniformity(Criterion& c) {
  std::size_t checked = 0;
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (unsigned k : {2u, 3u}) {
      const HashSpec spec{k, p, p, p};
      std::vector<Seed> seeds;
      FamilyEnumerator en(spec, UINT64_MAX);
      Seed s;
      while (en.next(s)) {
        seeds.push_back(s);
      }
      std::uint64_t expect_total = 1;
      for (unsigned i = 0; i < k; ++i) {
        expect_total *= p;
      }
      if (seeds.size() != expect_total) {
        c.fail("family size mismatch at p=" + std::to_string(p));
      }
      for (unsigned t = 1; t <= k; ++t) {
        std::vector<std::uint64_t> pts(t);
        std::iota(pts.begin(), pts.end(), 0);
        for (;;) {
          std::map<std::vector<std::uint64_t>, std::uint64_t> hist;
          for (const Seed& a : seeds) {
            std::vector<std::uint64_t> v(t);
            for (unsigned i = 0; i < t; ++i) {
              v[i] = oracle::poly(a, p, pts[i]);
            }
            ++hist[v];
          }
          std::uint64_t cells = 1;
          for (unsigned i = 0; i < t; ++i) {
            cells *= p;
          }
          if (hist.size() != cells) {
            c.fail("missing value tuple at p=" + std::to_string(p) + ", k=" + std::to_string(k));
          }
          for (const auto& [key, cnt] : hist) {
            if (cnt * cells != expect_total) {
              c.fail("non-uniform tuple at p=" + std::to_string(p) + ", k=" + std::to_string(k));
            }
          }
          ++checked;
          int i = static_cast<int>(t) - 1;
          while (i >= 0 && pts[static_cast<std::size_t>(i)] == p - t + static_cast<unsigned>(i)) {
            --i;
          }
          if (i < 0) {
            break;
          }
          ++pts[static_cast<std::size_t>(i)];
          for (std::size_t j = static_cast<std::size_t>(i) + 1; j < t; ++j) {
            pts[j] = pts[j - 1] + 1;
          }
        }
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(checked) + " point sets, every value tuple hit p^(k-t) times";
  }
}

void criterion_tail(Criterion& c) {
  struct Case {
    std::uint64_t p;
    unsigned k;
  };
  std::size_t events = 0;
  double worst = 0;
  for (const Case cs : {Case{31, 2}, Case{101, 2}, Case{17, 4}, Case{31, 4}}) {
    const std::uint64_t p = cs.p;
    const HashSpec spec{cs.k, p, p, p};
    const std::vector<std::uint64_t> sizes{p / 2, p};
    // hist[size][T][X]
    std::vector<std::vector<std::vector<std::uint64_t>>> hist(
        sizes.size(), std::vector<std::vector<std::uint64_t>>(p, std::vector<std::uint64_t>(p + 1, 0)));
    FamilyEnumerator en(spec, UINT64_MAX);
    Seed s;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> below(p + 1);
    while (en.next(s)) {
      ++total;
      for (std::size_t si = 0; si < sizes.size(); ++si) {
        std::fill(below.begin(), below.end(), 0);
        for (std::uint64_t x = 0; x < sizes[si]; ++x) {
          ++below[oracle::poly(s, p, x) + 1];
        }
        for (std::uint64_t t = 1; t <= p; ++t) {
          below[t] += below[t - 1];
        }
        for (std::uint64_t t = 1; t < p; ++t) {
          ++hist[si][t][below[t]];
        }
      }
    }
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      const std::uint64_t m = sizes[si];
      for (std::uint64_t t = 1; t < p; ++t) {
        // mu = m t / p; require mu >= k.
        if (m * t < cs.k * p) {
          continue;
        }
        const double mu = static_cast<double>(m * t) / static_cast<double>(p);
        for (std::uint64_t e = 1; e <= 60; ++e) {
          // |X - mu| >= (e/20) mu  <=>  20 |X p - m t| >= e m t.
          std::uint64_t hits = 0;
          for (std::uint64_t x = 0; x <= m; ++x) {
            const std::uint64_t dev = x * p > m * t ? x * p - m * t : m * t - x * p;
            if (20 * dev >= e * m * t) {
              hits += hist[si][t][x];
            }
          }
          const double eps = static_cast<double>(e) / 20.0;
          const double bound = oracle::tail_bound(cs.k, eps, mu);
          const double freq = static_cast<double>(hits) / static_cast<double>(total);
          ++events;
          if (bound < 1.0) {
            worst = std::max(worst, freq / bound);
          }
          if (freq > bound) {
            c.fail("p=" + std::to_string(p) + " k=" + std::to_string(cs.k) + " mu=" + fmt(mu) + " eps=" + fmt(eps) +
                   ": " + fmt(freq) + " > " + fmt(bound));
          }
        }
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(events) + " (spec, mu, eps) events, max freq/bound " + fmt(worst);
  }
}

void criterion_derand(Criterion& c, const std::vector<SuiteRun>& runs) {
  std::size_t exact_steps = 0;
  auto check_steps = [&](const std::vector<DerandStep>& steps, const std::string& where) {
    for (const auto& s : steps) {
      if (s.mean_kind == MeanKind::Exact) {
        ++exact_steps;
        if (!s.within_mean) {
          c.fail(where + " " + s.stage + ": value above the family mean");
        }
      }
    }
  };
  for (const auto& r : runs) {
    check_steps(r.linear.derand_steps, r.source);
    check_steps(r.sublinear.derand_steps, r.source);
  }
  std::size_t small_runs = 0;
  for (const char* spec : {"gnp:n=300,p=0.05", "chung-lu:n=400,avg=8", "d-regular:n=256,d=24"}) {
    const Graph g = generate(spec, 1);
    const LinearResult r = linear_exact_steps(g);
    ++small_runs;
    if (r.derand_steps.empty()) {
      c.fail(std::string(spec) + ": no derandomization steps");
    }
    for (const auto& s : r.derand_steps) {
      if (s.mean_kind != MeanKind::Exact) {
        c.fail(std::string(spec) + " " + s.stage + ": mean not exact");
      }
    }
    check_steps(r.derand_steps, spec);
  }
  std::size_t greedy_checks = 0;
  for (const char* spec : {"cycle:n=12", "gnp:n=40,p=0.15", "star:leaves=30", "d-regular:n=48,d=6"}) {
    const Graph g = generate(spec, 3);
    const NodeClassification cls = classify_nodes(g);
    std::vector<NodeId> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), NodeId{0});
    for (unsigned k : {2u, 3u}) {
      const HashSpec hs{k, next_prime(std::max<std::size_t>(g.node_count(), 11)), g.node_count(),
                        next_prime(std::max<std::size_t>(g.node_count(), 11))};
      const LinearStep step(g, ids, cls, hs, hs);
      const Objective obj = step.edges_objective();
      const SearchResult ex = find_seed_exhaustive(hs, obj, UINT64_MAX);
      const SearchResult gr = find_seed_greedy(hs, obj, UINT64_MAX);
      const auto brute = oracle::brute_min(hs.p, k, [&](const std::vector<std::uint64_t>& a) { return obj.value(a); });
      ++greedy_checks;
      if (ex.value != brute.value) {
        c.fail(std::string(spec) + ": exhaustive minimum differs from enumeration");
      }
      if (oracle::big(ex.value) * brute.count > brute.total) {
        c.fail(std::string(spec) + ": exhaustive above mean");
      }
      if (gr.value < ex.value) {
        c.fail(std::string(spec) + ": greedy below the exhaustive minimum");
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(exact_steps) + " exact-mean steps within the mean (" + std::to_string(small_runs) +
               " enumerable runs), " + std::to_string(greedy_checks) + " greedy/exhaustive pairs";
  }
}

void criterion_edges(Criterion& c, const std::vector<SuiteRun>& runs) {
  double worst = 0;
  for (const auto& r : runs) {
    worst = std::max(worst, r.linear.c_edges);
    if (r.linear.c_edges > kMaxEdgesConstant) {
      c.fail(r.source + ": C_edges " + fmt(r.linear.c_edges));
    }
  }
  std::size_t means = 0;
  for (const char* spec : {"cycle:n=4", "cycle:n=12", "path:n=20", "gnp:n=40,p=0.15", "d-regular:n=48,d=6", "star:leaves=30"}) {
    const Graph g = generate(spec, 2);
    const NodeClassification cls = classify_nodes(g);
    std::vector<NodeId> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), NodeId{0});
    const std::uint64_t p = next_prime(std::max<std::size_t>(g.node_count(), 13));
    const HashSpec hs{2, p, g.node_count(), p};
    const LinearStep step(g, ids, cls, hs, hs);
    const auto bound = static_cast<std::uint64_t>(kMaxEdgesConstant) * g.node_count();
    const MeanCheck mc = verify_mean_bound(hs, step.edges_objective(), bound, UINT64_MAX);
    ++means;
    if (!mc.holds) {
      c.fail(std::string(spec) + ": family mean " + fmt(mc.mean()) + " above " + std::to_string(bound));
    }
  }
  if (c.pass) {
    c.detail = "max C_edges " + fmt(worst) + " over " + std::to_string(runs.size()) + " runs; " + std::to_string(means) +
               " exact family means <= 16 n";
  }
}

void criterion_progress(Criterion& c, const std::vector<SuiteRun>& runs) {
  double eps = 1e9;
  std::size_t rows = 0;
  std::size_t zero = 0;
  auto check_run = [&](const std::string& where, const LinearResult& r) {
    if (r.iterations.empty()) {
      return;
    }
    for (const auto& row : r.survival) {
      if (row.exp < 6 || row.exp > 10 || row.counts[0] == 0) {
        continue;
      }
      ++rows;
      const std::uint64_t before = row.counts[0];
      const std::uint64_t after = row.counts[1];
      if (after == 0) {
        ++zero;
        continue;
      }
      // after / before <= d^(-1/50)  <=>  after^50 d <= before^50.
      const oracle::big lhs = boost::multiprecision::pow(oracle::big(after), kEpsPrimeDen) * (oracle::big(1) << row.exp);
      const oracle::big rhs = boost::multiprecision::pow(oracle::big(before), kEpsPrimeDen);
      eps = std::min(eps, -std::log(static_cast<double>(after) / static_cast<double>(before)) / (row.exp * std::log(2.0)));
      if (lhs > rhs) {
        c.fail(where + " class 2^" + std::to_string(row.exp) + ": " + std::to_string(after) + "/" +
               std::to_string(before) + " survive");
      }
    }
  };
  for (const char* spec : {"class-union:classes=64+128+256+512+1024", "class-union:classes=64+128", "bad-node-gadget:d=64,q=16",
                           "lucky-gadget:d=128,q=16", "lucky-gadget:d=64,q=8"}) {
    for (std::uint64_t seed : {1u, 2u}) {
      const Graph g = generate(spec, seed);
      check_run(spec, run_linear(g));
    }
  }
  for (const auto& r : runs) {
    check_run(r.source, r.linear);
    if (r.linear.iterations.size() > kMaxIterations) {
      c.fail(r.source + ": " + std::to_string(r.linear.iterations.size()) + " iterations");
    }
    const double residual = 2.0 * static_cast<double>(r.linear.residual_edges);
    if (residual > kMaxEdgesConstant * static_cast<double>(std::max<std::size_t>(r.graph.node_count(), 1))) {
      c.fail(r.source + ": residual degree sum " + fmt(residual));
    }
  }
  if (rows == 0) {
    c.fail("no class rows measured");
  }
  if (c.pass) {
    c.detail = std::to_string(rows) + " class rows, " + std::to_string(zero) + " fully cleared, min fitted eps' " +
               (eps > 1e8 ? std::string("n/a (all cleared)") : fmt(eps));
  }
}

void criterion_flatness(Criterion& c, const std::vector<SuiteRun>& runs) {
  std::vector<std::uint64_t> totals;
  for (std::size_t e = 10; e <= 14; ++e) {
    const std::string want = "d-regular:n=" + std::to_string(std::size_t{1} << e) + ",d=16@1";
    for (const auto& r : runs) {
      if (r.source != want) {
        continue;
      }
      totals.push_back(r.linear.ledger.total_rounds());
      if (r.linear.ledger.over_cap()) {
        c.fail(want + ": peak global space over cap");
      }
    }
  }
  if (totals.size() != 5) {
    c.fail("missing n-sweep runs");
    return;
  }
  if (std::adjacent_find(totals.begin(), totals.end(), std::not_equal_to<>()) != totals.end()) {
    std::string s;
    for (auto t : totals) {
      s += std::to_string(t) + " ";
    }
    c.fail("rounds differ: " + s);
  }
  if (c.pass) {
    c.detail = "total rounds " + std::to_string(totals[0]) + " for n = 2^10..2^14, within global cap";
  }
}

void criterion_counting(Criterion& c, const std::vector<SuiteRun>& runs) {
  std::size_t iters = 0;
  std::size_t rows = 0;
  for (const auto& r : runs) {
    for (const auto& it : r.linear.iterations) {
      ++iters;
      for (const auto& row : it.counting) {
        ++rows;
        // star * d^(2/5) <= 12 * at_least_d  <=>  star^5 d^2 <= (12 at_least_d)^5.
        const oracle::big d = oracle::big(1) << row.exp;
        const bool holds = boost::multiprecision::pow(oracle::big(row.star), 5) * d * d <=
                           boost::multiprecision::pow(oracle::big(12 * row.at_least_d), 5);
        if (!holds || !row.holds || row.star + row.lucky != row.bad) {
          c.fail(r.source + " iteration " + std::to_string(it.index) + " class 2^" + std::to_string(row.exp));
        }
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(rows) + " class rows over " + std::to_string(iters) + " iterations";
  }
}

void criterion_window(Criterion& c) {
  std::size_t checked = 0;
  for (unsigned e : {8u, 10u, 12u, 14u}) {
    const std::size_t delta = std::size_t{1} << e;
    const std::vector<std::pair<std::string, Graph>> gs{
        {"K_{4,D}", gen_complete_bipartite(4, delta)},
        {"random", gen_random_bipartite(8, delta, 0.97, e)},
    };
    for (const auto& [name, g] : gs) {
      const std::size_t a = name == "random" ? 8 : 4;
      const Bipartition b = first_side(g, a);
      SublinearConfig cfg;
      cfg.local_memory = delta;
      Derandomizer dz(cfg.derand, nullptr);
      const SquareColoring col = color_square(g, b, cfg.c_id, *cfg.local_memory);
      const std::string where = name + " D=2^" + std::to_string(e);
      try {
        const ReduceResult r = degree_reduce_step(g, b, col, g.node_count(), dz, cfg);
        const double tau = std::log2(static_cast<double>(g.node_count())) * std::pow(static_cast<double>(b.delta), 0.6);
        for (NodeId u : b.U) {
          const std::uint64_t deg = g.degree(u);
          if (static_cast<double>(deg) < tau) {
            continue;
          }
          std::uint64_t cnt = 0;
          for (NodeId w : g.neighbors(u)) {
            cnt += r.sampled[w] ? 1 : 0;
          }
          ++checked;
          const oracle::big c2 = oracle::big(cnt) * cnt;
          const oracle::big d2 = oracle::big(deg) * deg;
          if (c2 * 9 * b.delta < d2 || c2 * b.delta > d2) {
            c.fail(where + ": count " + std::to_string(cnt) + " outside window for degree " + std::to_string(deg));
          }
        }
      } catch (const NoCompliantSeed& ex) {
        c.fail(where + ": " + ex.what());
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(checked) + " heavy U-nodes recounted, all inside the window";
  }
}

void criterion_sparsify(Criterion& c) {
  std::size_t checked = 0;
  unsigned max_k = 0;
  for (unsigned e : {8u, 10u, 12u, 14u}) {
    const std::size_t delta = std::size_t{1} << e;
    const std::vector<std::pair<std::string, Graph>> gs{
        {"K_{4,D}", padded(gen_complete_bipartite(4, delta), std::size_t{1} << 14)},
        {"random", padded(gen_random_bipartite(8, delta, 0.97, e), std::size_t{1} << 14)},
    };
    for (const auto& [name, g] : gs) {
      const std::size_t a = name == "random" ? 8 : 4;
      Bipartition b = first_side(g, a);
      std::vector<char> pool(g.node_count(), 0);
      for (std::size_t v = a; v < a + delta; ++v) {
        pool[v] = 1;
      }
      b = make_bipartition(g, b.U, pool);
      const SublinearConfig cfg;
      RoundLedger ledger(cfg.mpc(g.node_count(), g.edge_count()));
      Derandomizer dz(cfg.derand, &ledger);
      const std::string where = name + " D=2^" + std::to_string(e);
      try {
        const SparsifyResult s = sparsify(g, b, sweep_f(b.delta), g.node_count(), dz, ledger, cfg);
        std::uint64_t cap = 1;
        for (unsigned i = 0; i < s.c_cap; ++i) {
          cap *= s.f;
        }
        for (NodeId u : b.U) {
          std::uint64_t cnt = 0;
          for (NodeId w : g.neighbors(u)) {
            cnt += s.sampled[w] ? 1 : 0;
          }
          ++checked;
          if (cnt < 1 || cnt > cap) {
            c.fail(where + ": final degree " + std::to_string(cnt) + " outside [1, " + std::to_string(cap) + "]");
          }
        }
        const std::uint64_t l = static_cast<std::uint64_t>(std::bit_width(s.delta_prime)) - 1;
        const unsigned loglog = s.delta_prime < 4 ? 0 : static_cast<unsigned>(std::bit_width(l)) - 1;
        max_k = std::max(max_k, s.k_run);
        if (s.k_run > loglog + 1) {
          c.fail(where + ": " + std::to_string(s.k_run) + " inner iterations");
        }
      } catch (const std::exception& ex) {
        c.fail(where + ": " + ex.what());
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(checked) + " U-nodes in [1, f^c_cap], max inner iterations " + std::to_string(max_k);
  }
}

void criterion_scaling(Criterion& c) {
  const std::size_t n = std::size_t{1} << 14;
  double cmax = 0;
  std::uint64_t prev = 0;
  std::string series;
  for (std::size_t delta : {16u, 64u, 256u, 1024u, 4096u}) {
    const std::size_t f = sweep_f(delta);
    const Graph g = padded(gen_complete_bipartite(delta / f, delta), n);
    const SublinearResult r = run_sublinear(g);
    if (!r.certificate.valid) {
      c.fail("invalid ruling set at delta=" + std::to_string(delta));
    }
    const double ld = std::log2(static_cast<double>(delta));
    const double shape = std::sqrt(ld) * std::log2(ld);
    const double ratio = static_cast<double>(r.rounds_excluding_final) / shape;
    cmax = std::max(cmax, ratio);
    series += std::to_string(delta) + ":" + std::to_string(r.rounds_excluding_final) + "+" +
              std::to_string(r.final_mis.rounds) + " ";
    if (r.rounds_excluding_final < prev) {
      c.fail("rounds drop at delta=" + std::to_string(delta));
    }
    prev = r.rounds_excluding_final;
  }
  if (cmax > kMaxScalingConstant) {
    c.fail("fitted C " + fmt(cmax) + " above " + fmt(kMaxScalingConstant));
  }
  c.detail = (c.pass ? "" : c.detail + "; ") + "C = " + fmt(cmax) + ", rounds(delta) = " + series;
}

void criterion_determinism(Criterion& c) {
  std::size_t compared = 0;
  for (const char* spec : {"chung-lu:n=3000,avg=12", "class-union:classes=64+128", "gnp:n=2000,p=0.01"}) {
    for (Algorithm a : {Algorithm::Linear, Algorithm::Sublinear}) {
      ExperimentConfig cfg;
      cfg.algorithm = a;
      cfg.generator = spec;
      const Graph g = build_graph(cfg);
      const std::string first = dump(run_on(g, spec, cfg).report);
      const std::string again = dump(run_on(g, spec, cfg).report);
      cfg.linear.derand.threads = 3;
      cfg.sublinear.derand.threads = 3;
      const std::string threaded = dump(run_on(g, spec, cfg).report);
      compared += 2;
      if (first != again || first != threaded) {
        c.fail(std::string(spec) + " " + to_string(a) + ": reports differ");
      }
    }
  }
  if (c.pass) {
    c.detail = std::to_string(compared) + " report pairs byte-identical (repeat and 3 threads)";
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Criterion> cs;
  for (const auto& [id, name] : std::vector<std::pair<int, std::string>>{
           {1, "ruling-set validity"},
           {2, "k-wise uniformity"},
           {3, "tail bound"},
           {4, "derandomization guarantee"},
           {5, "linear gathering size"},
           {6, "per-iteration progress"},
           {7, "linear round flatness"},
           {8, "bad-star counting"},
           {9, "reduction window"},
           {10, "sparsification cap"},
           {11, "sublinear scaling"},
           {12, "determinism"},
       }) {
    cs.push_back({id, name});
  }

  const auto t0 = clock::now();
  std::vector<SuiteRun> runs;
  std::size_t oracle_checked = 0;
  for (const auto& spec : suite_specs()) {
    const auto [gen, seed] = split_seed(spec);
    SuiteRun r;
    r.source = spec;
    try {
      r.graph = generate(gen, seed);
      r.linear = run_linear(r.graph);
      r.sublinear = run_sublinear(r.graph);
    } catch (const std::exception& e) {
      cs[0].fail(spec + ": " + e.what());
      continue;
    }
    for (const auto* cert : {&r.linear.certificate, &r.sublinear.certificate}) {
      if (!cert->valid || !cert->independence_violations.empty() || !cert->uncovered.empty()) {
        cs[0].fail(spec + ": certificate rejected");
      }
    }
    if (r.graph.node_count() <= 200) {
      ++oracle_checked;
      const auto edges = r.graph.edges();
      for (const auto* members : {&r.linear.members, &r.sublinear.members}) {
        if (!oracle::is_ruling_set(r.graph.node_count(), edges, *members, 2)) {
          cs[0].fail(spec + ": all-pairs oracle rejects");
        }
      }
    }
    runs.push_back(std::move(r));
  }
  const double suite_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  if (runs.size() < 30) {
    cs[0].fail("suite has only " + std::to_string(runs.size()) + " graphs");
  }
  if (suite_seconds > kSuiteSeconds) {
    cs[0].fail("suite took " + fmt(suite_seconds) + " s");
  }
  if (cs[0].pass) {
    cs[0].detail = std::to_string(runs.size()) + " graphs x 2 algorithms valid, " + std::to_string(oracle_checked) +
                   " cross-checked by all-pairs BFS, " + fmt(suite_seconds) + " s";
  }

  criterion_uniformity(cs[1]);
  criterion_tail(cs[2]);
  criterion_derand(cs[3], runs);
  criterion_edges(cs[4], runs);
  criterion_progress(cs[5], runs);
  criterion_flatness(cs[6], runs);
  criterion_counting(cs[7], runs);
  criterion_window(cs[8]);
  criterion_sparsify(cs[9]);
  criterion_scaling(cs[10]);
  criterion_determinism(cs[11]);

  bool all = true;
  for (const auto& c : cs) {
    std::printf("%s %2d %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    all = all && c.pass;
  }
  std::printf("total %.1f s\n", std::chrono::duration<double>(clock::now() - t0).count());
  return all ? 0 : 1;
}
