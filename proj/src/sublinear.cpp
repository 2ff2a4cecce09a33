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

#include "rs2/sublinear.hpp"

#include "rs2/linear.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>

namespace rs2 {
namespace {

u128 sat_pow(std::uint64_t base, unsigned e) {
  const u128 cap = static_cast<u128>(1) << 100;
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
    if (r > cap) {
      return cap;
    }
  }
  return r;
}

std::uint64_t sat_pow64(std::uint64_t base, unsigned e) {
  const u128 r = sat_pow(base, e);
  return r > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(r);
}

std::vector<char> u_mask(const Graph& g, const Bipartition& b) {
  std::vector<char> m(g.node_count(), 0);
  for (NodeId u : b.U) {
    m[u] = 1;
  }
  return m;
}

// Pool nodes adjacent to U, ascending.
std::vector<NodeId> touched(const Graph& g, const Bipartition& b) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> out;
  for (NodeId u : b.U) {
    for (NodeId w : g.neighbors(u)) {
      if (b.pool[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Probability that Bin(d, q) lies in [lo, hi].
double binomial_mass(std::uint64_t d, double q, std::uint64_t lo, std::uint64_t hi) {
  if (q <= 0) {
    return lo == 0 ? 1.0 : 0.0;
  }
  if (q >= 1) {
    return (lo <= d && d <= hi) ? 1.0 : 0.0;
  }
  double log_pmf = static_cast<double>(d) * std::log1p(-q);
  const double ratio = std::log(q) - std::log1p(-q);
  double mass = 0;
  for (std::uint64_t c = 0; c <= std::min(d, hi); ++c) {
    if (c >= lo) {
      mass += std::exp(log_pmf);
    }
    log_pmf += std::log(static_cast<double>(d - c)) - std::log(static_cast<double>(c + 1)) + ratio;
  }
  return std::min(mass, 1.0);
}

std::uint64_t window_lo(std::uint64_t deg, std::uint64_t delta) {
  std::uint64_t c = 0;
  while (!in_reduce_window(c, deg, delta) && static_cast<u128>(c) * c * delta <= static_cast<u128>(deg) * deg) {
    ++c;
  }
  return c;
}

std::uint64_t window_hi(std::uint64_t deg, std::uint64_t delta) {
  return delta == 0 ? deg : isqrt(static_cast<u128>(deg) * deg / delta);
}

// Expected number of violated constraints of a reduce step under fully
// independent sampling at probability q.
double predicted_violations(const std::vector<std::uint64_t>& degs, const std::vector<char>& heavy, std::uint64_t delta,
                            double q) {
  std::map<std::pair<std::uint64_t, bool>, double> cache;
  double total = 0;
  for (std::size_t x = 0; x < degs.size(); ++x) {
    const std::uint64_t d = degs[x];
    if (d == 0) {
      continue;
    }
    auto [it, fresh] = cache.try_emplace({d, heavy[x] != 0}, 0.0);
    if (fresh) {
      double bad = binomial_mass(d, q, 0, 0);
      if (heavy[x]) {
        bad += 1.0 - binomial_mass(d, q, std::max<std::uint64_t>(1, window_lo(d, delta)), window_hi(d, delta));
      }
      it->second = bad;
    }
    total += it->second;
  }
  return total;
}

}  // namespace

MpcConfig SublinearConfig::mpc(std::uint64_t n, std::uint64_t m) const {
  MpcConfig c = MpcConfig::sublinear(n, m, alpha);
  c.c_sub = c_sub;
  c.c_global = c_global;
  c.c_derand = c_derand;
  c.c_prim = c_prim;
  return c;
}

Bipartition make_bipartition(const Graph& g, std::vector<NodeId> U, std::vector<char> pool) {
  Bipartition b{std::move(U), std::move(pool), 0};
  for (std::uint64_t d : pool_degrees(g, b)) {
    b.delta = std::max(b.delta, d);
  }
  return b;
}

std::vector<std::uint64_t> pool_degrees(const Graph& g, const Bipartition& b) {
  std::vector<std::uint64_t> out(b.U.size(), 0);
  for (std::size_t x = 0; x < b.U.size(); ++x) {
    for (NodeId w : g.neighbors(b.U[x])) {
      out[x] += b.pool[w] ? 1 : 0;
    }
  }
  return out;
}

Bipartition restrict_pool(const Graph& g, const Bipartition& b, const std::vector<char>& keep) {
  std::vector<char> pool(b.pool.size(), 0);
  for (std::size_t v = 0; v < pool.size(); ++v) {
    pool[v] = (b.pool[v] && keep[v]) ? 1 : 0;
  }
  return make_bipartition(g, b.U, std::move(pool));
}

SquareColoring color_square(const Graph& g, const Bipartition& b, unsigned c_id, std::uint64_t local_memory,
                            RoundLedger* ledger) {
  const std::size_t n = g.node_count();
  SquareColoring sc;
  sc.color.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    sc.color[v] = v;
  }
  sc.palette = std::max<std::uint64_t>(n, 1);
  if (sat_pow(std::max<std::uint64_t>(b.delta, 1), c_id) >= n || b.delta <= 1) {
    sc.method = "id";
    return sc;
  }

  const std::vector<char> in_u = u_mask(g, b);
  std::vector<std::uint64_t> pdeg(n, 0);
  {
    const auto degs = pool_degrees(g, b);
    for (std::size_t x = 0; x < b.U.size(); ++x) {
      pdeg[b.U[x]] = degs[x];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!b.pool[v]) {
      continue;
    }
    std::uint64_t words = 0;
    for (NodeId u : g.neighbors(static_cast<NodeId>(v))) {
      words += in_u[u] ? pdeg[u] : 0;
    }
    sc.gather_words = std::max(sc.gather_words, words);
  }
  if (sc.gather_words > local_memory) {
    throw ColoringInfeasible("two-hop gather needs " + std::to_string(sc.gather_words) + " words, local memory is " +
                             std::to_string(local_memory));
  }
  if (ledger != nullptr) {
    ledger->charge(Category::Coloring, 1, "two-hop gather");
  }

  std::vector<std::vector<NodeId>> conflicts(n);
  for (NodeId u : b.U) {
    std::vector<NodeId> members;
    for (NodeId w : g.neighbors(u)) {
      if (b.pool[w]) {
        members.push_back(w);
      }
    }
    for (NodeId v : members) {
      for (NodeId w : members) {
        if (w != v) {
          conflicts[v].push_back(w);
        }
      }
    }
  }
  std::uint64_t degree = 1;
  for (auto& c : conflicts) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    degree = std::max<std::uint64_t>(degree, c.size());
  }

  sc.method = "linial";
  std::uint64_t m = sc.palette;
  for (unsigned round = 0; round < 3; ++round) {
    std::uint64_t best_q = 0;
    unsigned best_t = 0;
    for (unsigned t = 1; t <= 8; ++t) {
      std::uint64_t q = next_prime(t * degree + 1);
      while (sat_pow(q, t + 1) < m) {
        q = next_prime(q + 1);
      }
      if (best_q == 0 || q < best_q) {
        best_q = q;
        best_t = t;
      }
    }
    if (static_cast<u128>(best_q) * best_q >= m) {
      break;
    }
    const std::uint64_t q = best_q;
    const unsigned t = best_t;
    auto coeffs = [&](std::uint64_t color) {
      std::vector<std::uint64_t> a(t + 1);
      for (auto& x : a) {
        x = color % q;
        color /= q;
      }
      return a;
    };
    std::vector<std::uint64_t> next(sc.color);
    for (std::size_t v = 0; v < n; ++v) {
      if (!b.pool[v]) {
        continue;
      }
      const auto av = coeffs(sc.color[v]);
      std::vector<std::vector<std::uint64_t>> aw;
      aw.reserve(conflicts[v].size());
      for (NodeId w : conflicts[v]) {
        aw.push_back(coeffs(sc.color[w]));
      }
      for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t pv = eval_poly(av, q, x);
        bool clash = false;
        for (const auto& a : aw) {
          if (eval_poly(a, q, x) == pv) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          next[v] = x * q + pv;
          break;
        }
      }
    }
    sc.color = std::move(next);
    m = q * q;
    sc.palette = m;
    ++sc.linial_rounds;
    if (ledger != nullptr) {
      ledger->charge(Category::Coloring, 1, "linial reduction");
    }
  }
  return sc;
}

std::size_t coloring_conflicts(const Graph& g, const Bipartition& b, const SquareColoring& c) {
  std::size_t bad = 0;
  for (NodeId u : b.U) {
    std::vector<std::uint64_t> colors;
    for (NodeId w : g.neighbors(u)) {
      if (b.pool[w]) {
        colors.push_back(c.color[w]);
      }
    }
    std::sort(colors.begin(), colors.end());
    for (std::size_t i = 1; i < colors.size(); ++i) {
      bad += colors[i] == colors[i - 1] ? 1 : 0;
    }
  }
  return bad;
}

std::uint64_t reduce_rate_denominator(std::uint64_t delta) {
  std::uint64_t r = (isqrt(static_cast<u128>(9) * delta) + 1) / 2;
  while (static_cast<u128>(4) * r * r < static_cast<u128>(9) * delta) {
    ++r;
  }
  while (r > 1 && static_cast<u128>(4) * (r - 1) * (r - 1) >= static_cast<u128>(9) * delta) {
    --r;
  }
  return std::max<std::uint64_t>(r, 1);
}

double heavy_threshold(std::uint64_t n, std::uint64_t delta) {
  return std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2))) * std::pow(static_cast<double>(delta), 0.6);
}

bool in_reduce_window(std::uint64_t count, std::uint64_t deg, std::uint64_t delta) {
  const u128 c2 = static_cast<u128>(count) * count;
  const u128 d2 = static_cast<u128>(deg) * deg;
  return 9 * c2 * delta >= d2 && c2 * delta <= d2;
}

unsigned hash_order(std::uint64_t n, std::uint64_t delta, std::uint64_t c) {
  const double ln = std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2)));
  const double ld = std::log2(static_cast<double>(std::max<std::uint64_t>(delta, 2)));
  const auto k = static_cast<unsigned>(std::ceil(4.0 * static_cast<double>(c) * ln / ld - 1e-9));
  return std::max(k, 2u);
}

ReduceResult degree_reduce_step(const Graph& g, const Bipartition& b, const SquareColoring& coloring, std::uint64_t n,
                                Derandomizer& dz, const SublinearConfig& cfg, const std::string& stage) {
  ReduceResult r;
  r.delta = b.delta;
  const std::uint64_t rate = reduce_rate_denominator(b.delta);
  r.spec = HashSpec{hash_order(n, b.delta, cfg.c_hash), next_prime(std::max(coloring.palette, rate)), coloring.palette,
                    rate};
  r.threshold = threshold_for_probability(r.spec, 1, rate);
  const std::vector<std::uint64_t> degs = pool_degrees(g, b);
  const double tau = heavy_threshold(n, b.delta);
  r.heavy_flags.resize(b.U.size());
  for (std::size_t x = 0; x < b.U.size(); ++x) {
    r.heavy_flags[x] = static_cast<double>(degs[x]) >= tau ? 1 : 0;
    r.heavy += r.heavy_flags[x];
  }
  const std::vector<NodeId> touch = touched(g, b);
  std::vector<std::int32_t> slot(g.node_count(), -1);
  for (std::size_t i = 0; i < touch.size(); ++i) {
    slot[touch[i]] = static_cast<std::int32_t>(i);
  }

  struct Eval {
    std::uint64_t violations = 0;
    std::uint64_t uncovered = 0;
    std::vector<std::uint64_t> counts;
  };
  const HashSpec spec = r.spec;
  const std::uint64_t thr = r.threshold;
  auto run = [&, spec, thr](std::span<const std::uint64_t> seed) {
    std::vector<char> hit(touch.size());
    for (std::size_t i = 0; i < touch.size(); ++i) {
      hit[i] = eval_poly(seed, spec.p, coloring.color[touch[i]]) < thr ? 1 : 0;
    }
    Eval e;
    e.counts.resize(b.U.size());
    for (std::size_t x = 0; x < b.U.size(); ++x) {
      std::uint64_t c = 0;
      for (NodeId w : g.neighbors(b.U[x])) {
        if (b.pool[w]) {
          c += hit[static_cast<std::size_t>(slot[w])];
        }
      }
      e.counts[x] = c;
      if (degs[x] > 0 && c == 0) {
        ++e.uncovered;
      }
      if (r.heavy_flags[x] && !in_reduce_window(c, degs[x], b.delta)) {
        ++e.violations;
      }
    }
    return e;
  };
  const Objective obj{"reduce-violations", 1, [&run](std::span<const std::uint64_t> seed) {
                        const Eval e = run(seed);
                        return e.violations + e.uncovered;
                      }};
  const SearchResult sr = dz.search(stage, spec, obj, 0);
  r.seed = sr.seed;
  r.examined = sr.examined;
  const Eval e = run(sr.seed);
  r.violations = e.violations;
  r.uncovered = e.uncovered;
  r.counts = e.counts;
  r.accepted = sr.value == 0;
  if (!r.accepted) {
    throw NoCompliantSeed(stage + ": best of " + std::to_string(sr.examined) + " seeds leaves " +
                          std::to_string(r.violations) + " window violations and " + std::to_string(r.uncovered) +
                          " uncovered nodes");
  }
  r.sampled.assign(g.node_count(), 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (b.pool[v]) {
      r.sampled[v] = eval_poly(r.seed, spec.p, coloring.color[v]) < thr ? 1 : 0;
    }
  }
  return r;
}

ReduceResult degree_reduce_highdeg(const Graph& g, const Bipartition& b, std::uint64_t n, std::uint64_t group,
                                   Derandomizer& dz, const SublinearConfig& cfg, const std::string& stage) {
  ReduceResult r;
  r.delta = b.delta;
  group = std::max<std::uint64_t>(group, 1);
  const std::uint64_t p = next_prime(std::max<std::uint64_t>(n, 2));
  r.spec = HashSpec{hash_order(n, b.delta, cfg.c_hash), p, std::max<std::uint64_t>(n, 1), p};
  r.threshold = floor_scaled_inv_power(p, std::max<std::uint64_t>(n, 1), cfg.eps_hd);
  const long double q = static_cast<long double>(r.threshold) / static_cast<long double>(p);
  const long double mu = static_cast<long double>(group) * q;
  const long double spread = std::pow(mu, 2.0L / 3.0L);
  const auto g_lo = static_cast<std::uint64_t>(std::max(0.0L, std::ceil(mu - spread)));
  const auto g_hi = static_cast<std::uint64_t>(std::floor(mu + spread));

  const std::vector<std::uint64_t> degs = pool_degrees(g, b);
  r.heavy_flags.resize(b.U.size());
  for (std::size_t x = 0; x < b.U.size(); ++x) {
    r.heavy_flags[x] = degs[x] >= group ? 1 : 0;
    r.heavy += r.heavy_flags[x];
  }
  const std::vector<NodeId> touch = touched(g, b);
  std::vector<std::int32_t> slot(g.node_count(), -1);
  for (std::size_t i = 0; i < touch.size(); ++i) {
    slot[touch[i]] = static_cast<std::int32_t>(i);
  }
  const HashSpec spec = r.spec;
  const std::uint64_t thr = r.threshold;
  struct Eval {
    std::uint64_t violations = 0;
    std::uint64_t uncovered = 0;
    std::vector<std::uint64_t> counts;
  };
  auto run = [&, spec, thr](std::span<const std::uint64_t> seed) {
    std::vector<char> hit(touch.size());
    for (std::size_t i = 0; i < touch.size(); ++i) {
      hit[i] = eval_poly(seed, spec.p, touch[i]) < thr ? 1 : 0;
    }
    Eval e;
    e.counts.resize(b.U.size());
    for (std::size_t x = 0; x < b.U.size(); ++x) {
      std::uint64_t total = 0;
      std::uint64_t in_group = 0;
      std::uint64_t filled = 0;
      for (NodeId w : g.neighbors(b.U[x])) {
        if (!b.pool[w]) {
          continue;
        }
        const char h = hit[static_cast<std::size_t>(slot[w])];
        total += h;
        in_group += h;
        if (++filled == group) {
          if (in_group < g_lo || in_group > g_hi) {
            ++e.violations;
          }
          filled = 0;
          in_group = 0;
        }
      }
      e.counts[x] = total;
      if (degs[x] > 0 && total == 0) {
        ++e.uncovered;
      }
      const u128 d = degs[x];
      if (d * d >= static_cast<u128>(group) * group * group) {
        const u128 lhs = static_cast<u128>(2) * total * spec.p;
        if (lhs < d * thr || lhs > 3 * d * thr) {
          ++e.violations;
        }
      }
    }
    return e;
  };
  const Objective obj{"highdeg-violations", 1, [&run](std::span<const std::uint64_t> seed) {
                        const Eval e = run(seed);
                        return e.violations + e.uncovered;
                      }};
  const SearchResult sr = dz.search(stage, spec, obj, 0);
  r.seed = sr.seed;
  r.examined = sr.examined;
  const Eval e = run(sr.seed);
  r.violations = e.violations;
  r.uncovered = e.uncovered;
  r.counts = e.counts;
  r.accepted = sr.value == 0;
  if (!r.accepted) {
    throw NoCompliantSeed(stage + ": best of " + std::to_string(sr.examined) + " seeds leaves " +
                          std::to_string(r.violations) + " group violations and " + std::to_string(r.uncovered) +
                          " uncovered nodes");
  }
  r.sampled.assign(g.node_count(), 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (b.pool[v]) {
      r.sampled[v] = eval_poly(r.seed, spec.p, v) < thr ? 1 : 0;
    }
  }
  return r;
}

WeakResult weak_reduce(const Graph& g, const Bipartition& b, std::uint64_t n, Derandomizer& dz,
                       const SublinearConfig& cfg, const std::string& stage) {
  WeakResult w;
  ReduceResult& r = w.step;
  r.delta = b.delta;
  const std::uint64_t rate = reduce_rate_denominator(b.delta);
  const std::uint64_t p = next_prime(std::max<std::uint64_t>({n, rate, 2}));
  r.spec = HashSpec{hash_order(n, b.delta, cfg.c_hash), p, std::max<std::uint64_t>(n, 1), rate};
  r.threshold = threshold_for_probability(r.spec, 1, rate);
  w.bound = floor_scaled_inv_power(std::max<std::uint64_t>(n, 1), std::max<std::uint64_t>(b.delta, 1), Rational{1, 100});

  const std::vector<std::uint64_t> degs = pool_degrees(g, b);
  const double tau = heavy_threshold(n, b.delta);
  r.heavy_flags.resize(b.U.size());
  for (std::size_t x = 0; x < b.U.size(); ++x) {
    r.heavy_flags[x] = static_cast<double>(degs[x]) >= tau ? 1 : 0;
    r.heavy += r.heavy_flags[x];
  }
  const HashSpec spec = r.spec;
  const std::uint64_t thr = r.threshold;
  auto counts_for = [&, spec, thr](std::span<const std::uint64_t> seed) {
    std::vector<std::uint64_t> counts(b.U.size(), 0);
    for (std::size_t x = 0; x < b.U.size(); ++x) {
      for (NodeId v : g.neighbors(b.U[x])) {
        if (b.pool[v] && eval_poly(seed, spec.p, v) < thr) {
          ++counts[x];
        }
      }
    }
    return counts;
  };
  auto tally = [&](const std::vector<std::uint64_t>& counts, std::uint64_t& viol, std::uint64_t& unc) {
    viol = 0;
    unc = 0;
    for (std::size_t x = 0; x < counts.size(); ++x) {
      unc += (degs[x] > 0 && counts[x] == 0) ? 1 : 0;
      viol += (r.heavy_flags[x] && !in_reduce_window(counts[x], degs[x], b.delta)) ? 1 : 0;
    }
  };
  const std::uint64_t bound = w.bound;
  const Objective obj{"weak-violations", 1, [&](std::span<const std::uint64_t> seed) {
                        std::uint64_t viol = 0;
                        std::uint64_t unc = 0;
                        tally(counts_for(seed), viol, unc);
                        return unc * (bound + 1) + viol;
                      }};
  const SearchResult sr = dz.search(stage, spec, obj, 0);
  r.seed = sr.seed;
  r.examined = sr.examined;
  r.counts = counts_for(sr.seed);
  tally(r.counts, r.violations, r.uncovered);
  r.accepted = r.uncovered == 0 && r.violations <= bound;
  for (std::size_t x = 0; x < b.U.size(); ++x) {
    const bool uncovered = degs[x] > 0 && r.counts[x] == 0;
    const bool outside = r.heavy_flags[x] && !in_reduce_window(r.counts[x], degs[x], b.delta);
    if (uncovered || outside) {
      w.exceptions.push_back(b.U[x]);
    }
  }
  r.sampled.assign(g.node_count(), 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (b.pool[v]) {
      r.sampled[v] = eval_poly(r.seed, spec.p, v) < thr ? 1 : 0;
    }
  }
  return w;
}

unsigned floor_log2_log2(std::uint64_t x) {
  if (x < 4) {
    return 0;
  }
  const unsigned l = static_cast<unsigned>(std::bit_width(x)) - 1;
  return static_cast<unsigned>(std::bit_width(l)) - 1;
}

SparsifyResult sparsify(const Graph& g, const Bipartition& b, std::uint64_t f, std::uint64_t n, Derandomizer& dz,
                        RoundLedger& ledger, const SublinearConfig& cfg, const std::string& stage) {
  SparsifyResult res;
  res.f = std::max<std::uint64_t>(f, 2);
  const std::uint64_t S = cfg.local_memory.value_or(cfg.mpc(n, g.edge_count()).local_memory());
  Bipartition cur = b;

  while (cur.delta > S && res.highdeg_passes < cfg.max_highdeg_passes) {
    try {
      const ReduceResult r = degree_reduce_highdeg(g, cur, n, S, dz, cfg,
                                                   stage + " highdeg" + std::to_string(res.highdeg_passes));
      ledger.charge(Category::Sampling, 1, stage + " highdeg sampling");
      ledger.charge_primitive(Primitive::Aggregate);
      cur = restrict_pool(g, cur, r.sampled);
      ++res.highdeg_passes;
    } catch (const NoCompliantSeed&) {
      ledger.charge(Category::Sampling, 1, stage + " highdeg sampling");
      res.stop_reason = "highdeg pass without compliant seed";
      break;
    }
  }

  std::optional<SquareColoring> coloring;
  auto ensure_coloring = [&]() {
    if (coloring) {
      return;
    }
    for (;;) {
      try {
        coloring = color_square(g, cur, cfg.c_id, S, &ledger);
        return;
      } catch (const ColoringInfeasible& e) {
        if (res.bootstrap_sweeps >= cfg.sweep_cap) {
          throw ModelViolation(stage + ": coloring still infeasible after " + std::to_string(res.bootstrap_sweeps) +
                               " weak-reduction sweeps (" + e.what() + ")");
        }
      }
      const WeakResult w = weak_reduce(g, cur, n, dz, cfg, stage + " weak" + std::to_string(res.bootstrap_sweeps));
      ledger.charge(Category::Sampling, 1, stage + " weak sampling");
      ledger.charge_primitive(Primitive::Aggregate);
      cur = restrict_pool(g, cur, w.step.sampled);
      res.bootstrap_exceptions = w.exceptions.size();
      ++res.bootstrap_sweeps;
    }
  };

  std::vector<std::uint64_t> degs = pool_degrees(g, cur);
  res.delta_prime = cur.delta;
  res.min_degree = degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
  const long double dp = static_cast<long double>(std::max<std::uint64_t>(res.delta_prime, 1));
  const long double ff = static_cast<long double>(res.f);
  res.c_meas = res.delta_prime == 0 ? 0.0 : static_cast<double>(res.min_degree * ff / dp);
  if (res.delta_prime >= 4) {
    const long double l = std::log2(dp);
    res.k_closed_form = static_cast<int>(std::floor(std::log2(l) - std::log2(2 * std::log2(ff * l))));
  }
  const unsigned k_max = res.delta_prime >= 2 ? floor_log2_log2(res.delta_prime) + 1 : 0;
  auto lower = [&](unsigned j) {
    return static_cast<long double>(res.min_degree) * std::pow(dp, 1.0L / std::ldexp(1.0L, static_cast<int>(j))) /
           (dp * std::pow(3.0L, static_cast<long double>(j)));
  };
  for (unsigned j = 1; j <= k_max; ++j) {
    if (lower(j) >= 1.0L) {
      res.k_stop = j;
    } else {
      break;
    }
  }
  if (cur.delta > S) {
    res.k_stop = 0;
    if (res.stop_reason.empty()) {
      res.stop_reason = "delta' exceeds local memory";
    }
  }

  std::vector<char> always_heavy(cur.U.size(), 1);
  for (unsigned j = 1; j <= res.k_stop; ++j) {
    SparsifyStep st;
    st.j = j;
    st.delta = floor_power(res.delta_prime, Rational{1, std::uint64_t{1} << (j - 1)});
    if (st.delta < 2) {
      res.stop_reason = "step degree bound below 2";
      break;
    }
    if (cur.delta > st.delta) {
      res.interval_ok = false;
    }
    Bipartition step_bip = cur;
    step_bip.delta = st.delta;
    const std::uint64_t rate = reduce_rate_denominator(st.delta);
    const double tau = heavy_threshold(n, st.delta);
    std::vector<char> heavy(degs.size());
    for (std::size_t x = 0; x < degs.size(); ++x) {
      heavy[x] = static_cast<double>(degs[x]) >= tau ? 1 : 0;
    }
    st.predicted = predicted_violations(degs, heavy, st.delta, 1.0 / static_cast<double>(rate));
    if (st.predicted > cfg.precheck_limit) {
      res.steps.push_back(st);
      res.stop_reason = "precheck at step " + std::to_string(j);
      break;
    }
    ensure_coloring();
    try {
      const ReduceResult r = degree_reduce_step(g, step_bip, *coloring, n, dz, cfg, stage + " step" + std::to_string(j));
      ledger.charge(Category::Sampling, 1, stage + " reduce sampling");
      ledger.charge_primitive(Primitive::Aggregate);
      st.heavy = r.heavy;
      st.accepted = true;
      for (std::size_t x = 0; x < degs.size(); ++x) {
        always_heavy[x] = always_heavy[x] && r.heavy_flags[x];
      }
      cur = restrict_pool(g, cur, r.sampled);
      degs = pool_degrees(g, cur);
      st.min_count = degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
      st.max_count = degs.empty() ? 0 : *std::max_element(degs.begin(), degs.end());
      res.k_run = j;
      const long double hi = std::pow(dp, 1.0L / std::ldexp(1.0L, static_cast<int>(j)));
      const long double lo = lower(j);
      for (std::size_t x = 0; x < degs.size(); ++x) {
        if (always_heavy[x]) {
          const long double d = static_cast<long double>(degs[x]);
          if (d > hi * (1 + 1e-12L) || d < lo * (1 - 1e-12L)) {
            res.interval_ok = false;
          }
        }
      }
      res.steps.push_back(st);
    } catch (const NoCompliantSeed&) {
      ledger.charge(Category::Sampling, 1, stage + " reduce sampling");
      res.steps.push_back(st);
      res.stop_reason = "no compliant seed at step " + std::to_string(j);
      break;
    }
  }
  if (coloring) {
    res.coloring = coloring->method;
    res.palette = coloring->palette;
  }

  const long double l = std::log2(std::max(dp, 2.0L));
  const long double need = std::max(std::pow(dp, 1.0L / std::ldexp(1.0L, static_cast<int>(res.k_run))),
                                    std::pow(3.0L, static_cast<long double>(res.k_run)) * ff * (ff * l) * (ff * l) /
                                        std::max(static_cast<long double>(res.c_meas), 1e-18L));
  res.c_cap = 0;
  while (std::pow(ff, static_cast<long double>(res.c_cap)) < need) {
    ++res.c_cap;
  }
  res.cap = sat_pow64(res.f, res.c_cap);

  res.final_counts = degs;
  res.final_min = degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
  res.final_max = degs.empty() ? 0 : *std::max_element(degs.begin(), degs.end());
  res.coverage_ok = degs.empty() || res.final_min >= 1;
  res.cap_ok = res.final_max <= res.cap;
  res.sampled = cur.pool;
  return res;
}

FinalMisResult final_bounded_mis(const Graph& g, std::uint64_t local_memory, Derandomizer& dz, RoundLedger& ledger) {
  FinalMisResult out;
  const std::size_t n = g.node_count();
  if (g.words() <= local_memory) {
    out.gathered = true;
    out.members = greedy_mis(g);
    ledger.charge(Category::Gathering, 1, "final gather");
    ledger.charge(Category::Mis, 1, "final local mis");
    out.rounds = 2;
    return out;
  }
  const std::uint64_t base = std::max<std::uint64_t>(n, 2);
  const std::uint64_t p = next_prime(base * base * base);
  const HashSpec spec{2, p, base, p};
  // 0 undecided, 1 in the set, 2 excluded.
  std::vector<char> state(n, 0);
  auto round = [&g, &spec, n](const std::vector<char>& st, std::span<const std::uint64_t> seed) {
    std::vector<std::uint64_t> z(n, 0);
    for (NodeId v = 0; v < n; ++v) {
      if (st[v] == 0) {
        z[v] = eval_poly(seed, spec.p, v);
      }
    }
    std::vector<char> next = st;
    for (NodeId v = 0; v < n; ++v) {
      if (st[v] != 0) {
        continue;
      }
      bool wins = true;
      for (NodeId w : g.neighbors(v)) {
        if (st[w] == 0 && (z[w] < z[v] || (z[w] == z[v] && w < v))) {
          wins = false;
          break;
        }
      }
      if (wins) {
        next[v] = 1;
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      if (next[v] == 1 && st[v] == 0) {
        for (NodeId w : g.neighbors(v)) {
          if (next[w] == 0) {
            next[w] = 2;
          }
        }
      }
    }
    return next;
  };
  for (;;) {
    std::vector<NodeId> rest;
    for (NodeId v = 0; v < n; ++v) {
      if (state[v] == 0) {
        rest.push_back(v);
      }
    }
    if (rest.empty()) {
      break;
    }
    const Subgraph sub = induced_subgraph(g, rest);
    if (sub.graph.words() <= local_memory) {
      ledger.charge(Category::Gathering, 1, "final residual gather");
      ledger.charge(Category::Mis, 1, "final residual local mis");
      out.rounds += 2;
      for (NodeId x : greedy_mis(sub.graph)) {
        state[sub.to_parent[x]] = 1;
      }
      break;
    }
    auto fixed = std::make_shared<const std::vector<char>>(state);
    const Objective obj{"undecided", 1, [&round, fixed](std::span<const std::uint64_t> seed) {
                          const std::vector<char> next = round(*fixed, seed);
                          return static_cast<std::uint64_t>(std::count(next.begin(), next.end(), 0));
                        }};
    const SearchResult sr = dz.search("final luby" + std::to_string(out.luby_rounds), spec, obj);
    state = round(state, sr.seed);
    ledger.charge(Category::Mis, 2, "final luby round");
    out.rounds += 2 + ledger.config().c_derand;
    ++out.luby_rounds;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (state[v] == 1) {
      out.members.push_back(v);
    }
  }
  return out;
}

SublinearResult run_sublinear(const Graph& g, const SublinearConfig& cfg) {
  const std::size_t n = g.node_count();
  SublinearResult res;
  const MpcConfig mpc = cfg.mpc(std::max<std::size_t>(n, 1), g.edge_count());
  res.ledger = RoundLedger(mpc);
  res.local_memory = cfg.local_memory.value_or(mpc.local_memory());
  RoundLedger& ledger = res.ledger;
  Derandomizer dz(cfg.derand, &ledger);

  res.delta = g.max_degree();
  unsigned s = 0;
  while (s * s < 63 && (std::uint64_t{1} << (s * s)) < res.delta) {
    ++s;
  }
  res.f = std::uint64_t{1} << s;

  std::vector<char> alive(n, 1);
  std::vector<char> in_m(n, 0);
  ledger.charge_primitive(Primitive::DegreeComputation);
  ledger.account_space(g.words());

  auto alive_degree = [&](NodeId v) {
    std::uint64_t d = 0;
    for (NodeId w : g.neighbors(v)) {
      d += alive[w] ? 1 : 0;
    }
    return d;
  };

  const unsigned classes = res.f >= 2 ? static_cast<unsigned>(std::bit_width(res.f)) - 1 : 0;
  std::uint64_t cap_max = 0;
  for (unsigned i = 0; i <= classes && res.delta >= 2; ++i) {
    ClassRecord rec;
    rec.i = i;
    const u128 fi = sat_pow(res.f, i);
    const u128 fi1 = sat_pow(res.f, i + 1);
    rec.hi = static_cast<std::uint64_t>(res.delta / fi);
    rec.lo = static_cast<std::uint64_t>(res.delta / fi1);
    ledger.charge_primitive(Primitive::DegreeComputation);
    ledger.charge_primitive(Primitive::NeighborhoodArrangement);
    std::vector<NodeId> U;
    for (NodeId v = 0; v < n; ++v) {
      if (!alive[v]) {
        continue;
      }
      const u128 d = alive_degree(v);
      if (d * fi1 > res.delta && d * fi <= res.delta) {
        U.push_back(v);
      }
    }
    rec.u_size = U.size();
    if (!U.empty()) {
      const Bipartition b = make_bipartition(g, std::move(U), alive);
      rec.pool_size = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
      std::uint64_t bip_words = 0;
      for (std::uint64_t d : pool_degrees(g, b)) {
        bip_words += d + 1;
      }
      ledger.account_space(g.words() + 2 * n + bip_words);
      rec.sparsify = sparsify(g, b, res.f, n, dz, ledger, cfg, "class" + std::to_string(i));
      cap_max = std::max(cap_max, rec.sparsify.cap);
      const std::vector<char>& sub = rec.sparsify.sampled;
      std::vector<NodeId> drop;
      for (NodeId v = 0; v < n; ++v) {
        if (sub[v]) {
          ++rec.sub_size;
          in_m[v] = 1;
          drop.push_back(v);
          for (NodeId w : g.neighbors(v)) {
            drop.push_back(w);
          }
        }
      }
      for (NodeId v : drop) {
        if (alive[v]) {
          alive[v] = 0;
          ++rec.removed;
        }
      }
      ledger.charge_primitive(Primitive::SubgraphCollection);
      ledger.charge_primitive(Primitive::Aggregate);
    }
    for (NodeId v = 0; v < n; ++v) {
      if (alive[v]) {
        const std::uint64_t d = alive_degree(v);
        rec.max_remaining_degree = std::max(rec.max_remaining_degree, d);
        if (static_cast<u128>(d) * fi1 > res.delta && d > cap_max) {
          rec.invariant_ok = false;
        }
      }
    }
    res.classes.push_back(std::move(rec));
  }

  std::vector<NodeId> nodes;
  for (NodeId v = 0; v < n; ++v) {
    if (in_m[v] || alive[v]) {
      nodes.push_back(v);
    }
  }
  const Subgraph sub = induced_subgraph(g, nodes);
  res.mis_graph_nodes = nodes.size();
  res.mis_graph_degree = sub.graph.max_degree();
  res.mis_graph_cap = cap_max == 0 ? res.delta : cap_max;
  res.mis_graph_ok = res.mis_graph_degree <= res.mis_graph_cap;
  res.final_mis = final_bounded_mis(sub.graph, res.local_memory, dz, ledger);
  for (NodeId x : res.final_mis.members) {
    res.members.push_back(sub.to_parent[x]);
  }
  std::sort(res.members.begin(), res.members.end());
  ledger.finalize();
  res.certificate = verify_ruling_set(g, res.members, 2);
  res.derand_steps = dz.steps();
  res.rounds_excluding_final = ledger.total_rounds() - res.final_mis.rounds;
  return res;
}

}  // namespace rs2
