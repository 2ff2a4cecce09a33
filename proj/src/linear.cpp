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

#include "rs2/linear.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>

namespace rs2 {

LinearStep::LinearStep(const Graph& active, std::span<const NodeId> ids, const NodeClassification& c,
                       HashSpec sample_spec, HashSpec mis_spec)
    : g_(active), ids_(ids), c_(c), sample_spec_(sample_spec), mis_spec_(mis_spec) {
  const std::size_t n = g_.node_count();
  sample_thr_.assign(n, 0);
  std::map<std::size_t, std::uint64_t> by_degree;
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t deg = g_.degree(v);
    if (deg == 0 || c_.label[v] == NodeLabel::SmallDegree) {
      continue;
    }
    auto [it, fresh] = by_degree.try_emplace(deg, 0);
    if (fresh) {
      it->second = threshold_inv_sqrt(sample_spec_, deg);
    }
    sample_thr_[v] = it->second;
  }

  const Rational eps = c_.epsilon;
  const std::size_t classes = c_.classes.size();
  min_sampled_.resize(classes);
  max_nbrs_.resize(classes);
  mis_thr_.resize(classes);
  weight_.assign(classes, 0);
  lucky_count_.assign(classes, 0);
  for (std::size_t i = 0; i < classes; ++i) {
    const std::uint64_t d = std::uint64_t{1} << i;
    min_sampled_[i] = ceil_scaled_power(1, d, Rational{1, 10});
    max_nbrs_[i] = floor_power(d, Rational{2 * eps.num, eps.den});
    mis_thr_[i] = threshold_inv_power(mis_spec_, d, Rational{3 * eps.num, eps.den});
    for (NodeId v : c_.classes[i]) {
      lucky_count_[i] += c_.is_lucky(v) ? 1 : 0;
    }
    if (lucky_count_[i] > 0) {
      weight_[i] = ceil_fixed_pow2_ratio(32, i, Rational{eps.num, 2 * eps.den}, lucky_count_[i]);
    }
  }
}

std::vector<char> LinearStep::sample(std::span<const std::uint64_t> seed) const {
  const std::size_t n = g_.node_count();
  std::vector<char> s(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (sample_thr_[v] > 0) {
      s[v] = eval_poly(seed, sample_spec_.p, id(v)) < sample_thr_[v] ? 1 : 0;
    }
  }
  return s;
}

GatherSet LinearStep::gather(std::vector<char> sampled) const {
  const std::size_t n = g_.node_count();
  GatherSet gs;
  gs.sampled = std::move(sampled);
  std::vector<std::uint32_t> nbrs(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (gs.sampled[v]) {
      for (NodeId w : g_.neighbors(v)) {
        ++nbrs[w];
      }
    }
  }
  gs.in_star.assign(gs.sampled.begin(), gs.sampled.end());
  for (NodeId v = 0; v < n; ++v) {
    if (c_.is_good(v) && !gs.sampled[v] && nbrs[v] == 0) {
      gs.part2.push_back(v);
      gs.in_star[v] = 1;
    }
  }
  // -1 unknown, 0 passes, 1 fails; shared by nodes with the same lucky set.
  std::vector<signed char> fails(c_.lucky_sets.size(), -1);
  for (NodeId u = 0; u < n; ++u) {
    if (!c_.is_lucky(u)) {
      continue;
    }
    auto& f = fails[static_cast<std::size_t>(c_.lucky_set_index[u])];
    if (f < 0) {
      const auto i = static_cast<std::size_t>(c_.bad_class[u]);
      std::uint64_t hit = 0;
      bool crowded = false;
      for (NodeId s : c_.lucky_set(u)) {
        if (gs.sampled[s]) {
          ++hit;
          crowded = crowded || nbrs[s] > max_nbrs_[i];
        }
      }
      f = (hit < min_sampled_[i] || crowded) ? 1 : 0;
    }
    if (f == 1) {
      gs.part3.push_back(u);
      gs.in_star[u] = 1;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (gs.in_star[v]) {
      gs.star.push_back(v);
      gs.degree_sum += g_.degree(v);
    }
  }
  return gs;
}

std::vector<char> LinearStep::partial_mis(const std::vector<char>& sampled, std::span<const std::uint64_t> seed) const {
  const std::size_t n = g_.node_count();
  std::vector<std::uint64_t> z(n, 0);
  std::vector<char> eligible(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (sampled[v] && c_.is_bad(v)) {
      eligible[v] = 1;
      z[v] = eval_poly(seed, mis_spec_.p, id(v));
    }
  }
  std::vector<char> in(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (!eligible[v] || z[v] >= mis_thr_[static_cast<std::size_t>(c_.bad_class[v])]) {
      continue;
    }
    bool local_min = true;
    for (NodeId w : g_.neighbors(v)) {
      if (eligible[w] && (z[w] < z[v] || (z[w] == z[v] && id(w) < id(v)))) {
        local_min = false;
        break;
      }
    }
    in[v] = local_min ? 1 : 0;
  }
  return in;
}

std::vector<std::uint64_t> LinearStep::unruled_counts(const std::vector<char>& sampled,
                                                      const std::vector<char>& in_mis) const {
  std::vector<std::uint64_t> x(c_.classes.size(), 0);
  for (NodeId u = 0; u < g_.node_count(); ++u) {
    if (!c_.is_lucky(u)) {
      continue;
    }
    bool ruled = in_mis[u] != 0;
    for (NodeId w : g_.neighbors(u)) {
      ruled = ruled || in_mis[w];
    }
    for (NodeId s : c_.lucky_set(u)) {
      ruled = ruled || (sampled[s] && in_mis[s]);
    }
    if (!ruled) {
      ++x[static_cast<std::size_t>(c_.bad_class[u])];
    }
  }
  return x;
}

std::uint64_t LinearStep::q_value(const std::vector<std::uint64_t>& unruled) const {
  std::uint64_t q = 0;
  for (std::size_t i = 0; i < unruled.size(); ++i) {
    q += weight_[i] * unruled[i];
  }
  return q;
}

Objective LinearStep::edges_objective() const {
  return {"edges", 1, [this](std::span<const std::uint64_t> seed) { return gather(sample(seed)).degree_sum; }};
}

Objective LinearStep::q_objective(const std::vector<char>& sampled) const {
  auto fixed = std::make_shared<const std::vector<char>>(sampled);
  return {"q", std::uint64_t{1} << 32, [this, fixed](std::span<const std::uint64_t> seed) {
            return q_value(unruled_counts(*fixed, partial_mis(*fixed, seed)));
          }};
}

std::vector<NodeId> local_mis_extend(const Graph& g, std::span<const NodeId> initial) {
  const std::size_t n = g.node_count();
  std::vector<char> in(n, 0);
  std::vector<char> blocked(n, 0);
  for (NodeId v : initial) {
    in[v] = 1;
  }
  for (NodeId v : initial) {
    for (NodeId w : g.neighbors(v)) {
      if (in[w]) {
        throw std::invalid_argument("local_mis_extend: initial set is not independent");
      }
      blocked[w] = 1;
    }
  }
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    if (in[v]) {
      out.push_back(v);
      continue;
    }
    if (blocked[v]) {
      continue;
    }
    in[v] = 1;
    out.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      blocked[w] = 1;
    }
  }
  return out;
}

std::vector<NodeId> greedy_mis(const Graph& g) { return local_mis_extend(g, {}); }

std::uint64_t linear_iteration_rounds(const LinearConfig& config) {
  return 4 * config.c_prim + 1 + 1 + 2 + 2 * config.c_derand;
}

std::uint64_t linear_final_rounds(const LinearConfig&) { return 2; }

namespace {

std::uint64_t cube_prime(std::uint64_t n) {
  const std::uint64_t base = std::max<std::uint64_t>(n, 2);
  return next_prime(base * base * base);
}

}  // namespace

LinearResult run_linear(const Graph& g, const LinearConfig& config) {
  const std::size_t n = g.node_count();
  MpcConfig mpc = MpcConfig::linear(n, g.edge_count());
  mpc.c_lin = config.c_lin;
  mpc.c_global = config.c_global;
  mpc.c_derand = config.c_derand;
  mpc.c_prim = config.c_prim;

  LinearResult res;
  res.ledger = RoundLedger(mpc);
  RoundLedger& ledger = res.ledger;
  Derandomizer dz(config.derand, &ledger);

  const std::uint64_t ps = config.sample_prime.value_or(cube_prime(n));
  const std::uint64_t pm = config.mis_prime.value_or(cube_prime(n));
  res.sample_spec = HashSpec{config.k_sample, ps, std::max<std::uint64_t>(n, 1), ps};
  res.mis_spec = HashSpec{config.k_mis, pm, std::max<std::uint64_t>(n, 1), pm};
  res.sample_spec.validate();
  res.mis_spec.validate();

  const std::size_t delta = g.max_degree();
  const unsigned top = delta == 0 ? 0 : static_cast<unsigned>(std::bit_width(delta)) - 1;
  for (unsigned i = 0; i <= top; ++i) {
    SurvivalRow row{i, {0}};
    for (NodeId v = 0; v < n; ++v) {
      row.counts[0] += g.degree(v) >= (std::size_t{1} << i) ? 1 : 0;
    }
    res.survival.push_back(std::move(row));
  }

  Graph active = g;
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  ledger.account_space(g.words());

  for (unsigned it = 0;; ++it) {
    if (check_gather(mpc, active.words()).ok) {
      break;
    }
    if (it == config.max_iter) {
      throw ModelViolation("residual graph with " + std::to_string(active.node_count()) + " nodes and " +
                           std::to_string(active.edge_count()) + " edges does not fit in local memory after " +
                           std::to_string(it) + " iterations");
    }
    IterationRecord rec;
    rec.index = it;
    rec.active_nodes = active.node_count();
    rec.active_edges = active.edge_count();

    ledger.charge_primitive(Primitive::DegreeComputation);
    ledger.charge_primitive(Primitive::NeighborhoodArrangement);
    const NodeClassification c = classify_nodes(active, config.cls);
    for (NodeId v = 0; v < active.node_count(); ++v) {
      rec.good += c.label[v] == NodeLabel::Good ? 1 : 0;
      rec.bad += c.label[v] == NodeLabel::Bad ? 1 : 0;
      rec.small += c.label[v] == NodeLabel::SmallDegree ? 1 : 0;
      rec.lucky += c.is_lucky(v) ? 1 : 0;
    }
    rec.counting = count_bad_star_classes(active, c);
    rec.counting_holds = std::all_of(rec.counting.begin(), rec.counting.end(), [](const BadStarRow& r) { return r.holds; });

    const LinearStep step(active, ids, c, res.sample_spec, res.mis_spec);
    const std::string tag = "iter" + std::to_string(it);
    ledger.charge(Category::Sampling, 1, tag + " sampling");
    const SearchResult r1 = dz.search(tag + " sampling", res.sample_spec, step.edges_objective());
    const GatherSet gs = step.gather(step.sample(r1.seed));
    rec.sample_seed = r1.seed;
    rec.sampled = static_cast<std::size_t>(std::count(gs.sampled.begin(), gs.sampled.end(), 1));
    rec.part2 = gs.part2.size();
    rec.part3 = gs.part3.size();
    rec.gathered = gs.star.size();
    rec.degree_sum = gs.degree_sum;

    const Subgraph sub = induced_subgraph(active, gs.star);
    rec.gather_words = sub.graph.words();
    ledger.charge(Category::Gathering, 1, tag + " gather");
    if (const GatherVerdict v = check_gather(mpc, rec.gather_words); !v.ok) {
      throw ModelViolation(tag + ": gathered subgraph needs " + std::to_string(v.words) + " words, local memory is " +
                           std::to_string(v.capacity));
    }

    const SearchResult r2 = dz.search(tag + " mis", res.mis_spec, step.q_objective(gs.sampled));
    rec.mis_seed = r2.seed;
    const std::vector<char> in_mis = step.partial_mis(gs.sampled, r2.seed);
    const std::vector<std::uint64_t> unruled = step.unruled_counts(gs.sampled, in_mis);
    rec.q_value = step.q_value(unruled);
    for (std::size_t i = 0; i < unruled.size(); ++i) {
      if (step.lucky_per_class()[i] == 0) {
        continue;
      }
      ClassEstimate e{static_cast<unsigned>(i), step.lucky_per_class()[i], unruled[i], step.weights()[i], true};
      e.identity_holds = e.unruled * e.weight <= rec.q_value;
      rec.estimates.push_back(e);
    }

    ledger.charge(Category::Mis, 2, tag + " partial and local mis");
    std::vector<NodeId> initial;
    for (std::size_t x = 0; x < gs.star.size(); ++x) {
      if (in_mis[gs.star[x]]) {
        initial.push_back(static_cast<NodeId>(x));
      }
    }
    rec.partial_mis = initial.size();
    std::vector<NodeId> chosen;
    for (NodeId x : local_mis_extend(sub.graph, initial)) {
      chosen.push_back(gs.star[x]);
    }
    rec.mis_added = chosen.size();

    ledger.charge_primitive(Primitive::SubgraphCollection);
    ledger.charge_primitive(Primitive::Aggregate);
    const std::vector<std::uint32_t> dist = distance_to_set(active, chosen, 2);
    std::vector<NodeId> survivors;
    for (NodeId v = 0; v < active.node_count(); ++v) {
      if (dist[v] == kFar) {
        survivors.push_back(v);
        rec.good_all_ruled = rec.good_all_ruled && !c.is_good(v);
      }
    }
    rec.removed = active.node_count() - survivors.size();
    ledger.account_space(active.words() + n + c.lucky_words() + rec.gather_words);

    for (NodeId v : chosen) {
      res.members.push_back(ids[v]);
    }
    Subgraph next = induced_subgraph(active, survivors);
    std::vector<NodeId> next_ids(survivors.size());
    for (std::size_t x = 0; x < survivors.size(); ++x) {
      next_ids[x] = ids[survivors[x]];
    }
    active = std::move(next.graph);
    ids = std::move(next_ids);
    for (auto& row : res.survival) {
      std::size_t alive = 0;
      for (NodeId v : ids) {
        alive += g.degree(v) >= (std::size_t{1} << row.exp) ? 1 : 0;
      }
      row.counts.push_back(alive);
    }
    res.iterations.push_back(std::move(rec));
  }

  res.residual_nodes = active.node_count();
  res.residual_edges = active.edge_count();
  ledger.charge(Category::Gathering, 1, "final gather");
  ledger.charge(Category::Mis, 1, "final local mis");
  const std::vector<NodeId> last = greedy_mis(active);
  res.final_mis = last.size();
  for (NodeId v : last) {
    res.members.push_back(ids[v]);
  }
  ledger.finalize();
  std::sort(res.members.begin(), res.members.end());
  res.certificate = verify_ruling_set(g, res.members, 2);
  res.derand_steps = dz.steps();

  for (const auto& rec : res.iterations) {
    res.c_edges = std::max(res.c_edges, static_cast<double>(rec.degree_sum) / static_cast<double>(std::max<std::size_t>(n, 1)));
  }
  if (!res.iterations.empty()) {
    for (const auto& row : res.survival) {
      if (row.exp < config.cls.d0_exp || row.counts[0] == 0 || row.counts[1] == 0) {
        continue;
      }
      const double ratio = static_cast<double>(row.counts[1]) / static_cast<double>(row.counts[0]);
      const double e = -std::log(ratio) / (row.exp * std::log(2.0));
      res.eps_prime = res.eps_prime ? std::min(*res.eps_prime, e) : e;
    }
  }
  return res;
}

}  // namespace rs2
