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

#include "rs2/report.hpp"

#include <stdexcept>

namespace rs2 {
namespace {

Json seed_json(const Seed& s) {
  Json a = Json::array();
  for (auto x : s) {
    a.push_back(x);
  }
  return a;
}

Json spec_json(const HashSpec& s) {
  return Json{{"k", s.k}, {"p", s.p}, {"domain", s.domain}, {"range", s.range}, {"seed_bits", s.seed_bits()}};
}

Json derand_json(const DerandConfig& d) {
  return Json{{"backend", to_string(d.backend)},
              {"budget", d.budget},
              {"scan_seeds", d.scan_seeds},
              {"scan_limit", d.scan_limit},
              {"random_seed", d.random_seed}};
}

Json members_json(const std::vector<NodeId>& members, const CertificateReport& cert) {
  return Json{{"size", members.size()}, {"members", members}, {"beta", cert.beta}};
}

Json steps_json(const std::vector<DerandStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) {
    a.push_back(to_json(s));
  }
  return a;
}

}  // namespace

GraphInfo describe(const Graph& g, std::string source) {
  return GraphInfo{std::move(source), g.node_count(), g.edge_count(), g.max_degree()};
}

Json to_json(const GraphInfo& info) {
  return Json{{"source", info.source}, {"n", info.n}, {"m", info.m}, {"max_degree", info.max_degree}};
}

Json to_json(const CertificateReport& c) {
  Json viol = Json::array();
  for (const auto& e : c.independence_violations) {
    viol.push_back(Json::array({e.first, e.second}));
  }
  return Json{{"valid", c.valid},
              {"beta", c.beta},
              {"out_of_range", c.out_of_range},
              {"independence_violations", viol},
              {"uncovered", c.uncovered}};
}

Json to_json(const RoundLedger& ledger) {
  Json rounds = Json::object();
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    const auto c = static_cast<Category>(i);
    rounds[to_string(c)] = ledger.rounds(c);
  }
  Json entries = Json::array();
  for (const auto& e : ledger.entries()) {
    entries.push_back(Json{{"category", to_string(e.category)}, {"what", e.what}, {"rounds", e.rounds}});
  }
  const MpcConfig& c = ledger.config();
  return Json{{"regime", c.regime == Regime::Linear ? "linear" : "sublinear"},
              {"rounds", rounds},
              {"total_rounds", ledger.total_rounds()},
              {"peak_global_space", ledger.peak_space()},
              {"global_cap", c.global_cap()},
              {"local_memory", c.local_memory()},
              {"machines", c.machines()},
              {"over_cap", ledger.over_cap()},
              {"misuse", ledger.misuse()},
              {"entries", entries}};
}

Json to_json(const DerandStep& s) {
  return Json{{"stage", s.stage},
              {"objective", s.objective},
              {"p", s.spec.p},
              {"k", s.spec.k},
              {"domain", s.spec.domain},
              {"range", s.spec.range},
              {"seed_bits", s.spec.seed_bits()},
              {"backend", to_string(s.backend)},
              {"value", s.value},
              {"scale", s.scale},
              {"mean", s.mean},
              {"mean_kind", to_string(s.mean_kind)},
              {"within_mean", s.within_mean},
              {"examined", s.examined},
              {"seed", seed_json(s.seed)}};
}

Json to_json(const LinearConfig& c) {
  Json j{{"epsilon", c.cls.epsilon.str()},
         {"d0", c.cls.d0_exp},
         {"k_sample", c.k_sample},
         {"k_mis", c.k_mis},
         {"max_iter", c.max_iter},
         {"c_lin", c.c_lin},
         {"c_global", c.c_global},
         {"c_derand", c.c_derand},
         {"c_prim", c.c_prim},
         {"derand", derand_json(c.derand)}};
  if (c.sample_prime) {
    j["sample_prime"] = *c.sample_prime;
  }
  if (c.mis_prime) {
    j["mis_prime"] = *c.mis_prime;
  }
  return j;
}

Json to_json(const SublinearConfig& c) {
  Json j{{"alpha", c.alpha.str()},
         {"eps_hd", c.eps_hd.str()},
         {"c_sub", c.c_sub},
         {"c_global", c.c_global},
         {"c_derand", c.c_derand},
         {"c_prim", c.c_prim},
         {"c_id", c.c_id},
         {"c_hash", c.c_hash},
         {"sweep_cap", c.sweep_cap},
         {"max_highdeg_passes", c.max_highdeg_passes},
         {"precheck_limit", c.precheck_limit},
         {"derand", derand_json(c.derand)}};
  if (c.local_memory) {
    j["local_memory"] = *c.local_memory;
  }
  return j;
}

Json linear_body(const LinearConfig& config, const LinearResult& r) {
  Json iterations = Json::array();
  for (const auto& it : r.iterations) {
    Json estimates = Json::array();
    for (const auto& e : it.estimates) {
      estimates.push_back(Json{{"exp", e.exp},
                               {"lucky", e.lucky},
                               {"unruled", e.unruled},
                               {"weight", e.weight},
                               {"identity_holds", e.identity_holds}});
    }
    Json counting = Json::array();
    for (const auto& row : it.counting) {
      counting.push_back(Json{{"exp", row.exp},
                              {"bad", row.bad},
                              {"lucky", row.lucky},
                              {"star", row.star},
                              {"at_least_d", row.at_least_d},
                              {"holds", row.holds}});
    }
    iterations.push_back(Json{{"index", it.index},
                              {"active_nodes", it.active_nodes},
                              {"active_edges", it.active_edges},
                              {"good", it.good},
                              {"bad", it.bad},
                              {"small", it.small},
                              {"lucky", it.lucky},
                              {"sampled", it.sampled},
                              {"part2", it.part2},
                              {"part3", it.part3},
                              {"gathered", it.gathered},
                              {"degree_sum", it.degree_sum},
                              {"gather_words", it.gather_words},
                              {"partial_mis", it.partial_mis},
                              {"mis_added", it.mis_added},
                              {"removed", it.removed},
                              {"q_value", it.q_value},
                              {"good_all_ruled", it.good_all_ruled},
                              {"counting_holds", it.counting_holds},
                              {"sample_seed", seed_json(it.sample_seed)},
                              {"mis_seed", seed_json(it.mis_seed)},
                              {"estimates", estimates},
                              {"counting", counting}});
  }
  Json survival = Json::array();
  for (const auto& s : r.survival) {
    survival.push_back(Json{{"exp", s.exp}, {"counts", s.counts}});
  }
  Json measured{{"c_edges", r.c_edges},
                {"eps_prime", r.eps_prime ? Json(*r.eps_prime) : Json(nullptr)},
                {"iterations", r.iterations.size()},
                {"residual_nodes", r.residual_nodes},
                {"residual_edges", r.residual_edges},
                {"final_mis", r.final_mis}};
  return Json{{"params", to_json(config)},
              {"ruling_set", members_json(r.members, r.certificate)},
              {"verification", to_json(r.certificate)},
              {"ledger", to_json(r.ledger)},
              {"sample_spec", spec_json(r.sample_spec)},
              {"mis_spec", spec_json(r.mis_spec)},
              {"derand_steps", steps_json(r.derand_steps)},
              {"survival", survival},
              {"iterations", iterations},
              {"measured", measured}};
}

Json sublinear_body(const SublinearConfig& config, const SublinearResult& r) {
  Json classes = Json::array();
  unsigned c_cap = 0;
  double c_meas = 0;
  bool any = false;
  for (const auto& c : r.classes) {
    const SparsifyResult& s = c.sparsify;
    Json steps = Json::array();
    for (const auto& st : s.steps) {
      steps.push_back(Json{{"j", st.j},
                           {"delta", st.delta},
                           {"heavy", st.heavy},
                           {"predicted_violations", st.predicted},
                           {"accepted", st.accepted},
                           {"min_count", st.min_count},
                           {"max_count", st.max_count}});
    }
    if (c.u_size > 0) {
      c_cap = std::max(c_cap, s.c_cap);
      c_meas = any ? std::min(c_meas, s.c_meas) : s.c_meas;
      any = true;
    }
    classes.push_back(Json{{"i", c.i},
                           {"degree_window", Json::array({c.lo, c.hi})},
                           {"u_size", c.u_size},
                           {"pool_size", c.pool_size},
                           {"sub_size", c.sub_size},
                           {"removed", c.removed},
                           {"max_remaining_degree", c.max_remaining_degree},
                           {"invariant_ok", c.invariant_ok},
                           {"sparsify",
                            Json{{"highdeg_passes", s.highdeg_passes},
                                 {"bootstrap_sweeps", s.bootstrap_sweeps},
                                 {"bootstrap_exceptions", s.bootstrap_exceptions},
                                 {"delta_prime", s.delta_prime},
                                 {"min_degree", s.min_degree},
                                 {"c_meas", s.c_meas},
                                 {"k_closed_form", s.k_closed_form},
                                 {"k_stop", s.k_stop},
                                 {"iterations", s.k_run},
                                 {"stop_reason", s.stop_reason},
                                 {"coloring", s.coloring},
                                 {"palette", s.palette},
                                 {"c_cap", s.c_cap},
                                 {"cap", s.cap},
                                 {"final_degrees", Json::array({s.final_min, s.final_max})},
                                 {"interval_ok", s.interval_ok},
                                 {"coverage_ok", s.coverage_ok},
                                 {"cap_ok", s.cap_ok},
                                 {"steps", steps}}}});
  }
  Json final_mis{{"nodes", r.mis_graph_nodes},
                 {"max_degree", r.mis_graph_degree},
                 {"degree_cap", r.mis_graph_cap},
                 {"degree_cap_ok", r.mis_graph_ok},
                 {"gathered", r.final_mis.gathered},
                 {"luby_rounds", r.final_mis.luby_rounds},
                 {"rounds", r.final_mis.rounds},
                 {"cited_bound", "O(log Delta' + log log* n)"}};
  Json measured{{"delta", r.delta},
                {"f", r.f},
                {"c_cap", c_cap},
                {"c_meas", any ? Json(c_meas) : Json(nullptr)},
                {"local_memory", r.local_memory},
                {"rounds_excluding_final", r.rounds_excluding_final}};
  return Json{{"params", to_json(config)},
              {"ruling_set", members_json(r.members, r.certificate)},
              {"verification", to_json(r.certificate)},
              {"ledger", to_json(r.ledger)},
              {"derand_steps", steps_json(r.derand_steps)},
              {"classes", classes},
              {"final_mis", final_mis},
              {"measured", measured}};
}

Json make_report(const std::string& algorithm, const GraphInfo& graph, Json body,
                 const std::optional<std::string>& error, std::optional<double> wall_seconds) {
  Json j{{"schema", kReportSchema}, {"algorithm", algorithm}, {"graph", to_json(graph)}};
  for (auto& [key, value] : body.items()) {
    j[key] = std::move(value);
  }
  j["error"] = error ? Json(*error) : Json(nullptr);
  if (wall_seconds) {
    j["timing"] = Json{{"wall_seconds", *wall_seconds}};
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<NodeId> report_members(const Json& report) {
  if (!report.contains("ruling_set") || !report["ruling_set"].contains("members")) {
    throw std::invalid_argument("report has no ruling_set.members");
  }
  return report["ruling_set"]["members"].get<std::vector<NodeId>>();
}

}  // namespace rs2
