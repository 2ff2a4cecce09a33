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

#include "rs2/generators.hpp"
#include "rs2/harness.hpp"
#include "rs2/report.hpp"
#include "rs2/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rs2;

struct Common {
  std::string graph;
  std::string model;
  std::uint64_t gen_seed = 1;
  std::string report;
  std::string backend = "auto";
  unsigned threads = 1;
  bool timing = false;
};

void add_common(CLI::App* app, Common& c) {
  auto* g = app->add_option("--graph", c.graph, "Edge-list file");
  app->add_option("--model", c.model, "Generator spec, e.g. d-regular:n=1024,d=16")->excludes(g);
  app->add_option("--gen-seed", c.gen_seed, "Generator seed");
  app->add_option("--report", c.report, "Write the JSON report here (default: stdout)");
  app->add_option("--backend", c.backend, "Seed search backend: auto, exhaustive, greedy, scan, random");
  app->add_option("--threads", c.threads, "Threads for seed scans")->check(CLI::PositiveNumber);
  app->add_flag("--timing", c.timing, "Include wall time in the report");
}

Rational parse_rational(const std::string& s) { return Rational::parse(s); }

ExperimentConfig base_config(const Common& c, Algorithm a) {
  if (c.graph.empty() && c.model.empty()) {
    throw CLI::ValidationError("one of --graph or --model is required");
  }
  ExperimentConfig cfg;
  cfg.algorithm = a;
  if (!c.graph.empty()) {
    cfg.graph_path = c.graph;
  }
  cfg.generator = c.model;
  cfg.gen_seed = c.gen_seed;
  cfg.timing = c.timing;
  const Backend b = parse_backend(c.backend);
  cfg.linear.derand.backend = b;
  cfg.linear.derand.threads = c.threads;
  cfg.sublinear.derand.backend = b;
  cfg.sublinear.derand.threads = c.threads;
  return cfg;
}

int emit(const RunReport& r, const std::string& path) {
  if (path.empty()) {
    std::cout << dump(r.report);
  } else {
    std::ofstream f(path, std::ios::binary);
    f << dump(r.report);
    std::cerr << r.algorithm << ": |S|=" << r.size << " valid=" << (r.valid ? "true" : "false")
              << " rounds=" << r.total_rounds << "\n";
  }
  if (!r.ok) {
    std::cerr << "error: " << r.error << "\n";
    return 2;
  }
  return r.valid ? 0 : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic 2-ruling sets in simulated MPC"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  std::string gen_model;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("model", gen_model, "Generator spec")->required();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  Common lin_c;
  auto* lin = app.add_subcommand("linear", "Run the linear-memory algorithm");
  add_common(lin, lin_c);
  std::string epsilon = "1/40";
  unsigned d0 = 6;
  unsigned k_sample = 4;
  unsigned k_mis = 2;
  unsigned max_iter = 20;
  std::uint64_t c_lin = 8;
  bool baseline = false;
  std::uint64_t random_seed = 1;
  lin->add_option("--epsilon", epsilon, "Goodness exponent as a/b or decimal");
  lin->add_option("--d0", d0, "Small-degree cutoff exponent");
  lin->add_option("--k-sample", k_sample, "Independence of the sampling hash");
  lin->add_option("--k-mis", k_mis, "Independence of the MIS hash");
  lin->add_option("--max-iter", max_iter, "Iteration cap");
  lin->add_option("--c-lin", c_lin, "Local memory constant, S = c_lin * n");
  lin->add_flag("--baseline-random", baseline, "Pick seeds uniformly at random");
  lin->add_option("--random-seed", random_seed, "Seed of the random baseline");

  Common sub_c;
  auto* sub = app.add_subcommand("sublinear", "Run the sublinear-memory algorithm");
  add_common(sub, sub_c);
  std::string alpha = "1/2";
  std::string eps_hd = "1/20";
  unsigned c_id = 6;
  std::uint64_t c_hash = 1;
  std::uint64_t c_sub = 4;
  std::uint64_t local_memory = 0;
  unsigned sweep_cap = 10;
  sub->add_option("--alpha", alpha, "Memory exponent, S = c_sub * n^alpha");
  sub->add_option("--eps-hd", eps_hd, "Sampling exponent of the high-degree path");
  sub->add_option("--c-id", c_id, "ID coloring when Delta^c_id >= n");
  sub->add_option("--c-hash", c_hash, "Constant of the hash independence");
  sub->add_option("--c-sub", c_sub, "Local memory constant");
  sub->add_option("--local-memory", local_memory, "Override the local memory S");
  sub->add_option("--sweep-cap", sweep_cap, "Cap on bootstrap sweeps");

  auto* ver = app.add_subcommand("verify", "Check a 2-ruling set against a graph");
  std::string ver_graph;
  std::string ver_report;
  std::string ver_set;
  unsigned beta = 2;
  ver->add_option("--graph", ver_graph, "Edge-list file")->required();
  auto* vr = ver->add_option("--report", ver_report, "JSON report holding ruling_set.members");
  ver->add_option("--set", ver_set, "File with one member id per line")->excludes(vr);
  ver->add_option("--beta", beta, "Ruling distance");

  auto* sw = app.add_subcommand("sweep", "Run several configs and write CSV rows");
  std::vector<std::string> sw_models;
  std::vector<std::string> sw_algos{"linear"};
  std::vector<std::uint64_t> sw_seeds{1};
  std::string sw_csv;
  std::string sw_reports;
  sw->add_option("--model", sw_models, "Generator spec (repeatable)")->required();
  sw->add_option("--algorithm", sw_algos, "linear, sublinear or baseline-random (repeatable)");
  sw->add_option("--gen-seed", sw_seeds, "Generator seeds (repeatable)");
  sw->add_option("--csv", sw_csv, "CSV output (default: stdout)");
  sw->add_option("--report-dir", sw_reports, "Write one JSON report per run here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) {
      const Graph g = generate(gen_model, gen_seed);
      if (gen_out.empty()) {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream f(gen_out, std::ios::binary);
        write_edge_list(f, g);
      }
      return 0;
    }
    if (*lin) {
      ExperimentConfig cfg = base_config(lin_c, baseline ? Algorithm::BaselineRandom : Algorithm::Linear);
      cfg.linear.cls.epsilon = parse_rational(epsilon);
      cfg.linear.cls.d0_exp = d0;
      cfg.linear.k_sample = k_sample;
      cfg.linear.k_mis = k_mis;
      cfg.linear.max_iter = max_iter;
      cfg.linear.c_lin = c_lin;
      cfg.random_seed = random_seed;
      return emit(run(cfg), lin_c.report);
    }
    if (*sub) {
      ExperimentConfig cfg = base_config(sub_c, Algorithm::Sublinear);
      cfg.sublinear.alpha = parse_rational(alpha);
      cfg.sublinear.eps_hd = parse_rational(eps_hd);
      cfg.sublinear.c_id = c_id;
      cfg.sublinear.c_hash = c_hash;
      cfg.sublinear.c_sub = c_sub;
      cfg.sublinear.sweep_cap = sweep_cap;
      if (local_memory > 0) {
        cfg.sublinear.local_memory = local_memory;
      }
      return emit(run(cfg), sub_c.report);
    }
    if (*ver) {
      const Graph g = load_graph_file(ver_graph);
      std::vector<NodeId> members;
      if (!ver_report.empty()) {
        members = report_members(Json::parse(read_file(ver_report)));
      } else if (!ver_set.empty()) {
        std::istringstream in(read_file(ver_set));
        for (std::uint64_t x = 0; in >> x;) {
          members.push_back(static_cast<NodeId>(x));
        }
      } else {
        throw CLI::ValidationError("one of --report or --set is required");
      }
      const CertificateReport c = verify_ruling_set(g, members, beta);
      std::cout << dump(Json{{"size", members.size()}, {"verification", to_json(c)}});
      return c.valid ? 0 : 1;
    }
    if (*sw) {
      std::vector<ExperimentConfig> configs;
      for (const auto& model : sw_models) {
        for (auto seed : sw_seeds) {
          for (const auto& a : sw_algos) {
            ExperimentConfig cfg;
            cfg.algorithm = parse_algorithm(a);
            cfg.generator = model;
            cfg.gen_seed = seed;
            if (!sw_reports.empty()) {
              cfg.report_path = sw_reports + "/run" + std::to_string(configs.size()) + ".json";
            }
            configs.push_back(cfg);
          }
        }
      }
      std::vector<RunReport> rows;
      if (sw_csv.empty()) {
        rows = sweep(configs, std::cout);
      } else {
        std::ofstream f(sw_csv, std::ios::binary);
        rows = sweep(configs, f);
      }
      for (const auto& r : rows) {
        if (!r.ok || !r.valid) {
          return 1;
        }
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
