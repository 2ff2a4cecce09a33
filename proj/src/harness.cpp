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

#include "rs2/harness.hpp"

#include "rs2/generators.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rs2 {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

template <typename T>
std::string opt_field(const std::optional<T>& v) {
  if (!v) {
    return "";
  }
  std::ostringstream os;
  os << *v;
  return os.str();
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Linear:
      return "linear";
    case Algorithm::Sublinear:
      return "sublinear";
    case Algorithm::BaselineRandom:
      return "baseline-random";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "linear") {
    return Algorithm::Linear;
  }
  if (s == "sublinear") {
    return Algorithm::Sublinear;
  }
  if (s == "baseline-random") {
    return Algorithm::BaselineRandom;
  }
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

Graph build_graph(const ExperimentConfig& config, std::string* source) {
  if (config.graph_path) {
    if (source != nullptr) {
      *source = *config.graph_path;
    }
    return load_graph_file(*config.graph_path);
  }
  if (source != nullptr) {
    *source = config.generator + "@" + std::to_string(config.gen_seed);
  }
  return generate(config.generator, config.gen_seed);
}

RunReport run_on(const Graph& g, const std::string& source, const ExperimentConfig& config) {
  RunReport out;
  out.graph = describe(g, source);
  out.algorithm = to_string(config.algorithm);
  const auto t0 = std::chrono::steady_clock::now();
  Json body = Json::object();
  std::optional<std::string> error;
  try {
    if (config.algorithm == Algorithm::Sublinear) {
      const SublinearResult r = run_sublinear(g, config.sublinear);
      body = sublinear_body(config.sublinear, r);
      out.valid = r.certificate.valid;
      out.total_rounds = r.ledger.total_rounds();
      out.final_rounds = r.final_mis.rounds;
      out.size = r.members.size();
      out.iterations = r.classes.size();
      out.c_cap = body["measured"]["c_cap"].get<unsigned>();
    } else {
      LinearConfig lc = config.linear;
      if (config.algorithm == Algorithm::BaselineRandom) {
        lc.derand.backend = Backend::Random;
        lc.derand.random_seed = config.random_seed;
      }
      const LinearResult r = run_linear(g, lc);
      body = linear_body(lc, r);
      out.valid = r.certificate.valid;
      out.total_rounds = r.ledger.total_rounds();
      out.final_rounds = linear_final_rounds(lc);
      out.size = r.members.size();
      out.iterations = r.iterations.size();
      out.c_edges = r.c_edges;
      out.eps_prime = r.eps_prime;
    }
    out.ok = true;
  } catch (const std::exception& e) {
    error = e.what();
    out.error = e.what();
  }
  if (config.timing) {
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  out.report = make_report(out.algorithm, out.graph, std::move(body), error, out.wall_seconds);
  return out;
}

RunReport run(const ExperimentConfig& config) {
  std::string source;
  RunReport out;
  try {
    const Graph g = build_graph(config, &source);
    out = run_on(g, source, config);
  } catch (const std::exception& e) {
    out.algorithm = to_string(config.algorithm);
    out.graph.source = source;
    out.error = e.what();
    out.report = make_report(out.algorithm, out.graph, Json::object(), out.error, std::nullopt);
  }
  if (config.report_path) {
    std::ofstream f(*config.report_path, std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot write report to " + *config.report_path);
    }
    f << dump(out.report);
  }
  return out;
}

std::string csv_header() {
  return std::string("# ") + kCsvSchema +
         "\nsource,algorithm,n,m,max_degree,total_rounds,final_rounds,size,valid,iterations,c_edges,eps_prime,c_cap,"
         "status,error\n";
}

std::string csv_row(const RunReport& r) {
  std::ostringstream os;
  os << csv_field(r.graph.source) << ',' << r.algorithm << ',' << r.graph.n << ',' << r.graph.m << ','
     << r.graph.max_degree << ',' << r.total_rounds << ',' << r.final_rounds << ',' << r.size << ','
     << (r.valid ? 1 : 0) << ',' << r.iterations << ',' << opt_field(r.c_edges) << ',' << opt_field(r.eps_prime)
     << ',' << opt_field(r.c_cap) << ',' << (r.ok ? "ok" : "error") << ',' << csv_field(r.error) << '\n';
  return os.str();
}

std::vector<RunReport> sweep(const std::vector<ExperimentConfig>& configs, std::ostream& csv) {
  if (configs.empty()) {
    throw std::invalid_argument("sweep needs at least one config");
  }
  csv << csv_header();
  std::vector<RunReport> out;
  for (const auto& c : configs) {
    RunReport r;
    try {
      r = run(c);
    } catch (const std::exception& e) {
      r.algorithm = to_string(c.algorithm);
      r.graph.source = c.graph_path.value_or(c.generator);
      r.error = e.what();
    }
    csv << csv_row(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rs2
