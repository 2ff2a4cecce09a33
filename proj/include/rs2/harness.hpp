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

#include "rs2/linear.hpp"
#include "rs2/report.hpp"
#include "rs2/sublinear.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rs2 {

enum class Algorithm : std::uint8_t { Linear, Sublinear, BaselineRandom };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& s);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::Linear;
  /// Generator spec such as "d-regular:n=1024,d=16"; ignored when graph_path is set.
  std::string generator;
  std::uint64_t gen_seed = 1;
  std::optional<std::string> graph_path;
  LinearConfig linear;
  SublinearConfig sublinear;
  /// Seed of the baseline's random seed choices.
  std::uint64_t random_seed = 1;
  bool timing = false;
  std::optional<std::string> report_path;
};

struct RunReport {
  Json report;
  GraphInfo graph;
  std::string algorithm;
  bool ok = false;
  bool valid = false;
  std::string error;
  std::uint64_t total_rounds = 0;
  std::uint64_t final_rounds = 0;
  std::size_t size = 0;
  std::optional<double> c_edges;
  std::optional<double> eps_prime;
  std::optional<unsigned> c_cap;
  std::size_t iterations = 0;
  std::optional<double> wall_seconds;
};

/// Loads or generates the configured graph.
Graph build_graph(const ExperimentConfig& config, std::string* source = nullptr);

/// Runs on a given graph; failures are captured in the report, never thrown.
RunReport run_on(const Graph& g, const std::string& source, const ExperimentConfig& config);

/// Builds the graph, runs, and writes the report when report_path is set.
RunReport run(const ExperimentConfig& config);

inline constexpr const char* kCsvSchema = "rs2-sweep/1";

std::string csv_header();
std::string csv_row(const RunReport& r);

/// One row per config; a failing config yields a row with status "error".
std::vector<RunReport> sweep(const std::vector<ExperimentConfig>& configs, std::ostream& csv);

}  // namespace rs2
