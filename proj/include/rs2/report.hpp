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

#include "rs2/derand.hpp"
#include "rs2/graph.hpp"
#include "rs2/linear.hpp"
#include "rs2/mpc.hpp"
#include "rs2/sublinear.hpp"
#include "rs2/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rs2 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "rs2-report/1";

struct GraphInfo {
  std::string source;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t max_degree = 0;
};

GraphInfo describe(const Graph& g, std::string source);

Json to_json(const GraphInfo& info);
Json to_json(const CertificateReport& c);
Json to_json(const RoundLedger& ledger);
Json to_json(const DerandStep& step);
Json to_json(const LinearConfig& c);
Json to_json(const SublinearConfig& c);

/// Report body without the envelope fields (schema, algorithm, graph, error).
Json linear_body(const LinearConfig& config, const LinearResult& r);
Json sublinear_body(const SublinearConfig& config, const SublinearResult& r);

/// Wraps a body; wall time is added only when given.
Json make_report(const std::string& algorithm, const GraphInfo& graph, Json body,
                 const std::optional<std::string>& error, std::optional<double> wall_seconds);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

/// Members recorded under ruling_set.members.
std::vector<NodeId> report_members(const Json& report);

}  // namespace rs2
