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
#include "rs2/hash_family.hpp"
#include "rs2/linear.hpp"
#include "rs2/report.hpp"
#include "rs2/sublinear.hpp"
#include "rs2/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rs2;

namespace {

DerandConfig derand_config(const std::string& backend, unsigned threads) {
  DerandConfig d;
  d.backend = parse_backend(backend);
  d.threads = threads;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deterministic 2-ruling sets in simulated MPC";

  py::register_exception<GraphFormatError>(m, "GraphFormatError", PyExc_ValueError);
  py::register_exception<ModelViolation>(m, "ModelViolation", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::node_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             const auto s = g.neighbors(v);
             return std::vector<NodeId>(s.begin(), s.end());
           })
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("generate", py::overload_cast<const std::string&, std::uint64_t>(&generate), py::arg("spec"),
        py::arg("seed") = 1);
  m.def("load_graph", &load_graph, py::arg("text"));
  m.def("greedy_mis", &greedy_mis, py::arg("graph"));

  m.def(
      "verify",
      [](const Graph& g, const std::vector<NodeId>& members, unsigned beta) {
        return dump(to_json(verify_ruling_set(g, members, beta)));
      },
      py::arg("graph"), py::arg("members"), py::arg("beta") = 2);

  m.def(
      "run_linear",
      [](const Graph& g, const std::string& epsilon, unsigned d0, unsigned k_sample, unsigned k_mis,
         unsigned max_iter, const std::string& backend, unsigned threads) {
        LinearConfig c;
        c.cls.epsilon = Rational::parse(epsilon);
        c.cls.d0_exp = d0;
        c.k_sample = k_sample;
        c.k_mis = k_mis;
        c.max_iter = max_iter;
        c.derand = derand_config(backend, threads);
        LinearResult r;
        {
          py::gil_scoped_release release;
          r = run_linear(g, c);
        }
        return dump(make_report("linear", describe(g, "python"), linear_body(c, r), std::nullopt, std::nullopt));
      },
      py::arg("graph"), py::arg("epsilon") = "1/40", py::arg("d0") = 6, py::arg("k_sample") = 4,
      py::arg("k_mis") = 2, py::arg("max_iter") = 20, py::arg("backend") = "auto", py::arg("threads") = 1);

  m.def(
      "run_sublinear",
      [](const Graph& g, const std::string& alpha, const std::string& eps_hd, std::optional<std::uint64_t> local_memory,
         const std::string& backend, unsigned threads) {
        SublinearConfig c;
        c.alpha = Rational::parse(alpha);
        c.eps_hd = Rational::parse(eps_hd);
        c.local_memory = local_memory;
        c.derand = derand_config(backend, threads);
        SublinearResult r;
        {
          py::gil_scoped_release release;
          r = run_sublinear(g, c);
        }
        return dump(
            make_report("sublinear", describe(g, "python"), sublinear_body(c, r), std::nullopt, std::nullopt));
      },
      py::arg("graph"), py::arg("alpha") = "1/2", py::arg("eps_hd") = "1/20", py::arg("local_memory") = py::none(),
      py::arg("backend") = "auto", py::arg("threads") = 1);

  m.def("csv_header", &csv_header);
  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.attr("CSV_SCHEMA") = kCsvSchema;
}
