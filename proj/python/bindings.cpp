// Copyright 2026 graphweaver Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphweaver/errors.hpp"
#include "graphweaver/graph_model.hpp"
#include "graphweaver/linear_optics.hpp"
#include "graphweaver/qubus_model.hpp"
#include "graphweaver/schedule_io.hpp"
#include "graphweaver/simulate.hpp"
#include "graphweaver/weave_planner.hpp"

namespace py = pybind11;
using namespace gw;

namespace {

Backend parse_backend(const std::string &name) {
    if (name == "vector")
        return Backend::Vector;
    if (name == "symbolic")
        return Backend::Symbolic;
    throw std::invalid_argument("backend must be 'vector' or 'symbolic', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planning and simulation of spider-photon graph-state weaving";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
    py::register_exception<std::invalid_argument>(m, "InputError", PyExc_ValueError);

    py::class_<GraphSpec>(m, "Graph")
        .def(py::init<>())
        .def("add_vertex", &GraphSpec::add_vertex)
        .def("add_edge", &GraphSpec::add_edge)
        .def_property_readonly("vertices", &GraphSpec::vertices)
        .def_property_readonly("edges",
                               [](const GraphSpec &g) {
                                   std::vector<std::pair<VertexId, VertexId>> out;
                                   for (const auto &e : g.edges())
                                       out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("has_edge", &GraphSpec::has_edge)
        .def("hash", &GraphSpec::hash)
        .def("__len__", &GraphSpec::num_vertices)
        .def("to_edge_list", [](const GraphSpec &g) { return to_edge_list(g); })
        .def("to_dot", [](const GraphSpec &g) { return to_dot(g); })
        .def("__repr__", [](const GraphSpec &g) {
            return "<Graph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
                   " edges>";
        });

    m.def("lattice", [](const std::string &spec) { return make_lattice(parse_lattice(spec)); },
          py::arg("spec"), "Build square:RxC, honeycomb:RxC or cubic:N.");
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("parse_dot", &parse_dot, py::arg("text"));
    m.def("odd_degree_vertices", &odd_degree_vertices, py::arg("graph"));

    m.def("min_trail_count", &min_trail_count, py::arg("graph"));
    m.def("decompose_trails", &decompose_trails, py::arg("graph"));
    m.def(
        "plan",
        [](const GraphSpec &g, const std::vector<std::vector<VertexId>> &blocks) {
            PlannerOptions opts;
            opts.blocks = blocks;
            return schedule_to_json(plan_schedule(g, opts));
        },
        py::arg("graph"), py::arg("blocks") = std::vector<std::vector<VertexId>>{},
        "Plan a weaving schedule and return it as schedule JSON text.");
    m.def(
        "validate",
        [](const std::string &schedule_json, const GraphSpec &g) {
            std::vector<std::string> out;
            for (const auto &v : validate_schedule(schedule_from_json(schedule_json), g))
                out.push_back(std::string(violation_name(v.kind)) + ": " + v.message);
            return out;
        },
        py::arg("schedule"), py::arg("graph"));
    m.def(
        "count_operations", [](const std::string &schedule_json) { return count_operations(schedule_from_json(schedule_json)); },
        py::arg("schedule"));
    m.def(
        "formula_counts",
        [](std::int64_t n) {
            auto c = formula_counts(n);
            return py::dict(py::arg("cascade") = c.cascade_ops, py::arg("box") = c.box_ops,
                            py::arg("direct") = c.direct_ops);
        },
        py::arg("n"));

    m.def(
        "simulate",
        [](const std::string &schedule_json, const std::string &backend, std::uint64_t seed, std::size_t capacity,
           const std::vector<std::int64_t> &forced_outcomes) {
            RunOptions opts;
            opts.capacity = capacity;
            opts.forced_outcomes = forced_outcomes;
            auto report = run_schedule(schedule_from_json(schedule_json), parse_backend(backend), seed, opts);
            return run_report_to_json(report, false);
        },
        py::arg("schedule"), py::arg("backend") = "vector", py::arg("seed") = 0,
        py::arg("capacity") = kDefaultCapacity, py::arg("forced_outcomes") = std::vector<std::int64_t>{},
        "Run a schedule and return the report as JSON text.");

    m.def(
        "qnd_error",
        [](double alpha_sin_theta, double gamma_theta, double theta, double eta, const std::string &model) {
            auto p = QubusParams::from_products(alpha_sin_theta, gamma_theta, theta, eta);
            if (model == "formula")
                return qnd_error_formula(p);
            if (model == "linearized")
                return qnd_error_sum(p, ProbeModel::Linearized);
            if (model == "cosine")
                return qnd_error_sum(p, ProbeModel::Cosine);
            throw std::invalid_argument("model must be 'formula', 'linearized' or 'cosine'");
        },
        py::arg("alpha_sin_theta"), py::arg("gamma_theta"), py::arg("theta") = 0.01, py::arg("eta") = 1.0,
        py::arg("model") = "formula");

    m.def(
        "simulate_linear",
        [](std::size_t n, std::uint64_t trials, std::uint64_t seed) {
            LinearTrialConfig cfg;
            cfg.string_length = n;
            cfg.trials = trials;
            cfg.seed = seed;
            return linear_report_to_json(simulate_string(cfg));
        },
        py::arg("n") = 3, py::arg("trials") = 10000, py::arg("seed") = 0);
}
