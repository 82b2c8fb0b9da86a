// Copyright 2026 The duplexchain Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "duplex/chain_model.hpp"
#include "duplex/evolution.hpp"
#include "duplex/fidelity.hpp"
#include "duplex/io.hpp"
#include "duplex/propagator.hpp"
#include "duplex/reproduce.hpp"
#include "duplex/sweep.hpp"
#include "duplex/verify.hpp"

namespace py = pybind11;
using namespace duplex;

namespace {

py::dict amplitudes_to_dict(const DuplexAmplitudes& a) {
    const int n = a.n_sites();
    Eigen::VectorXcd A(n);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i <= n; ++i) {
        A[i - 1] = a.A(i);
        for (int ip = 1; ip <= n; ++ip) B(i - 1, ip - 1) = a.B(i, ip);
    }
    py::dict d;
    d["time"] = a.time();
    d["c0"] = a.c0();
    d["A"] = A;
    d["B"] = B;
    return d;
}

py::dict search_to_dict(const SearchResult& r) {
    py::dict d;
    d["f_max"] = r.f_max;
    d["tau"] = r.tau;
    d["theta2"] = r.params.theta2;
    d["phi2"] = r.params.phi2;
    d["evaluations"] = r.evaluations;
    return d;
}

ChainConfig chain(int n, double coupling, double field, const std::string& sign) {
    return validate_config(ChainConfig{n, coupling, field, field_sign_from_string(sign)});
}

TimeWindow window(double t_min, double t_max, double dt, double tol) {
    TimeWindow w{t_min, t_max, dt, tol};
    w.validate();
    return w;
}

}  // namespace

PYBIND11_MODULE(_duplexchain, m) {
    m.doc() = "Two-way state transfer through an XY spin chain";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

    py::class_<QubitState>(m, "QubitState")
        .def(py::init(&make_qubit), py::arg("theta"), py::arg("phi") = 0.0)
        .def_property_readonly("theta", &QubitState::theta)
        .def_property_readonly("phi", &QubitState::phi)
        .def_property_readonly("alpha", &QubitState::alpha)
        .def_property_readonly("beta", &QubitState::beta)
        .def("overlap", &QubitState::overlap)
        .def("__repr__", [](const QubitState& q) {
            return "QubitState(theta=" + io::format_number(q.theta(), 12) + ", phi=" + io::format_number(q.phi(), 12) + ")";
        });

    m.def("parse_angle", &io::parse_angle, py::arg("text"));

    m.def(
        "mode_energies",
        [](int n, double coupling, double field, const std::string& sign) {
            return mode_spectrum(chain(n, coupling, field, sign)).energies;
        },
        py::arg("n"), py::arg("coupling") = 1.0, py::arg("field") = 0.0, py::arg("field_sign") = "eq3");

    m.def(
        "propagator",
        [](int n, double t, double coupling, double field, const std::string& sign) {
            return propagator_matrix(chain(n, coupling, field, sign), t).matrix();
        },
        py::arg("n"), py::arg("t"), py::arg("coupling") = 1.0, py::arg("field") = 0.0, py::arg("field_sign") = "eq3",
        "N x N single-excitation propagator f_{j,l}(t).");

    m.def(
        "evolve",
        [](const QubitState& s1, const QubitState& s2, int n, double t, double coupling, double field,
           const std::string& sign) { return amplitudes_to_dict(evolve_duplex(s1, s2, chain(n, coupling, field, sign), t)); },
        py::arg("s1"), py::arg("s2"), py::arg("n"), py::arg("t"), py::arg("coupling") = 1.0, py::arg("field") = 0.0,
        py::arg("field_sign") = "eq3", "Vacuum, one- and two-excitation amplitudes at time t.");

    m.def(
        "fidelity",
        [](const QubitState& s1, const QubitState& s2, int n, double t, double coupling, double field,
           const std::string& sign) {
            const FidelityResult r = fidelity_closed_form(evolve_duplex(s1, s2, chain(n, coupling, field, sign), t), s1, s2);
            return py::make_tuple(r.f_bob, r.f_alice);
        },
        py::arg("s1"), py::arg("s2"), py::arg("n"), py::arg("t"), py::arg("coupling") = 1.0, py::arg("field") = 0.0,
        py::arg("field_sign") = "eq3", "(f_bob, f_alice) at time t.");

    m.def(
        "fmax_search",
        [](const QubitState& s1, const QubitState& s2, int n, double coupling, double field, const std::string& sign,
           const std::string& end, double t_min, double t_max, double dt, double tol) {
            return search_to_dict(fmax_search(chain(n, coupling, field, sign), s1, s2, window(t_min, t_max, dt, tol),
                                              end_from_string(end)));
        },
        py::arg("s1"), py::arg("s2"), py::arg("n"), py::arg("coupling") = 1.0, py::arg("field") = 0.0,
        py::arg("field_sign") = "eq3", py::arg("end") = "bob", py::arg("t_min") = 10.0, py::arg("t_max") = 50.0,
        py::arg("dt") = 0.05, py::arg("tol") = 1e-4);

    m.def(
        "run_config",
        [](const std::string& json_text) {
            const io::ExperimentConfig cfg = io::parse_config(json_text);
            std::ostringstream csv;
            {
                py::gil_scoped_release release;
                run_experiment(cfg.sweep, csv, nullptr, "");
            }
            return csv.str();
        },
        py::arg("config_json"), "Runs a JSON experiment description and returns the CSV table.");

    m.def(
        "figure_config",
        [](const std::string& figure) {
            io::ExperimentConfig cfg;
            cfg.sweep = figure_spec(figure_from_string(figure));
            return io::serialize_config(cfg);
        },
        py::arg("figure"), "JSON preset for a named figure panel.");

    m.def(
        "oracle_check",
        [](int n, int cases, std::uint64_t seed, const std::string& sign) {
            OracleCheckOptions opt;
            opt.n_sites = n;
            opt.cases = cases;
            opt.seed = seed;
            opt.field_sign = field_sign_from_string(sign);
            const OracleCheckReport r = run_oracle_check(opt);
            py::dict d;
            d["cases"] = r.cases;
            d["max_amplitude_dev"] = r.max_amplitude_dev;
            d["max_fidelity_dev"] = r.max_fidelity_dev;
            d["max_energy_dev"] = r.max_energy_dev;
            d["passed"] = r.passed(opt.tolerance);
            return d;
        },
        py::arg("n") = 4, py::arg("cases") = 20, py::arg("seed") = 1337, py::arg("field_sign") = "eq3");
}
