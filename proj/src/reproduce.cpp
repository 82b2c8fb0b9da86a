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

#include "duplex/reproduce.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "duplex/plot.hpp"

namespace duplex {

namespace {

constexpr std::array<std::pair<Figure, const char*>, 8> kNames{{
    {Figure::fig2a, "fig2a"},
    {Figure::fig2b, "fig2b"},
    {Figure::fig2c, "fig2c"},
    {Figure::fig3a, "fig3a"},
    {Figure::fig3b, "fig3b"},
    {Figure::fig3c, "fig3c"},
    {Figure::fig4a, "fig4a"},
    {Figure::fig4b, "fig4b"},
}};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<double> over_pi(std::vector<double> v) {
    for (double& x : v) x /= std::numbers::pi;
    return v;
}

}  // namespace

Figure figure_from_string(const std::string& text) {
    for (const auto& [fig, name] : kNames) {
        if (text == name) return fig;
    }
    throw DomainError("unknown figure '" + text + "' (expected fig2a..fig2c, fig3a..fig3c, fig4a, fig4b)");
}

std::string to_string(Figure fig) {
    for (const auto& [f, name] : kNames) {
        if (f == fig) return name;
    }
    return "fig2a";
}

SweepSpec figure_spec(Figure fig) {
    SweepSpec spec;
    spec.chain.n_sites = 10;
    spec.chain.coupling = 1.0;
    spec.end = End::bob;
    switch (fig) {
        case Figure::fig2a:
        case Figure::fig2b:
        case Figure::fig2c:
            spec.experiment = Experiment::theta_grid;
            spec.chain.field = fig == Figure::fig2a ? 0.0 : fig == Figure::fig2b ? 0.1 : 1.0;
            break;
        case Figure::fig3a:
        case Figure::fig3b:
        case Figure::fig3c:
            spec.experiment = Experiment::phase_scan;
            spec.chain.field = fig == Figure::fig3a ? 0.0 : fig == Figure::fig3b ? 0.1 : 1.0;
            spec.fixed.theta1 = std::numbers::pi / 2.0;
            spec.fixed.theta2 = std::numbers::pi / 2.0;
            break;
        case Figure::fig4a:
        case Figure::fig4b:
            spec.experiment = Experiment::length_scan;
            spec.chain.field = fig == Figure::fig4a ? 0.0 : 1.0;
            spec.fixed.theta1 = 2.0 * std::numbers::pi / 3.0;
            break;
    }
    return spec;
}

void run_experiment(const SweepSpec& spec, std::ostream& csv, std::ostream* svg, const std::string& title) {
    switch (spec.experiment) {
        case Experiment::theta_grid: {
            const auto rows = sweep_theta(spec);
            io::write_theta_csv(csv, rows);
            if (svg) {
                plot::write_theta_heatmap(*svg, rows, spec.theta1_axis.count, spec.theta2_axis.count, title);
            }
            break;
        }
        case Experiment::phase_scan: {
            const auto rows = sweep_phase(spec);
            io::write_phase_csv(csv, rows);
            if (svg) {
                std::vector<double> x;
                plot::Series f{"F_max", {}};
                for (const PhaseRow& r : rows) {
                    x.push_back(r.delta_phi);
                    f.y.push_back(r.f_max);
                }
                plot::write_line_plot(*svg, over_pi(x), {f}, "delta_phi / pi", "F_max", title);
            }
            break;
        }
        case Experiment::length_scan: {
            const auto rows = sweep_length(spec);
            io::write_length_csv(csv, rows);
            if (svg) {
                std::vector<double> x;
                plot::Series with{"with Bob", {}};
                plot::Series without{"without Bob", {}};
                for (const LengthRow& r : rows) {
                    x.push_back(r.n_sites);
                    with.y.push_back(r.f_with_bob);
                    without.y.push_back(r.f_without_bob);
                }
                plot::write_line_plot(*svg, x, {with, without}, "N", "F_max", title);
            }
            break;
        }
        case Experiment::single_point: {
            const SearchResult r = fmax_search(spec.chain, make_qubit(spec.fixed.theta1, spec.fixed.phi1),
                                               make_qubit(spec.fixed.theta2, spec.fixed.phi2), spec.window, spec.end);
            csv << "f_max,tau\n"
                << io::format_number(r.f_max, io::kFidelityDigits) << ','
                << io::format_number(r.tau, io::kCoordDigits) << '\n';
            break;
        }
    }
}

void run_experiment(const SweepSpec& spec, const std::string& csv_path, const std::string& svg_path,
                    const std::string& title) {
    std::ofstream csv = open_output(csv_path);
    std::ofstream svg;
    if (!svg_path.empty()) svg = open_output(svg_path);
    run_experiment(spec, csv, svg.is_open() ? &svg : nullptr, title);
    finish(csv, csv_path);
    if (svg.is_open()) finish(svg, svg_path);
}

}  // namespace duplex
