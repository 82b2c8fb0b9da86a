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

#pragma once

#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "duplex/chain_model.hpp"
#include "duplex/fidelity.hpp"
#include "duplex/propagator.hpp"

namespace duplex {

/// Search window for the fidelity peak. The coarse grid is
/// t_min, t_min + coarse_step, ..., t_max (t_max always included).
struct TimeWindow {
    double t_min = 10.0;
    double t_max = 50.0;
    double coarse_step = 0.05;
    double refine_tol = 1e-4;

    void validate() const;
    int coarse_count() const;
    double coarse_time(int k) const;

    bool operator==(const TimeWindow&) const = default;
};

/// Bloch angles of both senders.
struct PointParams {
    double theta1 = 0.0;
    double phi1 = 0.0;
    double theta2 = 0.0;
    double phi2 = 0.0;

    bool operator==(const PointParams&) const = default;
};

struct SearchResult {
    double f_max = 0.0;
    double tau = 0.0;
    End end = End::bob;
    ChainConfig chain;
    PointParams params;
    TimeWindow window;
    // search metadata
    double coarse_best = 0.0;
    double coarse_tau = 0.0;
    int evaluations = 0;
};

/// Evenly spaced values start..stop inclusive; a single-point axis is {start}.
struct GridAxis {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    double value(int k) const;
    std::vector<double> values() const;
    void validate(const char* name) const;

    bool operator==(const GridAxis&) const = default;
};

enum class Experiment { theta_grid, phase_scan, length_scan, single_point };

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& text);

/// Full description of one sweep. Unused axes are ignored by the other
/// experiments.
struct SweepSpec {
    Experiment experiment = Experiment::single_point;
    ChainConfig chain;
    PointParams fixed;
    End end = End::bob;
    TimeWindow window;

    GridAxis theta1_axis{0.0, std::numbers::pi, 51};
    GridAxis theta2_axis{0.0, std::numbers::pi, 51};
    GridAxis delta_phi_axis{-2.0 * std::numbers::pi, 2.0 * std::numbers::pi, 161};

    int length_first = 3;
    int length_last = 24;
    GridAxis inner_theta2{0.0, std::numbers::pi, 21};
    GridAxis inner_phi2{0.0, 2.0 * std::numbers::pi, 21};
    int refine_passes = 1;

    int workers = 1;

    void validate() const;
    bool operator==(const SweepSpec&) const = default;
};

/// Fidelity at one end and one time, via the closed form.
double fidelity_at(const PropagatorTable& table, const QubitState& s1, const QubitState& s2, double t,
                   End end);

/// Maximizes the fidelity over the window: scan the coarse grid (earliest
/// time wins ties), then golden-section refine within one coarse step of the
/// best grid point. The refined point replaces the grid point only if it is
/// strictly better.
SearchResult fmax_search(const ChainConfig& cfg, const QubitState& s1, const QubitState& s2,
                         const TimeWindow& window, End end);
SearchResult fmax_search(const PropagatorTable& table, const QubitState& s1, const QubitState& s2,
                         const TimeWindow& window, End end);

/// Maximizer of a unimodal-ish function on [lo, hi]; returns {x, f(x)}.
struct ArgMax {
    double x;
    double value;
    int evaluations;
};
ArgMax golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi, double tol);

struct ThetaRow {
    double theta1, theta2, f_max, tau;
};
struct PhaseRow {
    double delta_phi, f_max, tau;
};
struct LengthRow {
    int n_sites;
    double f_with_bob, f_without_bob, tau_with, tau_without;
    double best_theta2, best_phi2;
};

/// Row-major over (theta1, theta2).
std::vector<ThetaRow> sweep_theta(const SweepSpec& spec);

/// phi1 = 0, phi2 = delta_phi.
std::vector<PhaseRow> sweep_phase(const SweepSpec& spec);

/// For each N, best (theta2, phi2) for Bob over the inner grid plus
/// coordinate-wise golden refinement, against theta2 = 0 (Bob absent).
std::vector<LengthRow> sweep_length(const SweepSpec& spec);

/// Best F_max over Bob's (theta2, phi2) for one chain; Alice fixed.
SearchResult optimize_bob(const ChainConfig& cfg, const SweepSpec& spec);

}  // namespace duplex
