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

#include "duplex/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "duplex/evolution.hpp"
#include "duplex/parallel.hpp"

namespace duplex {

void TimeWindow::validate() const {
    if (!(t_min < t_max)) throw DomainError("time window needs t_min < t_max");
    if (!(coarse_step > 0.0)) throw DomainError("coarse_step must be positive");
    if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
}

int TimeWindow::coarse_count() const {
    // Tolerate round-off so that e.g. [10, 50] / 0.05 gives exactly 801 points.
    const double steps = (t_max - t_min) / coarse_step;
    const int whole = static_cast<int>(std::floor(steps + 1e-9));
    return steps - whole > 1e-9 ? whole + 2 : whole + 1;
}

double TimeWindow::coarse_time(int k) const {
    return std::min(t_min + k * coarse_step, t_max);
}

double GridAxis::value(int k) const {
    if (count == 1) return start;
    if (k == count - 1) return stop;
    return start + k * (stop - start) / (count - 1);
}

std::vector<double> GridAxis::values() const {
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) out[k] = value(k);
    return out;
}

void GridAxis::validate(const char* name) const {
    if (count < 1) throw DomainError(std::string(name) + " grid needs at least one point");
    if (!std::isfinite(start) || !std::isfinite(stop)) throw DomainError(std::string(name) + " grid bounds must be finite");
}

std::string to_string(Experiment e) {
    switch (e) {
        case Experiment::theta_grid: return "theta_grid";
        case Experiment::phase_scan: return "phase_scan";
        case Experiment::length_scan: return "length_scan";
        case Experiment::single_point: return "single_point";
    }
    return "single_point";
}

Experiment experiment_from_string(const std::string& text) {
    if (text == "theta_grid") return Experiment::theta_grid;
    if (text == "phase_scan") return Experiment::phase_scan;
    if (text == "length_scan") return Experiment::length_scan;
    if (text == "single_point") return Experiment::single_point;
    throw DomainError("unknown experiment '" + text + "'");
}

void SweepSpec::validate() const {
    validate_config(chain);
    window.validate();
    theta1_axis.validate("theta1");
    theta2_axis.validate("theta2");
    delta_phi_axis.validate("delta_phi");
    inner_theta2.validate("inner_theta2");
    inner_phi2.validate("inner_phi2");
    if (length_first < 2 || length_last < length_first) throw DomainError("length range must satisfy 2 <= first <= last");
    if (refine_passes < 0) throw DomainError("refine_passes must be non-negative");
    if (workers < 0) throw DomainError("workers must be non-negative (0 = all cores)");
}

double fidelity_at(const PropagatorTable& table, const QubitState& s1, const QubitState& s2, double t,
                   End end) {
    const DuplexAmplitudes amps = evolve_duplex(s1, s2, table.end_rows(t));
    return end == End::bob ? fidelity_bob(amps, s1, s2) : fidelity_alice(amps, s1, s2);
}

ArgMax golden_section_maximize(const std::function<double(double)>& fn, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    int evals = 2;
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
        ++evals;
    }
    return fc >= fd ? ArgMax{c, fc, evals} : ArgMax{d, fd, evals};
}

SearchResult fmax_search(const PropagatorTable& table, const QubitState& s1, const QubitState& s2,
                         const TimeWindow& window, End end) {
    window.validate();
    const int count = window.coarse_count();

    int best_k = 0;
    double best = -1.0;
    for (int k = 0; k < count; ++k) {
        const double f = fidelity_at(table, s1, s2, window.coarse_time(k), end);
        if (f > best) {
            best = f;
            best_k = k;
        }
    }

    SearchResult result;
    result.end = end;
    result.chain = table.config();
    result.params = PointParams{s1.theta(), s1.phi(), s2.theta(), s2.phi()};
    result.window = window;
    result.coarse_best = best;
    result.coarse_tau = window.coarse_time(best_k);
    result.f_max = best;
    result.tau = result.coarse_tau;

    const double lo = std::max(window.t_min, result.coarse_tau - window.coarse_step);
    const double hi = std::min(window.t_max, result.coarse_tau + window.coarse_step);
    const ArgMax refined = golden_section_maximize(
        [&](double t) { return fidelity_at(table, s1, s2, t, end); }, lo, hi, window.refine_tol);
    if (refined.value > best) {
        result.f_max = refined.value;
        result.tau = refined.x;
    }
    result.evaluations = count + refined.evaluations;
    return result;
}

SearchResult fmax_search(const ChainConfig& cfg, const QubitState& s1, const QubitState& s2,
                         const TimeWindow& window, End end) {
    return fmax_search(PropagatorTable(cfg), s1, s2, window, end);
}

std::vector<ThetaRow> sweep_theta(const SweepSpec& spec) {
    spec.validate();
    const PropagatorTable table(spec.chain);
    const int n1 = spec.theta1_axis.count;
    const int n2 = spec.theta2_axis.count;
    return parallel_map(static_cast<std::size_t>(n1) * n2, spec.workers, [&](std::size_t k) {
        const double th1 = spec.theta1_axis.value(static_cast<int>(k) / n2);
        const double th2 = spec.theta2_axis.value(static_cast<int>(k) % n2);
        const SearchResult r = fmax_search(table, make_qubit(th1, spec.fixed.phi1),
                                           make_qubit(th2, spec.fixed.phi2), spec.window, spec.end);
        return ThetaRow{th1, th2, r.f_max, r.tau};
    });
}

std::vector<PhaseRow> sweep_phase(const SweepSpec& spec) {
    spec.validate();
    const PropagatorTable table(spec.chain);
    const QubitState alice = make_qubit(spec.fixed.theta1, 0.0);
    return parallel_map(static_cast<std::size_t>(spec.delta_phi_axis.count), spec.workers, [&](std::size_t k) {
        const double dphi = spec.delta_phi_axis.value(static_cast<int>(k));
        const SearchResult r = fmax_search(table, alice, make_qubit(spec.fixed.theta2, dphi), spec.window, spec.end);
        return PhaseRow{dphi, r.f_max, r.tau};
    });
}

namespace {

struct Candidate {
    double f_max = -1.0;
    double tau = 0.0;
    double theta2 = 0.0;
    double phi2 = 0.0;
};

Candidate evaluate_bob(const PropagatorTable& table, const QubitState& alice, double theta2, double phi2,
                       const SweepSpec& spec) {
    const QubitState bob = make_qubit(theta2, phi2);
    const SearchResult r = fmax_search(table, alice, bob, spec.window, spec.end);
    return Candidate{r.f_max, r.tau, bob.theta(), bob.phi()};
}

Candidate best_on_grid(const std::vector<Candidate>& cells) {
    Candidate best;
    for (const Candidate& c : cells) {
        if (c.f_max > best.f_max) best = c;
    }
    return best;
}

double axis_step(const GridAxis& axis) {
    return axis.count > 1 ? std::abs(axis.stop - axis.start) / (axis.count - 1) : 0.0;
}

// Coordinate-wise golden refinement around the best grid cell, one grid step
// either side; theta2 is clipped to [0, pi].
Candidate refine_bob(const PropagatorTable& table, const QubitState& alice, Candidate best,
                     const SweepSpec& spec) {
    constexpr double angle_tol = 1e-3;
    const double dtheta = axis_step(spec.inner_theta2);
    const double dphi = axis_step(spec.inner_phi2);
    for (int pass = 0; pass < spec.refine_passes; ++pass) {
        if (dtheta > 0.0) {
            const double lo = std::max(0.0, best.theta2 - dtheta);
            const double hi = std::min(std::numbers::pi, best.theta2 + dtheta);
            const double phi2 = best.phi2;
            const ArgMax m = golden_section_maximize(
                [&](double th) { return evaluate_bob(table, alice, th, phi2, spec).f_max; }, lo, hi, angle_tol);
            if (m.value > best.f_max) best = evaluate_bob(table, alice, m.x, phi2, spec);
        }
        if (dphi > 0.0 && best.theta2 > 0.0) {
            const double theta2 = best.theta2;
            const ArgMax m = golden_section_maximize(
                [&](double ph) { return evaluate_bob(table, alice, theta2, ph, spec).f_max; }, best.phi2 - dphi,
                best.phi2 + dphi, angle_tol);
            if (m.value > best.f_max) best = evaluate_bob(table, alice, theta2, m.x, spec);
        }
    }
    return best;
}

SearchResult to_result(const Candidate& c, const ChainConfig& cfg, const SweepSpec& spec) {
    SearchResult r;
    r.f_max = c.f_max;
    r.tau = c.tau;
    r.end = spec.end;
    r.chain = cfg;
    r.params = PointParams{spec.fixed.theta1, spec.fixed.phi1, c.theta2, c.phi2};
    r.window = spec.window;
    r.coarse_best = c.f_max;
    r.coarse_tau = c.tau;
    return r;
}

}  // namespace

SearchResult optimize_bob(const ChainConfig& cfg, const SweepSpec& spec) {
    spec.validate();
    const PropagatorTable table(cfg);
    const QubitState alice = make_qubit(spec.fixed.theta1, spec.fixed.phi1);
    const int nt = spec.inner_theta2.count;
    const int np = spec.inner_phi2.count;
    const auto cells = parallel_map(static_cast<std::size_t>(nt) * np, spec.workers, [&](std::size_t k) {
        return evaluate_bob(table, alice, spec.inner_theta2.value(static_cast<int>(k) / np),
                            spec.inner_phi2.value(static_cast<int>(k) % np), spec);
    });
    return to_result(refine_bob(table, alice, best_on_grid(cells), spec), cfg, spec);
}

std::vector<LengthRow> sweep_length(const SweepSpec& spec) {
    spec.validate();
    const int lengths = spec.length_last - spec.length_first + 1;
    const int nt = spec.inner_theta2.count;
    const int np = spec.inner_phi2.count;
    const std::size_t per_chain = static_cast<std::size_t>(nt) * np;

    std::vector<std::unique_ptr<PropagatorTable>> tables;
    for (int n = spec.length_first; n <= spec.length_last; ++n) {
        ChainConfig cfg = spec.chain;
        cfg.n_sites = n;
        tables.push_back(std::make_unique<PropagatorTable>(cfg));
    }
    const QubitState alice = make_qubit(spec.fixed.theta1, spec.fixed.phi1);

    // One task per (N, theta2, phi2) cell, then one refinement task per N.
    const auto cells = parallel_map(per_chain * lengths, spec.workers, [&](std::size_t k) {
        const std::size_t chain = k / per_chain;
        const int cell = static_cast<int>(k % per_chain);
        return evaluate_bob(*tables[chain], alice, spec.inner_theta2.value(cell / np),
                            spec.inner_phi2.value(cell % np), spec);
    });

    return parallel_map(static_cast<std::size_t>(lengths), spec.workers, [&](std::size_t chain) {
        const PropagatorTable& table = *tables[chain];
        const std::vector<Candidate> mine(cells.begin() + chain * per_chain,
                                          cells.begin() + (chain + 1) * per_chain);
        const Candidate with_bob = refine_bob(table, alice, best_on_grid(mine), spec);
        const Candidate without_bob = evaluate_bob(table, alice, 0.0, 0.0, spec);
        return LengthRow{table.n_sites(),   with_bob.f_max,   without_bob.f_max, with_bob.tau,
                         without_bob.tau,   with_bob.theta2,  with_bob.phi2};
    });
}

}  // namespace duplex
