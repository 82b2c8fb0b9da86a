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

// duplexchain: command-line front end.
//
//   duplexchain fidelity      --n 10 --theta1 0.6pi --theta2 0.6pi --t-max 50 --dt 0.1
//   duplexchain sweep-theta   --h-field 0.1 --out theta.csv
//   duplexchain sweep-phase   --theta1 0.5pi --theta2 0.5pi
//   duplexchain sweep-length  --theta1 2pi/3 ...
//   duplexchain reproduce fig2a --workers 8
//   duplexchain oracle-check  --n 4
//
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "duplex/evolution.hpp"
#include "duplex/fidelity.hpp"
#include "duplex/io.hpp"
#include "duplex/oracle.hpp"
#include "duplex/propagator.hpp"
#include "duplex/reproduce.hpp"
#include "duplex/sweep.hpp"
#include "duplex/verify.hpp"

namespace {

using namespace duplex;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Flags shared by every subcommand. Only flags the user actually passed
/// override the base configuration.
struct CommonFlags {
    std::optional<int> n;
    std::optional<double> coupling;
    std::optional<double> field;
    std::optional<std::string> theta1, phi1, theta2, phi2;
    std::optional<double> t_min, t_max, dt;
    std::optional<std::string> end;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::optional<std::string> config;
    std::optional<std::string> field_sign;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--n", f.n, "Number of chain sites");
    cmd->add_option("--coupling", f.coupling, "Coupling J (default 1.0)");
    cmd->add_option("--h-field", f.field, "Transverse field h");
    cmd->add_option("--theta1", f.theta1, "Alice polar angle (radians or <x>pi)");
    cmd->add_option("--phi1", f.phi1, "Alice azimuthal angle");
    cmd->add_option("--theta2", f.theta2, "Bob polar angle");
    cmd->add_option("--phi2", f.phi2, "Bob azimuthal angle");
    cmd->add_option("--t-min", f.t_min, "Start of the time window");
    cmd->add_option("--t-max", f.t_max, "End of the time window");
    cmd->add_option("--dt", f.dt, "Time step");
    cmd->add_option("--end", f.end, "Receiving end to maximize: alice or bob")->check(CLI::IsMember({"alice", "bob"}));
    cmd->add_option("--out", f.out, "Output CSV path");
    cmd->add_option("--workers", f.workers, "Worker threads for sweeps (0 = all cores)");
    cmd->add_option("--config", f.config, "JSON experiment configuration");
    cmd->add_option("--field-sign", f.field_sign, "Field sign convention: eq3 (default) or eq1")
        ->check(CLI::IsMember({"eq3", "eq1"}));
}

io::ExperimentConfig base_config(const CommonFlags& f, io::ExperimentConfig fallback) {
    return f.config ? io::load_config(*f.config) : fallback;
}

void apply_flags(const CommonFlags& f, io::ExperimentConfig& cfg) {
    SweepSpec& s = cfg.sweep;
    if (f.n) s.chain.n_sites = *f.n;
    if (f.coupling) s.chain.coupling = *f.coupling;
    if (f.field) s.chain.field = *f.field;
    if (f.field_sign) s.chain.field_sign = field_sign_from_string(*f.field_sign);
    if (f.theta1) s.fixed.theta1 = io::parse_angle(*f.theta1);
    if (f.phi1) s.fixed.phi1 = io::parse_angle(*f.phi1);
    if (f.theta2) s.fixed.theta2 = io::parse_angle(*f.theta2);
    if (f.phi2) s.fixed.phi2 = io::parse_angle(*f.phi2);
    if (f.t_min) s.window.t_min = *f.t_min;
    if (f.t_max) s.window.t_max = *f.t_max;
    if (f.dt) s.window.coarse_step = *f.dt;
    if (f.end) s.end = end_from_string(*f.end);
    if (f.workers) s.workers = *f.workers;
    if (f.out) cfg.csv_path = *f.out;
}

int run_fidelity(const CommonFlags& f) {
    io::ExperimentConfig defaults;
    defaults.sweep.window.t_min = 0.0;
    defaults.sweep.window.coarse_step = 0.1;
    io::ExperimentConfig cfg = base_config(f, defaults);
    apply_flags(f, cfg);
    const SweepSpec& s = cfg.sweep;
    s.window.validate();

    const QubitState s1 = make_qubit(s.fixed.theta1, s.fixed.phi1);
    const QubitState s2 = make_qubit(s.fixed.theta2, s.fixed.phi2);
    const PropagatorTable table(s.chain);

    std::ostringstream csv;
    io::write_fidelity_header(csv);
    const int count = s.window.coarse_count();
    for (int k = 0; k < count; ++k) {
        const double t = s.window.coarse_time(k);
        const DuplexAmplitudes amps = evolve_duplex(s1, s2, table.end_rows(t));
        io::write_fidelity_row(csv, fidelity_closed_form(amps, s1, s2));
    }

    if (cfg.csv_path.empty()) {
        std::cout << csv.str();
        std::cout.flush();
        return std::cout ? kExitOk : kExitFailure;
    }
    std::ofstream out(cfg.csv_path, std::ios::binary);
    out << csv.str();
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + cfg.csv_path + "'");
    return kExitOk;
}

int run_sweep(const CommonFlags& f, Experiment experiment) {
    io::ExperimentConfig defaults;
    io::ExperimentConfig cfg = base_config(f, defaults);
    cfg.sweep.experiment = experiment;
    apply_flags(f, cfg);
    cfg.sweep.validate();

    const std::string title = to_string(experiment);
    if (cfg.csv_path.empty()) {
        std::ostringstream csv;
        std::ofstream svg;
        if (!cfg.svg_path.empty()) svg.open(cfg.svg_path, std::ios::binary);
        run_experiment(cfg.sweep, csv, svg.is_open() ? &svg : nullptr, title);
        std::cout << csv.str();
        return std::cout ? kExitOk : kExitFailure;
    }
    run_experiment(cfg.sweep, cfg.csv_path, cfg.svg_path, title);
    return kExitOk;
}

int run_reproduce(const CommonFlags& f, const std::string& figure_name) {
    const Figure fig = figure_from_string(figure_name);
    io::ExperimentConfig defaults;
    defaults.sweep = figure_spec(fig);
    io::ExperimentConfig cfg = base_config(f, defaults);
    apply_flags(f, cfg);
    cfg.sweep.validate();

    if (cfg.csv_path.empty()) cfg.csv_path = figure_name + ".csv";
    if (cfg.svg_path.empty()) cfg.svg_path = std::filesystem::path(cfg.csv_path).replace_extension(".svg").string();
    const SweepSpec& s = cfg.sweep;
    const std::string title = figure_name + "  N=" + std::to_string(s.chain.n_sites) +
                              "  h=" + io::format_number(s.chain.field, 6);
    run_experiment(s, cfg.csv_path, cfg.svg_path, title);
    std::cerr << "wrote " << cfg.csv_path << " and " << cfg.svg_path << '\n';
    return kExitOk;
}

int run_oracle_check_cmd(const CommonFlags& f, int cases, std::uint64_t seed) {
    OracleCheckOptions opt;
    if (f.n) opt.n_sites = *f.n;
    if (f.coupling) opt.coupling = *f.coupling;
    if (f.field) opt.field = *f.field;
    if (f.field_sign) opt.field_sign = field_sign_from_string(*f.field_sign);
    if (f.t_max) opt.t_max = *f.t_max;
    opt.cases = cases;
    opt.seed = seed;

    const OracleCheckReport r = run_oracle_check(opt);
    auto describe = [](const OracleCase& c) {
        return "h=" + io::format_number(c.field, 12) + " t=" + io::format_number(c.time, 12) +
               " theta1=" + io::format_number(c.params.theta1, 12) + " phi1=" + io::format_number(c.params.phi1, 12) +
               " theta2=" + io::format_number(c.params.theta2, 12) + " phi2=" + io::format_number(c.params.phi2, 12);
    };
    std::cout << "oracle-check N=" << opt.n_sites << " cases=" << r.cases
              << " field_sign=" << to_string(opt.field_sign) << '\n'
              << "max amplitude deviation: " << io::format_number(r.max_amplitude_dev, 6) << '\n'
              << "max fidelity deviation:  " << io::format_number(r.max_fidelity_dev, 6) << '\n'
              << "max single-excitation energy deviation from 2h - 2J cos(q_m): "
              << io::format_number(r.max_energy_dev, 6) << '\n';
    bool ok = true;
    if (r.max_amplitude_dev > opt.tolerance) {
        std::cout << "FAIL amplitudes at " << describe(r.worst_amplitude) << '\n';
        ok = false;
    }
    if (r.max_fidelity_dev > opt.tolerance) {
        std::cout << "FAIL fidelities at " << describe(r.worst_fidelity) << '\n';
        ok = false;
    }
    if (r.max_energy_dev > opt.tolerance) {
        std::cout << "FAIL single-excitation energy mismatch with E_m = 2h - 2J cos(q_m) at "
                  << describe(r.worst_energy) << '\n';
        ok = false;
    }
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-way quantum state transfer through an XY spin chain"};
    app.require_subcommand(1);

    CommonFlags fid_flags, theta_flags, phase_flags, length_flags, repro_flags, oracle_flags;

    auto* fid = app.add_subcommand("fidelity", "Both end fidelities over a time grid (CSV t,f_bob,f_alice)");
    add_common(fid, fid_flags);
    auto* theta = app.add_subcommand("sweep-theta", "F_max over a (theta1, theta2) grid");
    add_common(theta, theta_flags);
    auto* phase = app.add_subcommand("sweep-phase", "F_max over delta_phi = phi2 - phi1");
    add_common(phase, phase_flags);
    auto* length = app.add_subcommand("sweep-length", "F_max with and without Bob over chain length");
    add_common(length, length_flags);

    std::string figure;
    auto* repro = app.add_subcommand("reproduce", "Regenerate one figure panel (CSV + SVG)");
    repro->add_option("figure", figure, "fig2a|fig2b|fig2c|fig3a|fig3b|fig3c|fig4a|fig4b")->required();
    add_common(repro, repro_flags);

    int cases = 20;
    std::uint64_t seed = 1337;
    auto* oracle = app.add_subcommand("oracle-check", "Compare closed form with exact diagonalization");
    add_common(oracle, oracle_flags);
    oracle->add_option("--cases", cases, "Number of random cases");
    oracle->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*fid) return run_fidelity(fid_flags);
        if (*theta) return run_sweep(theta_flags, Experiment::theta_grid);
        if (*phase) return run_sweep(phase_flags, Experiment::phase_scan);
        if (*length) return run_sweep(length_flags, Experiment::length_scan);
        if (*repro) return run_reproduce(repro_flags, figure);
        if (*oracle) return run_oracle_check_cmd(oracle_flags, cases, seed);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
