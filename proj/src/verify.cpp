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

#include "duplex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "duplex/evolution.hpp"
#include "duplex/fidelity.hpp"
#include "duplex/oracle.hpp"

namespace duplex {

OracleCheckReport run_oracle_check(const OracleCheckOptions& options) {
    if (options.n_sites > oracle::kMaxSites) {
        throw ResourceError("oracle check is limited to " + std::to_string(oracle::kMaxSites) + " sites");
    }
    validate_config(ChainConfig{options.n_sites, options.coupling, 0.0, options.field_sign});
    if (options.cases < 1) throw DomainError("oracle check needs at least one case");

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> field(0.0, 1.5);
    std::uniform_real_distribution<double> time(0.0, options.t_max);

    OracleCheckReport report;
    for (int c = 0; c < options.cases; ++c) {
        OracleCase kase;
        kase.params = PointParams{polar(rng), azimuth(rng), polar(rng), azimuth(rng)};
        kase.field = options.field ? *options.field : field(rng);
        kase.time = time(rng);

        const ChainConfig cfg{options.n_sites, options.coupling, kase.field, options.field_sign};
        const QubitState s1 = make_qubit(kase.params.theta1, kase.params.phi1);
        const QubitState s2 = make_qubit(kase.params.theta2, kase.params.phi2);

        const DuplexAmplitudes closed = evolve_duplex(s1, s2, cfg, kase.time);
        const FidelityResult closed_f = fidelity_closed_form(closed, s1, s2);

        const oracle::Hamiltonian h = oracle::build_hamiltonian(cfg);
        const oracle::FullStateVector psi =
            oracle::evolve_full(h, oracle::duplex_product_state(s1, s2, options.n_sites), kase.time);
        const DuplexAmplitudes reference = oracle::extract_amplitudes(psi, kase.time);

        const double amp_dev = closed.max_abs_diff(reference);
        const double fid_dev = std::max(std::abs(closed_f.f_bob - oracle::oracle_fidelity(psi, options.n_sites, s1)),
                                        std::abs(closed_f.f_alice - oracle::oracle_fidelity(psi, 1, s2)));

        const std::vector<double> energies = oracle::single_excitation_energies(h);
        ChainConfig normative = cfg;
        normative.field_sign = FieldSign::eq3_normative;
        std::vector<double> expected = mode_spectrum(normative).energies;
        std::sort(expected.begin(), expected.end());
        double energy_dev = 0.0;
        for (std::size_t m = 0; m < expected.size(); ++m) {
            energy_dev = std::max(energy_dev, std::abs(energies[m] - expected[m]));
        }

        if (amp_dev > report.max_amplitude_dev || c == 0) {
            report.max_amplitude_dev = amp_dev;
            report.worst_amplitude = kase;
        }
        if (fid_dev > report.max_fidelity_dev || c == 0) {
            report.max_fidelity_dev = fid_dev;
            report.worst_fidelity = kase;
        }
        if (energy_dev > report.max_energy_dev || c == 0) {
            report.max_energy_dev = energy_dev;
            report.worst_energy = kase;
        }
        ++report.cases;
    }
    return report;
}

}  // namespace duplex
