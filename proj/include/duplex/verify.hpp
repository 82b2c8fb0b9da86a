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

#include <cstdint>
#include <optional>

#include "duplex/chain_model.hpp"
#include "duplex/sweep.hpp"

namespace duplex {

struct OracleCheckOptions {
    int n_sites = 4;
    int cases = 20;
    std::uint64_t seed = 1337;
    double coupling = 1.0;
    FieldSign field_sign = FieldSign::eq3_normative;
    std::optional<double> field;  // random in [0, 1.5] when unset
    double t_max = 60.0;
    double tolerance = 1e-9;
};

struct OracleCase {
    double field = 0.0;
    double time = 0.0;
    PointParams params;
};

struct OracleCheckReport {
    int cases = 0;
    double max_amplitude_dev = 0.0;
    double max_fidelity_dev = 0.0;
    /// Oracle single-excitation energies against 2h - 2J cos(q_m).
    double max_energy_dev = 0.0;
    OracleCase worst_amplitude;
    OracleCase worst_fidelity;
    OracleCase worst_energy;

    bool passed(double tolerance) const {
        return max_amplitude_dev <= tolerance && max_fidelity_dev <= tolerance && max_energy_dev <= tolerance;
    }
};

/// Random (angles, field, time) cases comparing the closed-form amplitudes and
/// both end fidelities with the 2^N exact-diagonalization path. The closed
/// form is evaluated under the requested field sign; the energy audit always
/// compares against the normative single-excitation formula, so the literal
/// sign with h != 0 shows up as an energy mismatch.
OracleCheckReport run_oracle_check(const OracleCheckOptions& options);

}  // namespace duplex
