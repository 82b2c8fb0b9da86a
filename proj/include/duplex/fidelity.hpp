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

#include <Eigen/Dense>

#include "duplex/chain_model.hpp"
#include "duplex/evolution.hpp"

namespace duplex {

/// Reduced single-site state in the {|0>, |1>} basis.
struct DensityMatrix2x2 {
    Eigen::Matrix2cd entries = Eigen::Matrix2cd::Zero();

    cplx operator()(int row, int col) const { return entries(row, col); }
};

/// Which end receives. Bob sits at site N and receives Alice's state;
/// Alice sits at site 1 and receives Bob's.
enum class End { alice, bob };

const char* to_string(End end);
End end_from_string(const std::string& text);

struct FidelityResult {
    double f_bob = 0.0;    // F_N: Alice -> Bob
    double f_alice = 0.0;  // F_1: Bob -> Alice
    double time = 0.0;

    double at(End end) const { return end == End::bob ? f_bob : f_alice; }
};

/// Closed-form reception fidelities at both ends, measured simultaneously.
///
/// F_N^2 = | |a1|^2 a2 + b1* A_N |^2
///       + sum_{i<N} | a1* A_i + b1* B_{i,N} |^2
///       + sum_{i<i', i'!=N} |a1|^2 |B_{i,i'}|^2
///
/// and F_1 with the roles of the two ends mirrored. The radicand is clamped to
/// zero when it is negative by at most 1e-12; a larger negative value throws
/// ConsistencyError.
FidelityResult fidelity_closed_form(const DuplexAmplitudes& amps, const QubitState& s1,
                                    const QubitState& s2);

double fidelity_bob(const DuplexAmplitudes& amps, const QubitState& s1, const QubitState& s2);
double fidelity_alice(const DuplexAmplitudes& amps, const QubitState& s1, const QubitState& s2);

/// Partial trace of |Phi><Phi| over every site except `site` (1-based).
///
/// With the two-excitation basis state for i < i' taken as
/// c_i^dag c_{i'}^dag |0>, which equals the spin state |1_i 1_{i'}> with a
/// plus sign, the off-diagonal element is
///
///   rho_01 = c0 conj(A_k) + sum_{i != k} A_i conj(B_{min(i,k), max(i,k)}),
///
/// so at k = N it collects c0 conj(A_N) and A_i conj(B_{i,N}), and at k = 1 it
/// collects c0 conj(A_1) and A_i conj(B_{1,i}).
DensityMatrix2x2 reduced_density(const DuplexAmplitudes& amps, int site);

/// sqrt(<target| rho |target>).
double fidelity_via_rho(const DensityMatrix2x2& rho, const QubitState& target);

}  // namespace duplex
