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

#include <complex>
#include <stdexcept>
#include <string>

namespace duplex {

using cplx = std::complex<double>;

/// Raised for out-of-domain arguments (bad angles, site indices, chain sizes).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a request exceeds what the dense verification path can hold.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised when two computations that must agree structurally do not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Sign with which the transverse field enters the single-excitation energies.
///
/// `eq3_normative` gives E_m = 2h - 2J cos(q_m); this is what the published
/// fidelity figures follow and is the default everywhere. `eq1_literal` is the
/// Hamiltonian exactly as printed, -h * sum(sigma_z), whose single-excitation
/// energies come out as -2h - 2J cos(q_m).
enum class FieldSign { eq3_normative, eq1_literal };

std::string to_string(FieldSign sign);
FieldSign field_sign_from_string(const std::string& text);

/// Open XY chain in a transverse field. Sites are numbered 1..n_sites.
struct ChainConfig {
    int n_sites = 10;
    double coupling = 1.0;
    double field = 0.0;
    FieldSign field_sign = FieldSign::eq3_normative;

    bool operator==(const ChainConfig&) const = default;
};

/// Throws DomainError unless n_sites >= 2 and the coupling is finite and
/// nonzero and the field is finite. Returns the config unchanged.
const ChainConfig& validate_config(const ChainConfig& cfg);

/// Pure single-qubit state alpha|0> + beta|1> on the Bloch sphere.
///
/// The amplitudes are always derived from the angles, so the two views cannot
/// drift apart: alpha = cos(theta/2), beta = sin(theta/2) e^{i phi}.
class QubitState {
public:
    QubitState() = default;

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

    /// Inner product <this|other>.
    cplx overlap(const QubitState& other) const;

    friend QubitState make_qubit(double theta, double phi);

private:
    double theta_ = 0.0;
    double phi_ = 0.0;
    cplx alpha_{1.0, 0.0};
    cplx beta_{0.0, 0.0};
};

/// theta must lie in [0, pi]; phi is any finite real and is reduced mod 2pi.
QubitState make_qubit(double theta, double phi);

}  // namespace duplex
