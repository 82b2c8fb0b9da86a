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

#include "duplex/fidelity.hpp"

#include <cmath>
#include <string>

namespace duplex {

namespace {

constexpr double kRadicandSlack = 1e-12;

double safe_sqrt(double radicand) {
    if (radicand < 0.0) {
        if (radicand < -kRadicandSlack) {
            throw ConsistencyError("negative fidelity radicand " + std::to_string(radicand));
        }
        return 0.0;
    }
    return std::sqrt(radicand);
}

}  // namespace

const char* to_string(End end) { return end == End::bob ? "bob" : "alice"; }

End end_from_string(const std::string& text) {
    if (text == "bob") return End::bob;
    if (text == "alice") return End::alice;
    throw DomainError("unknown end '" + text + "' (expected alice or bob)");
}

double fidelity_bob(const DuplexAmplitudes& amps, const QubitState& s1, const QubitState& s2) {
    const int n = amps.n_sites();
    const cplx a1 = s1.alpha();
    const cplx b1c = std::conj(s1.beta());
    const cplx a1c = std::conj(a1);
    const double a1_sq = std::norm(a1);

    double total = std::norm(a1_sq * s2.alpha() + b1c * amps.A(n));
    for (int i = 1; i <= n - 1; ++i) total += std::norm(a1c * amps.A(i) + b1c * amps.B(i, n));
    double pairs = 0.0;
    for (int i = 1; i <= n - 1; ++i) {
        for (int ip = i + 1; ip <= n - 1; ++ip) pairs += std::norm(amps.B(i, ip));
    }
    total += a1_sq * pairs;
    return safe_sqrt(total);
}

double fidelity_alice(const DuplexAmplitudes& amps, const QubitState& s1, const QubitState& s2) {
    const int n = amps.n_sites();
    const cplx a2 = s2.alpha();
    const cplx b2c = std::conj(s2.beta());
    const cplx a2c = std::conj(a2);
    const double a2_sq = std::norm(a2);

    double total = std::norm(a2_sq * s1.alpha() + b2c * amps.A(1));
    for (int i = 2; i <= n; ++i) total += std::norm(a2c * amps.A(i) + b2c * amps.B(1, i));
    double pairs = 0.0;
    for (int i = 2; i <= n; ++i) {
        for (int ip = i + 1; ip <= n; ++ip) pairs += std::norm(amps.B(i, ip));
    }
    total += a2_sq * pairs;
    return safe_sqrt(total);
}

FidelityResult fidelity_closed_form(const DuplexAmplitudes& amps, const QubitState& s1,
                                    const QubitState& s2) {
    return FidelityResult{fidelity_bob(amps, s1, s2), fidelity_alice(amps, s1, s2), amps.time()};
}

DensityMatrix2x2 reduced_density(const DuplexAmplitudes& amps, int site) {
    const int n = amps.n_sites();
    if (site < 1 || site > n) {
        throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(n));
    }
    double rho00 = std::norm(amps.c0());
    double rho11 = std::norm(amps.A(site));
    cplx rho01 = amps.c0() * std::conj(amps.A(site));

    for (int i = 1; i <= n; ++i) {
        if (i == site) continue;
        const cplx paired = i < site ? amps.B(i, site) : amps.B(site, i);
        rho00 += std::norm(amps.A(i));
        rho11 += std::norm(paired);
        rho01 += amps.A(i) * std::conj(paired);
        for (int ip = i + 1; ip <= n; ++ip) {
            if (ip != site) rho00 += std::norm(amps.B(i, ip));
        }
    }

    DensityMatrix2x2 rho;
    rho.entries(0, 0) = rho00;
    rho.entries(1, 1) = rho11;
    rho.entries(0, 1) = rho01;
    rho.entries(1, 0) = std::conj(rho01);
    return rho;
}

double fidelity_via_rho(const DensityMatrix2x2& rho, const QubitState& target) {
    const Eigen::Vector2cd v(target.alpha(), target.beta());
    const cplx expectation = v.dot(rho.entries * v);  // dot conjugates the left operand
    return safe_sqrt(expectation.real());
}

}  // namespace duplex
