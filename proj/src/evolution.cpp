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

#include "duplex/evolution.hpp"

#include <algorithm>
#include <string>

namespace duplex {

DuplexAmplitudes::DuplexAmplitudes(int n_sites, double time)
    : time_(time), a_(Eigen::VectorXcd::Zero(n_sites)), b_(Eigen::MatrixXcd::Zero(n_sites, n_sites)) {
    if (n_sites < 2) throw DomainError("duplex amplitudes need at least 2 sites");
}

void DuplexAmplitudes::check_site(int i) const {
    if (i < 1 || i > n_sites()) {
        throw DomainError("site " + std::to_string(i) + " outside 1.." + std::to_string(n_sites()));
    }
}

cplx DuplexAmplitudes::A(int i) const {
    check_site(i);
    return a_(i - 1);
}

cplx DuplexAmplitudes::B(int i, int ip) const {
    check_site(i);
    check_site(ip);
    if (i == ip) return 0.0;
    if (i < ip) return b_(i - 1, ip - 1);
    return -b_(ip - 1, i - 1);
}

void DuplexAmplitudes::set_A(int i, cplx value) {
    check_site(i);
    a_(i - 1) = value;
}

void DuplexAmplitudes::set_B(int i, int ip, cplx value) {
    check_site(i);
    check_site(ip);
    if (i >= ip) throw DomainError("pair amplitudes are stored with i < i'");
    b_(i - 1, ip - 1) = value;
}

double DuplexAmplitudes::norm_squared() const {
    double total = std::norm(c0_) + a_.squaredNorm();
    const int n = n_sites();
    for (int i = 0; i < n; ++i) {
        for (int ip = i + 1; ip < n; ++ip) total += std::norm(b_(i, ip));
    }
    return total;
}

double DuplexAmplitudes::max_abs_diff(const DuplexAmplitudes& other) const {
    if (other.n_sites() != n_sites()) throw DomainError("amplitude sets have different chain lengths");
    double worst = std::abs(c0_ - other.c0_);
    const int n = n_sites();
    for (int i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(a_(i) - other.a_(i)));
        for (int ip = i + 1; ip < n; ++ip) worst = std::max(worst, std::abs(b_(i, ip) - other.b_(i, ip)));
    }
    return worst;
}

DuplexAmplitudes initial_state(const QubitState& s1, const QubitState& s2, const ChainConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    DuplexAmplitudes out(n, 0.0);
    out.set_c0(s1.alpha() * s2.alpha());
    out.set_A(1, s1.beta() * s2.alpha());
    out.set_A(n, s1.alpha() * s2.beta());
    out.set_B(1, n, s1.beta() * s2.beta());
    return out;
}

DuplexAmplitudes evolve_duplex(const QubitState& s1, const QubitState& s2, const EndRows& rows) {
    const int n = static_cast<int>(rows.first.size());
    const Eigen::VectorXcd& f1 = rows.first;
    const Eigen::VectorXcd& fn = rows.last;

    const cplx a1b2 = s1.alpha() * s2.beta();
    const cplx b1a2 = s1.beta() * s2.alpha();
    const cplx b1b2 = s1.beta() * s2.beta();

    DuplexAmplitudes out(n, rows.time);
    out.set_c0(s1.alpha() * s2.alpha());
    for (int i = 0; i < n; ++i) {
        out.set_A(i + 1, a1b2 * fn(i) + b1a2 * f1(i));
        for (int ip = i + 1; ip < n; ++ip) {
            out.set_B(i + 1, ip + 1, b1b2 * (f1(i) * fn(ip) - f1(ip) * fn(i)));
        }
    }
    return out;
}

DuplexAmplitudes evolve_duplex(const QubitState& s1, const QubitState& s2,
                               const PropagatorMatrix& f) {
    const int n = f.n_sites();
    EndRows rows;
    rows.time = f.time();
    rows.first = f.matrix().row(0).transpose();
    rows.last = f.matrix().row(n - 1).transpose();
    return evolve_duplex(s1, s2, rows);
}

DuplexAmplitudes evolve_duplex(const QubitState& s1, const QubitState& s2, const ChainConfig& cfg,
                               double t) {
    return evolve_duplex(s1, s2, propagator_matrix(cfg, t));
}

}  // namespace duplex
