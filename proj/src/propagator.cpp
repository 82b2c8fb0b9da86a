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

#include "duplex/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace duplex {

namespace {

double field_shift(const ChainConfig& cfg) {
    return cfg.field_sign == FieldSign::eq3_normative ? 2.0 * cfg.field : -2.0 * cfg.field;
}

void check_site(int site, int n, const char* what) {
    if (site < 1 || site > n) {
        throw DomainError(std::string(what) + " index " + std::to_string(site) +
                          " outside 1.." + std::to_string(n));
    }
}

}  // namespace

ModeSpectrum mode_spectrum(const ChainConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    ModeSpectrum out;
    out.wavenumbers.reserve(n);
    out.energies.reserve(n);
    const double shift = field_shift(cfg);
    for (int m = 1; m <= n; ++m) {
        const double q = std::numbers::pi * m / (n + 1);
        out.wavenumbers.push_back(q);
        out.energies.push_back(shift - 2.0 * cfg.coupling * std::cos(q));
    }
    return out;
}

PropagatorMatrix::PropagatorMatrix(double time, Eigen::MatrixXcd entries)
    : time_(time), entries_(std::move(entries)) {}

cplx PropagatorMatrix::at(int j, int l) const {
    check_site(j, n_sites(), "row");
    check_site(l, n_sites(), "column");
    return entries_(j - 1, l - 1);
}

PropagatorMatrix propagator_matrix(const ChainConfig& cfg, double t) {
    const ModeSpectrum spec = mode_spectrum(cfg);
    const int n = cfg.n_sites;
    const double norm = 2.0 / (n + 1);

    std::vector<cplx> phases(n);
    for (int m = 0; m < n; ++m) phases[m] = std::polar(1.0, -spec.energies[m] * t);

    Eigen::MatrixXcd f(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int l = j; l <= n; ++l) {
            cplx sum = 0.0;
            for (int m = 0; m < n; ++m) {
                const double q = spec.wavenumbers[m];
                sum += (std::sin(q * j) * std::sin(q * l)) * phases[m];
            }
            f(j - 1, l - 1) = norm * sum;
            f(l - 1, j - 1) = f(j - 1, l - 1);
        }
    }
    return PropagatorMatrix(t, std::move(f));
}

PropagatorTable::PropagatorTable(const ChainConfig& cfg)
    : cfg_(validate_config(cfg)), spectrum_(mode_spectrum(cfg)) {
    const int n = cfg_.n_sites;
    const double scale = std::sqrt(2.0 / (n + 1));
    modes_.resize(n, n);
    for (int j = 1; j <= n; ++j) {
        for (int m = 0; m < n; ++m) {
            modes_(j - 1, m) = scale * std::sin(spectrum_.wavenumbers[m] * j);
        }
    }
}

PropagatorMatrix PropagatorTable::matrix(double t) const {
    const int n = n_sites();
    Eigen::VectorXcd phases(n);
    for (int m = 0; m < n; ++m) phases(m) = std::polar(1.0, -spectrum_.energies[m] * t);

    Eigen::MatrixXcd f(n, n);
    for (int j = 0; j < n; ++j) {
        for (int l = j; l < n; ++l) {
            cplx sum = 0.0;
            for (int m = 0; m < n; ++m) sum += (modes_(j, m) * modes_(l, m)) * phases(m);
            f(j, l) = sum;
            f(l, j) = sum;
        }
    }
    return PropagatorMatrix(t, std::move(f));
}

EndRows PropagatorTable::end_rows(double t) const {
    const int n = n_sites();
    EndRows rows;
    rows.time = t;
    rows.first = Eigen::VectorXcd::Zero(n);
    rows.last = Eigen::VectorXcd::Zero(n);
    for (int m = 0; m < n; ++m) {
        const cplx phase = std::polar(1.0, -spectrum_.energies[m] * t);
        const cplx w_first = modes_(0, m) * phase;
        const cplx w_last = modes_(n - 1, m) * phase;
        for (int l = 0; l < n; ++l) {
            rows.first(l) += w_first * modes_(l, m);
            rows.last(l) += w_last * modes_(l, m);
        }
    }
    return rows;
}

cplx pair_amplitude(const PropagatorMatrix& f, int j1, int j2, int l1, int l2) {
    const int n = f.n_sites();
    check_site(j1, n, "source");
    check_site(j2, n, "source");
    check_site(l1, n, "target");
    check_site(l2, n, "target");
    if (j1 == j2) throw DomainError("pair amplitude needs two distinct source sites");
    if (l1 >= l2) throw DomainError("pair amplitude needs target sites ordered l1 < l2");
    return f.at(j1, l1) * f.at(j2, l2) - f.at(j1, l2) * f.at(j2, l1);
}

}  // namespace duplex
