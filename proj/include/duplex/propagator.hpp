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
#include <vector>

#include "duplex/chain_model.hpp"

namespace duplex {

/// Single-excitation normal modes of the open chain.
///
/// q_m = pi m / (N+1) for m = 1..N. Under the normative field sign the
/// energies are E_m = 2h - 2J cos(q_m); under the literal sign the field
/// term enters with the opposite sign.
struct ModeSpectrum {
    std::vector<double> wavenumbers;
    std::vector<double> energies;
};

ModeSpectrum mode_spectrum(const ChainConfig& cfg);

/// f_{j,l}(t): amplitude for an excitation created at site j to sit on site l
/// after time t. Sites are 1-based in `at`; `matrix()` exposes the raw
/// 0-based Eigen storage for linear algebra.
class PropagatorMatrix {
public:
    PropagatorMatrix(double time, Eigen::MatrixXcd entries);

    double time() const { return time_; }
    int n_sites() const { return static_cast<int>(entries_.rows()); }

    /// Checked 1-based access.
    cplx at(int j, int l) const;
    const Eigen::MatrixXcd& matrix() const { return entries_; }

private:
    double time_;
    Eigen::MatrixXcd entries_;
};

/// Rows j = 1 and j = N of f(t). These are all the duplex dynamics needs,
/// since excitations are only ever created at the two ends.
struct EndRows {
    double time = 0.0;
    Eigen::VectorXcd first;  // f_{1,l}, l = 1..N (0-based storage)
    Eigen::VectorXcd last;   // f_{N,l}
};

/// Direct evaluation of the mode sum, O(N) per entry.
PropagatorMatrix propagator_matrix(const ChainConfig& cfg, double t);

/// Precomputed sin(q_m j) table for one chain, shared across time points.
/// Immutable after construction and safe for concurrent readers.
class PropagatorTable {
public:
    explicit PropagatorTable(const ChainConfig& cfg);

    const ChainConfig& config() const { return cfg_; }
    int n_sites() const { return cfg_.n_sites; }
    const ModeSpectrum& spectrum() const { return spectrum_; }

    PropagatorMatrix matrix(double t) const;
    EndRows end_rows(double t) const;

private:
    ChainConfig cfg_;
    ModeSpectrum spectrum_;
    // modes_(j-1, m-1) = sqrt(2/(N+1)) sin(q_m j)
    Eigen::MatrixXd modes_;
};

/// 2x2 determinant [[f_{j1,l1}, f_{j1,l2}], [f_{j2,l1}, f_{j2,l2}]]: the
/// amplitude for excitations created at j1, j2 to occupy sites l1 < l2.
cplx pair_amplitude(const PropagatorMatrix& f, int j1, int j2, int l1, int l2);

}  // namespace duplex
