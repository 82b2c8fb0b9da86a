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
#include "duplex/propagator.hpp"

namespace duplex {

/// Chain state restricted to the 0-, 1- and 2-excitation sectors:
///
///   |Phi> = [c0 + sum_i A_i c_i^dag + sum_{i<i'} B_{i,i'} c_i^dag c_{i'}^dag] |0...0>
///
/// Only i < i' pair amplitudes are stored. `B(i', i)` returns -B(i, i'), and
/// `B(i, i)` is zero. All site indices are 1-based.
class DuplexAmplitudes {
public:
    explicit DuplexAmplitudes(int n_sites, double time = 0.0);

    int n_sites() const { return static_cast<int>(a_.size()); }
    double time() const { return time_; }

    cplx c0() const { return c0_; }
    cplx A(int i) const;
    cplx B(int i, int ip) const;

    void set_c0(cplx value) { c0_ = value; }
    void set_A(int i, cplx value);
    /// Requires i < ip.
    void set_B(int i, int ip, cplx value);

    /// |c0|^2 + sum |A_i|^2 + sum_{i<i'} |B_{i,i'}|^2
    double norm_squared() const;

    /// Largest absolute entry-wise difference across all three sectors.
    double max_abs_diff(const DuplexAmplitudes& other) const;

private:
    void check_site(int i) const;

    double time_;
    cplx c0_{0.0, 0.0};
    Eigen::VectorXcd a_;
    Eigen::MatrixXcd b_;  // strict upper triangle used
};

/// Alice's qubit on site 1, Bob's on site N, channel in |0...0>.
DuplexAmplitudes initial_state(const QubitState& s1, const QubitState& s2, const ChainConfig& cfg);

DuplexAmplitudes evolve_duplex(const QubitState& s1, const QubitState& s2, const ChainConfig& cfg,
                               double t);

/// Same result as the overload above, reusing a propagator evaluated at the
/// desired time.
DuplexAmplitudes evolve_duplex(const QubitState& s1, const QubitState& s2,
                               const PropagatorMatrix& f);

/// Sweep fast path: the amplitudes depend on f only through rows 1 and N.
DuplexAmplitudes evolve_duplex(const QubitState& s1, const QubitState& s2, const EndRows& rows);

}  // namespace duplex
