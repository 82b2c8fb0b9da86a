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

// Brute-force reference path. Everything here works on the full 2^N spin
// Hilbert space built from Pauli matrices and never touches the mode-sum
// propagator, so it can be used to check that code independently.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "duplex/chain_model.hpp"
#include "duplex/evolution.hpp"

namespace duplex::oracle {

inline constexpr int kMaxSites = 14;

/// Spin-basis state. Basis index bit (l-1) is the occupation of site l,
/// with |0> = spin down and |1> = spin up.
struct FullStateVector {
    int n_sites = 0;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

/// H = -(J/2) sum_i (sx_i sx_{i+1} + sy_i sy_{i+1}) + field term, with the
/// field term -h sum sz (literal convention) or +h sum sz (normative
/// convention). The energy origin is moved to the all-down state, i.e. the
/// returned matrix is H - <0..0|H|0..0> I, so that state is stationary with
/// zero phase like the closed-form vacuum amplitude.
struct Hamiltonian {
    int n_sites = 0;
    Eigen::SparseMatrix<cplx> matrix;
};

/// Throws ResourceError for more than kMaxSites sites.
Hamiltonian build_hamiltonian(const ChainConfig& cfg);

/// Largest entry of |H - H^dagger|.
double hermiticity_error(const Hamiltonian& h);

/// Largest entry of |[H, sum_l sz_l]|.
double excitation_commutator_error(const Hamiltonian& h);

/// Sorted eigenvalues of H restricted to the span of weight-one basis states.
std::vector<double> single_excitation_energies(const Hamiltonian& h);

/// (a1|0> + b1|1>)_1 (x) |0>_2..N-1 (x) (a2|0> + b2|1>)_N
FullStateVector duplex_product_state(const QubitState& s1, const QubitState& s2, int n_sites);

/// exp(-iHt) psi0. H is split into the invariant blocks read off from its
/// sparsity pattern; each block carrying weight in psi0 is diagonalized
/// exactly, so there is no time-step error.
FullStateVector evolve_full(const Hamiltonian& h, const FullStateVector& psi0, double t);

/// Reads c0, A_i and B_{i,i'} (i < i') off the weight 0, 1 and 2 components.
/// Throws ConsistencyError if more than 1e-8 of amplitude sits at weight > 2.
DuplexAmplitudes extract_amplitudes(const FullStateVector& psi, double time = 0.0);

/// Partial trace of |psi><psi| onto `site`, then sqrt(<target|rho|target>).
double oracle_fidelity(const FullStateVector& psi, int site, const QubitState& target);

/// 2x2 reduced density matrix of `site` from the full state.
Eigen::Matrix2cd oracle_reduced_density(const FullStateVector& psi, int site);

}  // namespace duplex::oracle
