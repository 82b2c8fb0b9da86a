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

#include "duplex/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace duplex::oracle {

namespace {

using SparseC = Eigen::SparseMatrix<cplx>;

// Single-site operators in the ordered basis (|0> = down, |1> = up).
SparseC pauli(char which) {
    SparseC p(2, 2);
    const cplx i(0.0, 1.0);
    switch (which) {
        case 'x':
            p.insert(0, 1) = 1.0;
            p.insert(1, 0) = 1.0;
            break;
        case 'y':
            p.insert(0, 1) = i;
            p.insert(1, 0) = -i;
            break;
        case 'z':
            p.insert(0, 0) = -1.0;
            p.insert(1, 1) = 1.0;
            break;
    }
    p.makeCompressed();
    return p;
}

SparseC identity(long dim) {
    SparseC id(dim, dim);
    id.setIdentity();
    return id;
}

// op acting on site `site` (1-based) of an n-site chain; site l is bit l-1,
// so factors to its left in the Kronecker product are the higher sites.
SparseC embed(const SparseC& op, int site, int n) {
    const long low = 1L << (site - 1);
    const long high = 1L << (n - site);
    SparseC left = Eigen::kroneckerProduct(identity(high), op).eval();
    return Eigen::kroneckerProduct(left, identity(low)).eval();
}

void check_site(int site, int n) {
    if (site < 1 || site > n) {
        throw DomainError("site " + std::to_string(site) + " outside 1.." + std::to_string(n));
    }
}

SparseC sz_total(int n) {
    const long dim = 1L << n;
    SparseC total(dim, dim);
    const SparseC z = pauli('z');
    for (int l = 1; l <= n; ++l) total += embed(z, l, n);
    return total;
}

double max_abs_entry(const SparseC& m) {
    double worst = 0.0;
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SparseC::InnerIterator it(m, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

// Union-find over the nonzero pattern of H.
struct Components {
    std::vector<long> parent;

    explicit Components(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0L); }

    long find(long x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void join(long a, long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Hamiltonian build_hamiltonian(const ChainConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    if (n > kMaxSites) {
        throw ResourceError("oracle is limited to " + std::to_string(kMaxSites) + " sites, got " +
                            std::to_string(n));
    }
    const long dim = 1L << n;
    const SparseC x = pauli('x');
    const SparseC y = pauli('y');
    const SparseC z = pauli('z');

    SparseC h(dim, dim);
    for (int l = 1; l < n; ++l) {
        SparseC xx = embed(x, l, n) * embed(x, l + 1, n);
        SparseC yy = embed(y, l, n) * embed(y, l + 1, n);
        h += (-cfg.coupling / 2.0) * (xx + yy);
    }
    const double field_sign = cfg.field_sign == FieldSign::eq1_literal ? -1.0 : 1.0;
    for (int l = 1; l <= n; ++l) h += (field_sign * cfg.field) * embed(z, l, n);

    const cplx vacuum = h.coeff(0, 0);
    h -= vacuum * identity(dim);
    h.prune(cplx(0.0, 0.0));
    h.makeCompressed();
    return Hamiltonian{n, std::move(h)};
}

double hermiticity_error(const Hamiltonian& h) {
    SparseC diff = h.matrix - SparseC(h.matrix.adjoint());
    return max_abs_entry(diff);
}

double excitation_commutator_error(const Hamiltonian& h) {
    const SparseC sz = sz_total(h.n_sites);
    SparseC comm = h.matrix * sz - sz * h.matrix;
    return max_abs_entry(comm);
}

std::vector<double> single_excitation_energies(const Hamiltonian& h) {
    const int n = h.n_sites;
    Eigen::MatrixXcd block(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) block(a, b) = h.matrix.coeff(1L << a, 1L << b);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

FullStateVector duplex_product_state(const QubitState& s1, const QubitState& s2, int n_sites) {
    if (n_sites < 2) throw DomainError("chain needs at least 2 sites");
    if (n_sites > kMaxSites) throw ResourceError("oracle is limited to " + std::to_string(kMaxSites) + " sites");

    // Build site by site, highest site first, so that site l ends up on bit l-1.
    Eigen::VectorXcd state(1);
    state(0) = 1.0;
    for (int site = n_sites; site >= 1; --site) {
        Eigen::Vector2cd local(1.0, 0.0);
        if (site == 1) local = Eigen::Vector2cd(s1.alpha(), s1.beta());
        if (site == n_sites) local = Eigen::Vector2cd(s2.alpha(), s2.beta());
        Eigen::VectorXcd next(state.size() * 2);
        for (Eigen::Index k = 0; k < state.size(); ++k) {
            next(2 * k) = state(k) * local(0);
            next(2 * k + 1) = state(k) * local(1);
        }
        state = std::move(next);
    }
    return FullStateVector{n_sites, std::move(state)};
}

FullStateVector evolve_full(const Hamiltonian& h, const FullStateVector& psi0, double t) {
    const long dim = h.matrix.rows();
    if (psi0.amplitudes.size() != dim) throw DomainError("state and Hamiltonian dimensions differ");

    Components comps(dim);
    for (int k = 0; k < h.matrix.outerSize(); ++k) {
        for (SparseC::InnerIterator it(h.matrix, k); it; ++it) {
            if (it.value() != cplx(0.0, 0.0)) comps.join(it.row(), it.col());
        }
    }
    std::vector<std::vector<long>> blocks(dim);
    for (long i = 0; i < dim; ++i) blocks[comps.find(i)].push_back(i);

    FullStateVector out{psi0.n_sites, Eigen::VectorXcd::Zero(dim)};
    for (const auto& members : blocks) {
        if (members.empty()) continue;
        const long size = static_cast<long>(members.size());
        Eigen::VectorXcd local(size);
        for (long a = 0; a < size; ++a) local(a) = psi0.amplitudes(members[a]);
        if (local.norm() == 0.0) continue;

        Eigen::MatrixXcd block(size, size);
        for (long a = 0; a < size; ++a) {
            for (long b = 0; b < size; ++b) block(a, b) = h.matrix.coeff(members[a], members[b]);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
        const Eigen::MatrixXcd& vecs = solver.eigenvectors();
        Eigen::VectorXcd coeffs = vecs.adjoint() * local;
        for (long k = 0; k < size; ++k) coeffs(k) *= std::polar(1.0, -solver.eigenvalues()(k) * t);
        const Eigen::VectorXcd evolved = vecs * coeffs;
        for (long a = 0; a < size; ++a) out.amplitudes(members[a]) = evolved(a);
    }
    return out;
}

DuplexAmplitudes extract_amplitudes(const FullStateVector& psi, double time) {
    const int n = psi.n_sites;
    DuplexAmplitudes out(n, time);
    double leakage = 0.0;
    for (long idx = 0; idx < psi.amplitudes.size(); ++idx) {
        const cplx value = psi.amplitudes(idx);
        const auto bits = static_cast<unsigned long>(idx);
        switch (std::popcount(bits)) {
            case 0:
                out.set_c0(value);
                break;
            case 1:
                out.set_A(std::countr_zero(bits) + 1, value);
                break;
            case 2: {
                const int low = std::countr_zero(bits);
                const int high = std::bit_width(bits) - 1;
                out.set_B(low + 1, high + 1, value);
                break;
            }
            default:
                leakage += std::norm(value);
        }
    }
    if (std::sqrt(leakage) > 1e-8) {
        throw ConsistencyError("state has weight above two excitations: " + std::to_string(std::sqrt(leakage)));
    }
    return out;
}

Eigen::Matrix2cd oracle_reduced_density(const FullStateVector& psi, int site) {
    check_site(site, psi.n_sites);
    const long mask = 1L << (site - 1);
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (long idx = 0; idx < psi.amplitudes.size(); ++idx) {
        if (idx & mask) continue;
        const cplx down = psi.amplitudes(idx);
        const cplx up = psi.amplitudes(idx | mask);
        rho(0, 0) += down * std::conj(down);
        rho(0, 1) += down * std::conj(up);
        rho(1, 0) += up * std::conj(down);
        rho(1, 1) += up * std::conj(up);
    }
    return rho;
}

double oracle_fidelity(const FullStateVector& psi, int site, const QubitState& target) {
    const Eigen::Matrix2cd rho = oracle_reduced_density(psi, site);
    const Eigen::Vector2cd v(target.alpha(), target.beta());
    const double overlap = v.dot(rho * v).real();
    return std::sqrt(std::max(overlap, 0.0));
}

}  // namespace duplex::oracle
