// Copyright 2026 The Oneway Authors
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

#include "oneway/density_matrix.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace oneway {

struct DensityMatrixAccess {
    static DensityMatrix make(int n, std::vector<Complex> entries) { return DensityMatrix(n, std::move(entries)); }
    static std::vector<Complex> &entries(DensityMatrix &rho) { return rho.entries_; }
};

namespace {

// Renormalizes to unit trace and symmetrizes away rounding drift.
DensityMatrix finish(int n, std::vector<Complex> e) {
    std::size_t d = std::size_t{1} << n;
    double tr = 0;
    for (std::size_t k = 0; k < d; k++) {
        tr += e[k * d + k].real();
    }
    for (std::size_t r = 0; r < d; r++) {
        e[r * d + r] = Complex{e[r * d + r].real() / tr, 0};
        for (std::size_t c = r + 1; c < d; c++) {
            Complex avg = (e[r * d + c] + std::conj(e[c * d + r])) / (2 * tr);
            e[r * d + c] = avg;
            e[c * d + r] = std::conj(avg);
        }
    }
    return DensityMatrixAccess::make(n, std::move(e));
}

void apply_raw(std::vector<Complex> &v, std::uint64_t mask, Complex m00, Complex m01, Complex m10, Complex m11) {
    for (std::uint64_t i = 0; i < v.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = v[i];
        Complex a1 = v[i | mask];
        v[i] = m00 * a0 + m01 * a1;
        v[i | mask] = m10 * a0 + m11 * a1;
    }
}

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits, std::vector<Complex> entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {}

DensityMatrix DensityMatrix::from_ket(const Ket &ket) {
    std::size_t d = ket.dim();
    std::vector<Complex> e(d * d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            e[r * d + c] = ket.amplitude(r) * std::conj(ket.amplitude(c));
        }
    }
    return finish(ket.n_qubits(), std::move(e));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    Ket probe(n_qubits);  // range check
    std::size_t d = probe.dim();
    std::vector<Complex> e(d * d);
    for (std::size_t k = 0; k < d; k++) {
        e[k * d + k] = 1.0 / static_cast<double>(d);
    }
    return DensityMatrix(n_qubits, std::move(e));
}

DensityMatrix DensityMatrix::from_entries(int n_qubits, std::vector<Complex> entries) {
    Ket probe(n_qubits);
    if (entries.size() != probe.dim() * probe.dim()) {
        throw std::invalid_argument("density matrix entry count does not match 4^n");
    }
    DensityMatrix rho(n_qubits, std::move(entries));
    if (!rho.is_hermitian()) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1, 0}) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (rho.min_eigenvalue() < -1e-10) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
    return rho;
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights, std::span<const DensityMatrix> parts) {
    if (weights.size() != parts.size() || parts.empty()) {
        throw std::invalid_argument("mixture needs one weight per part");
    }
    double total = 0;
    for (double w : weights) {
        if (w < 0) {
            throw std::invalid_argument("mixture weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw std::invalid_argument("mixture weights must sum to 1");
    }
    int n = parts[0].n_qubits();
    std::vector<Complex> e(parts[0].entries_.size());
    for (std::size_t k = 0; k < parts.size(); k++) {
        if (parts[k].n_qubits() != n) {
            throw std::invalid_argument("mixture parts differ in qubit count");
        }
        for (std::size_t i = 0; i < e.size(); i++) {
            e[i] += weights[k] * parts[k].entries_[i];
        }
    }
    return finish(n, std::move(e));
}

Complex DensityMatrix::trace() const {
    Complex tr{};
    for (std::size_t k = 0; k < dim(); k++) {
        tr += (*this)(k, k);
    }
    return tr;
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
    double p = 0;
    for (const auto &x : entries_) {
        p += std::norm(x);
    }
    return p;
}

double DensityMatrix::min_eigenvalue() const {
    auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            m(r, c) = (*this)(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim(); r++) {
        for (std::size_t c = r; c < dim(); c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

double DensityMatrix::distance(const DensityMatrix &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("density matrix dimension mismatch");
    }
    double worst = 0;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

DensityMatrix apply_1q(const DensityMatrix &rho, const Operator &gate, int qubit, bool validate) {
    if (gate.dim() != 2) {
        throw std::invalid_argument("apply_1q needs a 2x2 gate");
    }
    if (validate && !gate.is_unitary()) {
        throw std::invalid_argument("gate is not unitary");
    }
    int n = rho.n_qubits();
    // View rho as a 2n-qubit vector |row>|col>: U acts on the row copy of the
    // qubit, conj(U) on the column copy.
    auto col_mask = qubit_mask(n, qubit);
    auto row_mask = col_mask << n;
    std::vector<Complex> e = rho.entries_;
    apply_raw(e, row_mask, gate(0, 0), gate(0, 1), gate(1, 0), gate(1, 1));
    apply_raw(e, col_mask, std::conj(gate(0, 0)), std::conj(gate(0, 1)), std::conj(gate(1, 0)),
              std::conj(gate(1, 1)));
    return finish(n, std::move(e));
}

double fidelity_dm(const DensityMatrix &rho, const Ket &target) {
    if (rho.dim() != target.dim()) {
        throw std::invalid_argument("density matrix and ket dimensions differ");
    }
    Complex acc{};
    for (std::size_t r = 0; r < rho.dim(); r++) {
        Complex row{};
        for (std::size_t c = 0; c < rho.dim(); c++) {
            row += rho(r, c) * target.amplitude(c);
        }
        acc += std::conj(target.amplitude(r)) * row;
    }
    return acc.real();
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    int n = rho.n_qubits();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace needs at least one kept qubit");
    }
    std::vector<bool> kept(n + 1, false);
    for (int q : keep) {
        if (q < 1 || q > n) {
            throw std::out_of_range("partial_trace qubit out of range");
        }
        if (kept[q]) {
            throw std::invalid_argument("partial_trace keep set repeats a qubit");
        }
        kept[q] = true;
    }
    std::vector<int> traced;
    for (int q = 1; q <= n; q++) {
        if (!kept[q]) {
            traced.push_back(q);
        }
    }
    int k = static_cast<int>(keep.size());
    std::size_t dk = std::size_t{1} << k;
    std::size_t dt = std::size_t{1} << traced.size();

    auto spread = [&](std::size_t bits, std::span<const int> qubits) {
        std::uint64_t idx = 0;
        int m = static_cast<int>(qubits.size());
        for (int j = 0; j < m; j++) {
            if (bits & (std::size_t{1} << (m - 1 - j))) {
                idx |= qubit_mask(n, qubits[j]);
            }
        }
        return idx;
    };

    std::vector<std::uint64_t> keep_idx(dk), trace_idx(dt);
    for (std::size_t a = 0; a < dk; a++) {
        keep_idx[a] = spread(a, keep);
    }
    for (std::size_t t = 0; t < dt; t++) {
        trace_idx[t] = spread(t, traced);
    }
    std::vector<Complex> e(dk * dk);
    for (std::size_t r = 0; r < dk; r++) {
        for (std::size_t c = 0; c < dk; c++) {
            Complex acc{};
            for (std::size_t t = 0; t < dt; t++) {
                acc += rho(keep_idx[r] | trace_idx[t], keep_idx[c] | trace_idx[t]);
            }
            e[r * dk + c] = acc;
        }
    }
    return finish(k, std::move(e));
}

DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> order) {
    if (static_cast<int>(order.size()) != rho.n_qubits()) {
        throw std::invalid_argument("permutation length does not match qubit count");
    }
    return partial_trace(rho, order);
}

const DensityMatrix &DensityProjection::state() const {
    if (!collapsed) {
        throw ImpossibleBranchError("measurement branch has zero probability");
    }
    return *collapsed;
}

DensityProjection project_out(const DensityMatrix &rho, int qubit, const Ket &onto) {
    if (onto.n_qubits() != 1) {
        throw std::invalid_argument("projection target must be a single-qubit ket");
    }
    int n = rho.n_qubits();
    auto mask = qubit_mask(n, qubit);
    Complex b[2] = {onto.amplitude(0), onto.amplitude(1)};
    std::size_t dn = rho.dim() / 2;
    auto squeeze = [mask](std::uint64_t i) { return (i & (mask - 1)) | ((i >> 1) & ~(mask - 1)); };
    std::vector<Complex> e(dn * dn);
    for (std::uint64_t r = 0; r < rho.dim(); r++) {
        if (r & mask) {
            continue;
        }
        for (std::uint64_t c = 0; c < rho.dim(); c++) {
            if (c & mask) {
                continue;
            }
            Complex acc{};
            for (int x = 0; x < 2; x++) {
                for (int y = 0; y < 2; y++) {
                    acc += std::conj(b[x]) * rho(x ? r | mask : r, y ? c | mask : c) * b[y];
                }
            }
            e[squeeze(r) * dn + squeeze(c)] = acc;
        }
    }
    double prob = 0;
    for (std::size_t k = 0; k < dn; k++) {
        prob += e[k * dn + k].real();
    }
    if (prob < kZeroProbability) {
        return {prob, std::nullopt};
    }
    return {prob, finish(n - 1, std::move(e))};
}

}  // namespace oneway
