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

#ifndef ONEWAY_DENSITY_MATRIX_H
#define ONEWAY_DENSITY_MATRIX_H

#include <span>
#include <vector>

#include "oneway/statevec.h"

namespace oneway {

/// Hermitian, unit-trace operator over n qubits, row-major. Same qubit
/// convention as Ket (qubit 1 = most significant bit).
class DensityMatrix {
   public:
    static DensityMatrix from_ket(const Ket &ket);
    static DensityMatrix maximally_mixed(int n_qubits);
    /// Validates Hermiticity (1e-12), unit trace (1e-12) and eigenvalues >= -1e-10.
    static DensityMatrix from_entries(int n_qubits, std::vector<Complex> entries);
    /// sum_k weights[k] * parts[k]; weights must be non-negative and sum to 1.
    static DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> parts);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return std::size_t{1} << n_qubits_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim() + col]; }
    std::span<const Complex> entries() const { return entries_; }

    Complex trace() const;
    double purity() const;
    double min_eigenvalue() const;
    bool is_hermitian(double tol = 1e-12) const;
    double distance(const DensityMatrix &other) const;

   private:
    DensityMatrix(int n_qubits, std::vector<Complex> entries);
    friend DensityMatrix apply_1q(const DensityMatrix &, const Operator &, int, bool);
    friend struct DensityMatrixAccess;
    int n_qubits_;
    std::vector<Complex> entries_;
};

/// rho -> U rho U^dagger on one qubit.
DensityMatrix apply_1q(const DensityMatrix &rho, const Operator &gate, int qubit, bool validate = true);

/// <target| rho |target>
double fidelity_dm(const DensityMatrix &rho, const Ket &target);

/// Reduced state on the kept qubits, listed in the order they appear in `keep`.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);

/// Reorders qubits: qubit k of the result is qubit order[k-1] of `rho`.
DensityMatrix permute_qubits(const DensityMatrix &rho, std::span<const int> order);

struct DensityProjection {
    double probability;
    std::optional<DensityMatrix> collapsed;

    const DensityMatrix &state() const;
};

/// <onto|_q rho |onto>_q with the measured qubit dropped, renormalized.
DensityProjection project_out(const DensityMatrix &rho, int qubit, const Ket &onto);

}  // namespace oneway

#endif  // ONEWAY_DENSITY_MATRIX_H
