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

#ifndef ONEWAY_PAULI_H
#define ONEWAY_PAULI_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oneway/density_matrix.h"
#include "oneway/statevec.h"

namespace oneway {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A tensor product of single-qubit Paulis times a phase i^k.
///
/// Multiplication tracks the phase exactly (XZ = -iY); a string is Hermitian
/// exactly when its phase is real, which is the only case `sign()` accepts.
class PauliString {
   public:
    explicit PauliString(int n_qubits);
    /// Parses "+XZI", "-YY", or "XZ" (implicit +).
    static PauliString parse(std::string_view text);
    /// Letter `p` on a single 1-based qubit, identity elsewhere.
    static PauliString single(int n_qubits, int qubit, Pauli p);

    int n_qubits() const { return static_cast<int>(letters_.size()); }
    Pauli letter(int qubit) const { return letters_.at(qubit - 1); }
    void set_letter(int qubit, Pauli p) { letters_.at(qubit - 1) = p; }
    /// Exponent k of the phase i^k, in [0, 4).
    int phase_exponent() const { return phase_; }
    bool is_hermitian() const { return phase_ % 2 == 0; }
    /// +1 or -1; throws std::logic_error for anti-Hermitian strings.
    int sign() const;
    void negate() { phase_ = (phase_ + 2) % 4; }

    PauliString operator*(const PauliString &rhs) const;
    bool operator==(const PauliString &other) const = default;
    bool commutes_with(const PauliString &other) const;

    std::string str() const;
    Operator to_operator() const;

    /// <psi| P |psi>, real for Hermitian P.
    double expectation(const Ket &state) const;
    /// tr(rho P)
    double expectation(const DensityMatrix &rho) const;

    /// U P U^dagger for a tensor product U = locals[0] (x) ... ; each local must map
    /// Paulis to signed Paulis (a Clifford), otherwise std::invalid_argument.
    PauliString conjugated(std::span<const Operator> locals) const;
    /// Reorders factors: qubit k of the result is qubit order[k-1] of this.
    PauliString permuted(std::span<const int> order) const;

   private:
    std::vector<Pauli> letters_;
    int phase_ = 0;
};

/// 2x2 matrix of a single-qubit Pauli.
Operator pauli_matrix(Pauli p);
char pauli_char(Pauli p);

}  // namespace oneway

#endif  // ONEWAY_PAULI_H
