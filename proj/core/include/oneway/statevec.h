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

#ifndef ONEWAY_STATEVEC_H
#define ONEWAY_STATEVEC_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oneway {

using Complex = std::complex<double>;

/// Dense simulation is capped at this many qubits.
inline constexpr int kMaxQubits = 12;

/// Branches whose probability falls below this are treated as impossible.
inline constexpr double kZeroProbability = 1e-14;

/// Raised when a caller insists on a measurement branch that cannot occur.
struct ImpossibleBranchError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A dense 2^k x 2^k complex matrix stored row-major.
class Operator {
   public:
    Operator(std::size_t dim, std::vector<Complex> entries);

    static Operator identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    /// Number of qubits the operator acts on.
    int arity() const;
    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Complex> entries() const { return entries_; }

    Operator adjoint() const;
    Operator kron(const Operator &rhs) const;
    Operator operator*(const Operator &rhs) const;
    Operator operator*(Complex scale) const;
    Operator operator+(const Operator &rhs) const;

    /// True when U U^dagger equals the identity entrywise within `tol`.
    bool is_unitary(double tol = 1e-10) const;
    /// Max entrywise distance.
    double distance(const Operator &other) const;

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

namespace gates {
Operator identity();
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
/// exp(-i angle Z / 2)
Operator rz(double angle);
/// exp(-i angle X / 2)
Operator rx(double angle);
/// |0><0| (x) I + |1><1| (x) Z
Operator cz();
/// Control is the first (more significant) qubit.
Operator cnot();
}  // namespace gates

/// Normalized state vector over n qubits. Qubit 1 is the most significant bit of
/// the basis index; all public qubit indices are 1-based.
class Ket {
   public:
    /// |0...0> on n qubits. n == 0 gives the one-amplitude scalar state that
    /// remains once every qubit has been measured out.
    explicit Ket(int n_qubits);

    /// Normalizes `amplitudes`. Throws std::invalid_argument on a zero vector or
    /// a length that is not a power of two.
    static Ket from_amplitudes(std::vector<Complex> amplitudes);
    static Ket basis(int n_qubits, std::uint64_t index);
    static Ket product(std::span<const Ket> factors);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_[index]; }
    double norm() const;

    Ket kron(const Ket &rhs) const;
    std::string str() const;

   private:
    Ket(int n_qubits, std::vector<Complex> amplitudes);
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

namespace kets {
Ket zero();
Ket one();
Ket plus();
Ket minus();
/// (|0> + (-1)^outcome e^{-i angle} |1>) / sqrt(2)
Ket equatorial(double angle, int outcome = 0);
}  // namespace kets

/// Bit mask of a 1-based qubit within an n-qubit basis index.
std::uint64_t qubit_mask(int n_qubits, int qubit);

Ket apply_1q(const Ket &state, const Operator &gate, int qubit, bool validate = true);
/// Applies a 4x4 gate with `first` as the more significant operand.
Ket apply_2q(const Ket &state, const Operator &gate, int first, int second, bool validate = true);
Ket apply_cz(const Ket &state, int i, int j);

/// Reorders qubits: qubit k of the result is qubit order[k-1] of `state`.
Ket permute_qubits(const Ket &state, std::span<const int> order);

struct Projection {
    double probability;
    /// Empty when probability < kZeroProbability.
    std::optional<Ket> collapsed;

    /// The collapsed state; throws ImpossibleBranchError when undefined.
    const Ket &state() const;
};

/// Projects `qubit` onto the single-qubit ket `onto`, keeping all n qubits.
Projection project(const Ket &state, int qubit, const Ket &onto);

/// Contracts `qubit` against `onto` and drops it, leaving n-1 qubits. When
/// n == 1 the result is the one-element scalar state. Callers receive the
/// probability and (when possible) the renormalized remainder.
Projection project_out(const Ket &state, int qubit, const Ket &onto);

Complex inner(const Ket &a, const Ket &b);
/// |<a|b>|^2
double overlap_fidelity(const Ket &a, const Ket &b);
/// <a|b> / |<a|b>|, i.e. the global phase carrying a to b when they are parallel.
Complex relative_phase(const Ket &a, const Ket &b);

}  // namespace oneway

#endif  // ONEWAY_STATEVEC_H
