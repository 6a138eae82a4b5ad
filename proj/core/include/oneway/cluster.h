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

#ifndef ONEWAY_CLUSTER_H
#define ONEWAY_CLUSTER_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oneway/density_matrix.h"
#include "oneway/pauli.h"
#include "oneway/statevec.h"

namespace oneway {

/// Simple undirected graph on 1-based vertices.
struct GraphSpec {
    int n_qubits = 0;
    std::vector<std::pair<int, int>> edges;

    /// Throws std::invalid_argument on self-loops, duplicate edges (in either
    /// orientation), or out-of-range vertices.
    void validate() const;
    std::vector<int> neighbors(int qubit) const;

    static GraphSpec linear_chain(int n_qubits);
};

/// |+>^n followed by CZ on every edge.
Ket build_cluster(const GraphSpec &spec);

/// The four physical qubits carried by the two photons. Enumerator order is the
/// canonical physical layout used for lab-basis kets: photon A (polarization,
/// momentum) then photon B (polarization, momentum).
enum class PhysicalQubit { kPolarizationA = 0, kMomentumA = 1, kPolarizationB = 2, kMomentumB = 3 };

std::string_view physical_name(PhysicalQubit q);
/// Basis letter for a bit: H/V for polarization, l/r for momentum.
char basis_letter(PhysicalQubit q, int bit);

enum class Ordering { kA, kB, kC, kD };

Ordering parse_ordering(std::string_view name);
std::string_view ordering_name(Ordering ordering);

/// Assignment of logical cluster positions 1..4 to physical qubits, plus the
/// local unitaries U_1..U_4 carrying the computational-basis cluster into the
/// laboratory encoding.
struct OrderingMap {
    Ordering name;
    std::array<PhysicalQubit, 4> assignment;
    std::array<Operator, 4> local_unitaries;

    /// Logical position (1..4) holding `q`.
    int position_of(PhysicalQubit q) const;
    /// Permutation taking logical order to canonical physical order, in the
    /// form accepted by permute_qubits.
    std::array<int, 4> physical_permutation() const;
};

const OrderingMap &ordering_map(Ordering ordering);

/// The lab-basis cluster written directly from its four photon terms, in
/// canonical physical order (pi_A, k_A, pi_B, k_B).
Ket lab_cluster_state();

/// Applies U_1 (x) ... (x) U_4 and keeps the logical qubit order.
Ket to_lab_logical(const Ket &state, const OrderingMap &ordering);
/// Applies the local unitaries and reorders into canonical physical order.
Ket to_lab(const Ket &state, const OrderingMap &ordering);

/// A full stabilizer group (or, for large graphs, just its generators).
class StabilizerGroup {
   public:
    explicit StabilizerGroup(std::vector<PauliString> elements) : elements_(std::move(elements)) {}

    const std::vector<PauliString> &elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    int n_qubits() const { return elements_.empty() ? 0 : elements_.front().n_qubits(); }

    bool contains(const PauliString &p) const;
    bool is_closed() const;
    /// Checks <psi|S|psi> = +1 within `tol` for every element.
    bool stabilizes(const Ket &state, double tol = 1e-10) const;

   private:
    std::vector<PauliString> elements_;
};

/// g_i = X_i prod_{j ~ i} Z_j
std::vector<PauliString> graph_generators(const GraphSpec &spec);

/// Span of the generators (2^n elements). Limited to n <= 10.
StabilizerGroup stabilizer_group(const GraphSpec &spec);

/// Lab-basis group for a 4-qubit graph: every element conjugated by the
/// ordering's local unitaries and reordered into canonical physical order, so
/// that it stabilizes to_lab(build_cluster(spec), ordering).
StabilizerGroup stabilizer_group(const GraphSpec &spec, const OrderingMap &ordering);

/// (1/|G|) sum_S tr(rho S); equals <psi|rho|psi> for the stabilized state psi
/// when the group is complete.
double stabilizer_fidelity(const DensityMatrix &rho, const StabilizerGroup &group);

}  // namespace oneway

#endif  // ONEWAY_CLUSTER_H
