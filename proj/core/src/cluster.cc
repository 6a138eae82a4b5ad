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

#include "oneway/cluster.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oneway {

void GraphSpec::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("graph qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n_qubits || b < 1 || b > n_qubits) {
            throw std::invalid_argument("graph edge references a vertex out of range");
        }
        if (a == b) {
            throw std::invalid_argument("graph edges may not be self-loops");
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            throw std::invalid_argument("graph has a duplicate edge");
        }
    }
}

std::vector<int> GraphSpec::neighbors(int qubit) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == qubit) {
            out.push_back(b);
        } else if (b == qubit) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GraphSpec GraphSpec::linear_chain(int n_qubits) {
    GraphSpec g{n_qubits, {}};
    for (int q = 1; q < n_qubits; q++) {
        g.edges.emplace_back(q, q + 1);
    }
    g.validate();
    return g;
}

Ket build_cluster(const GraphSpec &spec) {
    spec.validate();
    std::vector<Complex> amps(std::size_t{1} << spec.n_qubits, Complex{1, 0});
    Ket state = Ket::from_amplitudes(std::move(amps));
    for (auto [a, b] : spec.edges) {
        state = apply_cz(state, a, b);
    }
    return state;
}

std::string_view physical_name(PhysicalQubit q) {
    switch (q) {
        case PhysicalQubit::kPolarizationA:
            return "pi_A";
        case PhysicalQubit::kMomentumA:
            return "k_A";
        case PhysicalQubit::kPolarizationB:
            return "pi_B";
        case PhysicalQubit::kMomentumB:
            return "k_B";
    }
    throw std::logic_error("bad physical qubit");
}

char basis_letter(PhysicalQubit q, int bit) {
    bool polarization = q == PhysicalQubit::kPolarizationA || q == PhysicalQubit::kPolarizationB;
    if (polarization) {
        return bit ? 'V' : 'H';
    }
    return bit ? 'r' : 'l';
}

Ordering parse_ordering(std::string_view name) {
    if (name == "a") return Ordering::kA;
    if (name == "b") return Ordering::kB;
    if (name == "c") return Ordering::kC;
    if (name == "d") return Ordering::kD;
    throw std::invalid_argument("unknown ordering '" + std::string(name) + "' (expected a, b, c or d)");
}

std::string_view ordering_name(Ordering ordering) {
    static constexpr std::string_view kNames[] = {"a", "b", "c", "d"};
    return kNames[static_cast<int>(ordering)];
}

int OrderingMap::position_of(PhysicalQubit q) const {
    for (int k = 0; k < 4; k++) {
        if (assignment[k] == q) {
            return k + 1;
        }
    }
    throw std::logic_error("ordering is not a bijection");
}

std::array<int, 4> OrderingMap::physical_permutation() const {
    std::array<int, 4> order{};
    for (int k = 0; k < 4; k++) {
        order[k] = position_of(static_cast<PhysicalQubit>(k));
    }
    return order;
}

const OrderingMap &ordering_map(Ordering ordering) {
    using P = PhysicalQubit;
    static const std::array<OrderingMap, 4> kMaps = [] {
        auto i = gates::identity();
        auto h = gates::hadamard();
        auto x = gates::pauli_x();
        auto z = gates::pauli_z();
        return std::array<OrderingMap, 4>{
            OrderingMap{Ordering::kA, {P::kMomentumB, P::kMomentumA, P::kPolarizationA, P::kPolarizationB},
                        {x * h, z, i, h}},
            OrderingMap{Ordering::kB, {P::kPolarizationB, P::kPolarizationA, P::kMomentumA, P::kMomentumB},
                        {h, z, x, z * h}},
            OrderingMap{Ordering::kC, {P::kMomentumA, P::kMomentumB, P::kPolarizationB, P::kPolarizationA},
                        {z * h, x, i, h}},
            OrderingMap{Ordering::kD, {P::kPolarizationA, P::kPolarizationB, P::kMomentumB, P::kMomentumA},
                        {h, i, x, z * h}},
        };
    }();
    return kMaps[static_cast<int>(ordering)];
}

Ket lab_cluster_state() {
    // Index bits are (pi_A, k_A, pi_B, k_B) with H,l = 0 and V,r = 1.
    std::vector<Complex> amps(16);
    amps[0b0001] = 0.5;   // |H l>_A |H r>_B
    amps[0b0100] = -0.5;  // |H r>_A |H l>_B
    amps[0b1110] = 0.5;   // |V r>_A |V l>_B
    amps[0b1011] = 0.5;   // |V l>_A |V r>_B
    return Ket::from_amplitudes(std::move(amps));
}

Ket to_lab_logical(const Ket &state, const OrderingMap &ordering) {
    if (state.n_qubits() != 4) {
        throw std::invalid_argument("lab-basis translation needs a 4-qubit state");
    }
    Ket out = state;
    for (int q = 1; q <= 4; q++) {
        out = apply_1q(out, ordering.local_unitaries[q - 1], q);
    }
    return out;
}

Ket to_lab(const Ket &state, const OrderingMap &ordering) {
    auto order = ordering.physical_permutation();
    return permute_qubits(to_lab_logical(state, ordering), order);
}

bool StabilizerGroup::contains(const PauliString &p) const {
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

bool StabilizerGroup::is_closed() const {
    for (const auto &a : elements_) {
        for (const auto &b : elements_) {
            if (!contains(a * b)) {
                return false;
            }
        }
    }
    return true;
}

bool StabilizerGroup::stabilizes(const Ket &state, double tol) const {
    for (const auto &s : elements_) {
        if (std::abs(s.expectation(state) - 1) > tol) {
            return false;
        }
    }
    return true;
}

std::vector<PauliString> graph_generators(const GraphSpec &spec) {
    spec.validate();
    std::vector<PauliString> gens;
    for (int q = 1; q <= spec.n_qubits; q++) {
        auto g = PauliString::single(spec.n_qubits, q, Pauli::X);
        for (int nb : spec.neighbors(q)) {
            g.set_letter(nb, Pauli::Z);
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

StabilizerGroup stabilizer_group(const GraphSpec &spec) {
    if (spec.n_qubits > 10) {
        throw std::invalid_argument("full stabilizer groups are limited to 10 qubits; use graph_generators");
    }
    auto gens = graph_generators(spec);
    std::vector<PauliString> elements;
    std::size_t count = std::size_t{1} << gens.size();
    elements.reserve(count);
    for (std::size_t mask = 0; mask < count; mask++) {
        PauliString acc(spec.n_qubits);
        for (std::size_t k = 0; k < gens.size(); k++) {
            if (mask & (std::size_t{1} << k)) {
                acc = acc * gens[k];
            }
        }
        elements.push_back(std::move(acc));
    }
    return StabilizerGroup(std::move(elements));
}

StabilizerGroup stabilizer_group(const GraphSpec &spec, const OrderingMap &ordering) {
    if (spec.n_qubits != 4) {
        throw std::invalid_argument("lab-basis stabilizer groups need a 4-qubit graph");
    }
    auto logical = stabilizer_group(spec);
    auto order = ordering.physical_permutation();
    std::vector<PauliString> elements;
    for (const auto &s : logical.elements()) {
        elements.push_back(s.conjugated(ordering.local_unitaries).permuted(order));
    }
    return StabilizerGroup(std::move(elements));
}

double stabilizer_fidelity(const DensityMatrix &rho, const StabilizerGroup &group) {
    if (group.n_qubits() != rho.n_qubits()) {
        throw std::invalid_argument("stabilizer group and density matrix sizes differ");
    }
    if (group.size() != (std::size_t{1} << rho.n_qubits())) {
        throw std::invalid_argument("stabilizer fidelity needs the complete group");
    }
    double total = 0;
    for (const auto &s : group.elements()) {
        total += s.expectation(rho);
    }
    return total / static_cast<double>(group.size());
}

}  // namespace oneway
