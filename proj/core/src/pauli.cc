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

#include "oneway/pauli.h"

#include <array>
#include <cmath>
#include <stdexcept>

namespace oneway {

namespace {

// Single-letter product table: a*b = i^phase[a][b] * letter[a][b].
constexpr Pauli kProductLetter[4][4] = {
    {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z},
    {Pauli::X, Pauli::I, Pauli::Z, Pauli::Y},
    {Pauli::Y, Pauli::Z, Pauli::I, Pauli::X},
    {Pauli::Z, Pauli::Y, Pauli::X, Pauli::I},
};
constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},  // XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // ZX = iY, ZY = -iX
};

int idx(Pauli p) { return static_cast<int>(p); }

// Finds (sign, letter) with U P U^dagger = sign * letter.
std::pair<int, Pauli> conjugate_letter(const Operator &u, Pauli p) {
    Operator image = u * pauli_matrix(p) * u.adjoint();
    for (Pauli q : {Pauli::X, Pauli::Y, Pauli::Z}) {
        Operator m = pauli_matrix(q);
        if (image.distance(m) < 1e-9) {
            return {1, q};
        }
        if (image.distance(m * Complex{-1, 0}) < 1e-9) {
            return {-1, q};
        }
    }
    throw std::invalid_argument("local unitary does not map Paulis to Paulis");
}

}  // namespace

Operator pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return gates::identity();
        case Pauli::X:
            return gates::pauli_x();
        case Pauli::Y:
            return gates::pauli_y();
        case Pauli::Z:
            return gates::pauli_z();
    }
    throw std::logic_error("bad Pauli");
}

char pauli_char(Pauli p) { return "IXYZ"[idx(p)]; }

PauliString::PauliString(int n_qubits) : letters_(n_qubits, Pauli::I) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("Pauli string qubit count out of range");
    }
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    PauliString out(static_cast<int>(text.size()));
    for (std::size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                out.letters_[k] = Pauli::X;
                break;
            case 'Y':
                out.letters_[k] = Pauli::Y;
                break;
            case 'Z':
                out.letters_[k] = Pauli::Z;
                break;
            default:
                throw std::invalid_argument("unrecognized Pauli letter in '" + std::string(text) + "'");
        }
    }
    out.phase_ = phase;
    return out;
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
    PauliString out(n_qubits);
    out.set_letter(qubit, p);
    return out;
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("anti-Hermitian Pauli string has no real sign");
    }
    return phase_ == 0 ? 1 : -1;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    if (rhs.n_qubits() != n_qubits()) {
        throw std::invalid_argument("Pauli string length mismatch");
    }
    PauliString out(n_qubits());
    int phase = phase_ + rhs.phase_;
    for (std::size_t k = 0; k < letters_.size(); k++) {
        int a = idx(letters_[k]);
        int b = idx(rhs.letters_[k]);
        out.letters_[k] = kProductLetter[a][b];
        phase += kProductPhase[a][b];
    }
    out.phase_ = phase % 4;
    return out;
}

bool PauliString::commutes_with(const PauliString &other) const {
    int anti = 0;
    for (std::size_t k = 0; k < letters_.size(); k++) {
        auto a = letters_[k];
        auto b = other.letters_.at(k);
        if (a != Pauli::I && b != Pauli::I && a != b) {
            anti++;
        }
    }
    return anti % 2 == 0;
}

std::string PauliString::str() const {
    static constexpr const char *kPhase[4] = {"+", "+i", "-", "-i"};
    std::string out = kPhase[phase_];
    for (auto p : letters_) {
        out += pauli_char(p);
    }
    return out;
}

Operator PauliString::to_operator() const {
    Operator acc = Operator::identity(1);
    for (auto p : letters_) {
        acc = acc.kron(pauli_matrix(p));
    }
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return acc * kPhase[phase_];
}

namespace {

// P|x> = factor(x) |x ^ flip>; returns flip mask and fills the per-basis factor.
template <typename F>
void for_each_action(const std::vector<Pauli> &letters, int phase, F &&f) {
    int n = static_cast<int>(letters.size());
    std::uint64_t flip = 0;
    for (int q = 1; q <= n; q++) {
        auto p = letters[q - 1];
        if (p == Pauli::X || p == Pauli::Y) {
            flip |= qubit_mask(n, q);
        }
    }
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < dim; x++) {
        int k = phase;
        for (int q = 1; q <= n; q++) {
            bool bit = x & qubit_mask(n, q);
            switch (letters[q - 1]) {
                case Pauli::Y:
                    k += bit ? 3 : 1;  // Y|0> = i|1>, Y|1> = -i|0>
                    break;
                case Pauli::Z:
                    k += bit ? 2 : 0;
                    break;
                default:
                    break;
            }
        }
        f(x, x ^ flip, kPhase[k % 4]);
    }
}

}  // namespace

double PauliString::expectation(const Ket &state) const {
    if (state.n_qubits() != n_qubits()) {
        throw std::invalid_argument("Pauli string and ket sizes differ");
    }
    Complex acc{};
    for_each_action(letters_, phase_, [&](std::uint64_t x, std::uint64_t y, Complex f) {
        acc += std::conj(state.amplitude(y)) * f * state.amplitude(x);
    });
    return acc.real();
}

double PauliString::expectation(const DensityMatrix &rho) const {
    if (rho.n_qubits() != n_qubits()) {
        throw std::invalid_argument("Pauli string and density matrix sizes differ");
    }
    // tr(rho P) = sum_x <x|rho P|x> = sum_x rho[P(x)][x] * factor(x).
    Complex acc{};
    for_each_action(letters_, phase_, [&](std::uint64_t x, std::uint64_t y, Complex f) { acc += rho(x, y) * f; });
    return acc.real();
}

PauliString PauliString::conjugated(std::span<const Operator> locals) const {
    if (static_cast<int>(locals.size()) != n_qubits()) {
        throw std::invalid_argument("need one local unitary per qubit");
    }
    PauliString out(n_qubits());
    out.phase_ = phase_;
    for (std::size_t k = 0; k < letters_.size(); k++) {
        if (letters_[k] == Pauli::I) {
            continue;
        }
        auto [s, q] = conjugate_letter(locals[k], letters_[k]);
        out.letters_[k] = q;
        if (s < 0) {
            out.phase_ = (out.phase_ + 2) % 4;
        }
    }
    return out;
}

PauliString PauliString::permuted(std::span<const int> order) const {
    if (static_cast<int>(order.size()) != n_qubits()) {
        throw std::invalid_argument("permutation length mismatch");
    }
    PauliString out(n_qubits());
    out.phase_ = phase_;
    for (std::size_t k = 0; k < order.size(); k++) {
        out.letters_[k] = letter(order[k]);
    }
    return out;
}

}  // namespace oneway
