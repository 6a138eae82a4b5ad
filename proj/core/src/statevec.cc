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

#include "oneway/statevec.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace oneway {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

void check_qubit(int n_qubits, int qubit) {
    if (qubit < 1 || qubit > n_qubits) {
        throw std::out_of_range(
            "qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(n_qubits) + " qubits");
    }
}

double squared_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace

Operator::Operator(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (!is_power_of_two(dim_)) {
        throw std::invalid_argument("operator dimension must be a power of two");
    }
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("operator entry count does not match dim*dim");
    }
}

Operator Operator::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t k = 0; k < dim; k++) {
        e[k * dim + k] = 1;
    }
    return Operator(dim, std::move(e));
}

int Operator::arity() const { return log2_exact(dim_); }

Operator Operator::adjoint() const {
    std::vector<Complex> e(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return Operator(dim_, std::move(e));
}

Operator Operator::kron(const Operator &rhs) const {
    std::size_t d = dim_ * rhs.dim_;
    std::vector<Complex> e(d * d);
    for (std::size_t r1 = 0; r1 < dim_; r1++) {
        for (std::size_t c1 = 0; c1 < dim_; c1++) {
            Complex a = entries_[r1 * dim_ + c1];
            for (std::size_t r2 = 0; r2 < rhs.dim_; r2++) {
                for (std::size_t c2 = 0; c2 < rhs.dim_; c2++) {
                    e[(r1 * rhs.dim_ + r2) * d + c1 * rhs.dim_ + c2] = a * rhs(r2, c2);
                }
            }
        }
    }
    return Operator(d, std::move(e));
}

Operator Operator::operator*(const Operator &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    std::vector<Complex> e(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t k = 0; k < dim_; k++) {
            Complex a = entries_[r * dim_ + k];
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; c++) {
                e[r * dim_ + c] += a * rhs.entries_[k * dim_ + c];
            }
        }
    }
    return Operator(dim_, std::move(e));
}

Operator Operator::operator*(Complex scale) const {
    auto e = entries_;
    for (auto &x : e) {
        x *= scale;
    }
    return Operator(dim_, std::move(e));
}

Operator Operator::operator+(const Operator &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    auto e = entries_;
    for (std::size_t k = 0; k < e.size(); k++) {
        e[k] += rhs.entries_[k];
    }
    return Operator(dim_, std::move(e));
}

double Operator::distance(const Operator &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    double worst = 0;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool Operator::is_unitary(double tol) const { return (*this * adjoint()).distance(identity(dim_)) <= tol; }

namespace gates {

Operator identity() { return Operator::identity(2); }
Operator pauli_x() { return Operator(2, {0, 1, 1, 0}); }
Operator pauli_y() { return Operator(2, {0, Complex{0, -1}, Complex{0, 1}, 0}); }
Operator pauli_z() { return Operator(2, {1, 0, 0, -1}); }
Operator hadamard() { return Operator(2, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}); }

Operator rz(double angle) {
    return Operator(2, {std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2)});
}

Operator rx(double angle) {
    double c = std::cos(angle / 2);
    Complex s{0, -std::sin(angle / 2)};
    return Operator(2, {c, s, s, c});
}

Operator cz() {
    auto u = Operator::identity(4);
    std::vector<Complex> e(u.entries().begin(), u.entries().end());
    e[15] = -1;
    return Operator(4, std::move(e));
}

Operator cnot() {
    return Operator(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

}  // namespace gates

Ket::Ket(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [0, " + std::to_string(kMaxQubits) + "]");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
    amplitudes_[0] = 1;
}

Ket::Ket(int n_qubits, std::vector<Complex> amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

Ket Ket::from_amplitudes(std::vector<Complex> amplitudes) {
    if (!is_power_of_two(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    int n = log2_exact(amplitudes.size());
    if (n > kMaxQubits) {
        throw std::invalid_argument("too many qubits for dense simulation");
    }
    double nrm = std::sqrt(squared_norm(amplitudes));
    if (!(nrm > 0) || !std::isfinite(nrm)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= nrm;
    }
    return Ket(n, std::move(amplitudes));
}

Ket Ket::basis(int n_qubits, std::uint64_t index) {
    Ket k(n_qubits);
    if (index >= k.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    k.amplitudes_[0] = 0;
    k.amplitudes_[index] = 1;
    return k;
}

Ket Ket::product(std::span<const Ket> factors) {
    Ket acc(0);
    for (const auto &f : factors) {
        acc = acc.kron(f);
    }
    return acc;
}

double Ket::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

Ket Ket::kron(const Ket &rhs) const {
    if (n_qubits_ + rhs.n_qubits_ > kMaxQubits) {
        throw std::invalid_argument("too many qubits for dense simulation");
    }
    std::vector<Complex> out(dim() * rhs.dim());
    for (std::size_t i = 0; i < dim(); i++) {
        for (std::size_t j = 0; j < rhs.dim(); j++) {
            out[i * rhs.dim() + j] = amplitudes_[i] * rhs.amplitudes_[j];
        }
    }
    return Ket(n_qubits_ + rhs.n_qubits_, std::move(out));
}

std::string Ket::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < dim(); i++) {
        if (std::abs(amplitudes_[i]) < 1e-12) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << amplitudes_[i].real() << (amplitudes_[i].imag() < 0 ? "" : "+") << amplitudes_[i].imag()
            << "i)|";
        for (int q = 1; q <= n_qubits_; q++) {
            out << ((i & qubit_mask(n_qubits_, q)) ? '1' : '0');
        }
        out << ">";
    }
    return out.str();
}

namespace kets {
Ket zero() { return Ket::basis(1, 0); }
Ket one() { return Ket::basis(1, 1); }
Ket plus() { return Ket::from_amplitudes({1, 1}); }
Ket minus() { return Ket::from_amplitudes({1, -1}); }
Ket equatorial(double angle, int outcome) {
    double sign = outcome ? -1.0 : 1.0;
    return Ket::from_amplitudes({1, sign * std::polar(1.0, -angle)});
}
}  // namespace kets

std::uint64_t qubit_mask(int n_qubits, int qubit) {
    check_qubit(n_qubits, qubit);
    return std::uint64_t{1} << (n_qubits - qubit);
}

Ket apply_1q(const Ket &state, const Operator &gate, int qubit, bool validate) {
    if (gate.dim() != 2) {
        throw std::invalid_argument("apply_1q needs a 2x2 gate");
    }
    if (validate && !gate.is_unitary()) {
        throw std::invalid_argument("gate is not unitary");
    }
    auto mask = qubit_mask(state.n_qubits(), qubit);
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    Complex m00 = gate(0, 0), m01 = gate(0, 1), m10 = gate(1, 0), m11 = gate(1, 1);
    for (std::uint64_t i = 0; i < out.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = out[i];
        Complex a1 = out[i | mask];
        out[i] = m00 * a0 + m01 * a1;
        out[i | mask] = m10 * a0 + m11 * a1;
    }
    return Ket::from_amplitudes(std::move(out));
}

Ket apply_2q(const Ket &state, const Operator &gate, int first, int second, bool validate) {
    if (gate.dim() != 4) {
        throw std::invalid_argument("apply_2q needs a 4x4 gate");
    }
    if (first == second) {
        throw std::invalid_argument("apply_2q needs distinct qubits");
    }
    if (validate && !gate.is_unitary()) {
        throw std::invalid_argument("gate is not unitary");
    }
    auto m1 = qubit_mask(state.n_qubits(), first);
    auto m2 = qubit_mask(state.n_qubits(), second);
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::uint64_t i = 0; i < out.size(); i++) {
        if (i & (m1 | m2)) {
            continue;
        }
        std::uint64_t idx[4] = {i, i | m2, i | m1, i | m1 | m2};
        Complex in[4] = {out[idx[0]], out[idx[1]], out[idx[2]], out[idx[3]]};
        for (int r = 0; r < 4; r++) {
            Complex acc{};
            for (int c = 0; c < 4; c++) {
                acc += gate(r, c) * in[c];
            }
            out[idx[r]] = acc;
        }
    }
    return Ket::from_amplitudes(std::move(out));
}

Ket apply_cz(const Ket &state, int i, int j) {
    if (i == j) {
        throw std::invalid_argument("apply_cz needs distinct qubits");
    }
    auto both = qubit_mask(state.n_qubits(), i) | qubit_mask(state.n_qubits(), j);
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::uint64_t k = 0; k < out.size(); k++) {
        if ((k & both) == both) {
            out[k] = -out[k];
        }
    }
    return Ket::from_amplitudes(std::move(out));
}

Ket permute_qubits(const Ket &state, std::span<const int> order) {
    int n = state.n_qubits();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("permutation length does not match qubit count");
    }
    std::vector<bool> seen(n + 1, false);
    for (int q : order) {
        check_qubit(n, q);
        if (seen[q]) {
            throw std::invalid_argument("permutation repeats a qubit");
        }
        seen[q] = true;
    }
    std::vector<Complex> out(state.dim());
    for (std::uint64_t src = 0; src < state.dim(); src++) {
        std::uint64_t dst = 0;
        for (int k = 1; k <= n; k++) {
            if (src & qubit_mask(n, order[k - 1])) {
                dst |= qubit_mask(n, k);
            }
        }
        out[dst] = state.amplitude(src);
    }
    return Ket::from_amplitudes(std::move(out));
}

const Ket &Projection::state() const {
    if (!collapsed) {
        throw ImpossibleBranchError("measurement branch has zero probability");
    }
    return *collapsed;
}

Projection project(const Ket &state, int qubit, const Ket &onto) {
    if (onto.n_qubits() != 1) {
        throw std::invalid_argument("projection target must be a single-qubit ket");
    }
    int n = state.n_qubits();
    auto mask = qubit_mask(n, qubit);
    Complex b0 = std::conj(onto.amplitude(0));
    Complex b1 = std::conj(onto.amplitude(1));
    std::vector<Complex> out(state.dim());
    double prob = 0;
    for (std::uint64_t i = 0; i < state.dim(); i++) {
        if (i & mask) {
            continue;
        }
        Complex c = b0 * state.amplitude(i) + b1 * state.amplitude(i | mask);
        prob += std::norm(c);
        out[i] = c * onto.amplitude(0);
        out[i | mask] = c * onto.amplitude(1);
    }
    if (prob < kZeroProbability) {
        return {prob, std::nullopt};
    }
    return {prob, Ket::from_amplitudes(std::move(out))};
}

Projection project_out(const Ket &state, int qubit, const Ket &onto) {
    if (onto.n_qubits() != 1) {
        throw std::invalid_argument("projection target must be a single-qubit ket");
    }
    int n = state.n_qubits();
    auto mask = qubit_mask(n, qubit);
    Complex b0 = std::conj(onto.amplitude(0));
    Complex b1 = std::conj(onto.amplitude(1));
    std::vector<Complex> out(state.dim() / 2);
    double prob = 0;
    for (std::uint64_t i = 0; i < state.dim(); i++) {
        if (i & mask) {
            continue;
        }
        Complex c = b0 * state.amplitude(i) + b1 * state.amplitude(i | mask);
        prob += std::norm(c);
        // Squeeze the measured bit out of the index.
        std::uint64_t low = i & (mask - 1);
        std::uint64_t high = (i >> 1) & ~(mask - 1);
        out[high | low] = c;
    }
    if (prob < kZeroProbability) {
        return {prob, std::nullopt};
    }
    return {prob, Ket::from_amplitudes(std::move(out))};
}

Complex inner(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ket dimension mismatch");
    }
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); i++) {
        acc += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return acc;
}

double overlap_fidelity(const Ket &a, const Ket &b) { return std::norm(inner(a, b)); }

Complex relative_phase(const Ket &a, const Ket &b) {
    Complex ip = inner(a, b);
    double mag = std::abs(ip);
    if (mag < 1e-12) {
        throw std::invalid_argument("relative phase of orthogonal kets is undefined");
    }
    return ip / mag;
}

}  // namespace oneway
