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

#include "oneway/noise.h"

#include <array>
#include <stdexcept>

#include "oneway/pauli.h"
#include "pattern_walk.h"

namespace oneway {

void NoiseSpec::validate(int n_qubits) const {
    if (!(white_p >= 0 && white_p <= 1)) {
        throw std::invalid_argument("white-noise weight must lie in [0, 1]");
    }
    if (!depolarizing.empty() && static_cast<int>(depolarizing.size()) != n_qubits) {
        throw std::invalid_argument("depolarizing list needs one lambda per qubit (" + std::to_string(n_qubits) +
                                    ")");
    }
    for (double l : depolarizing) {
        if (!(l >= 0 && l <= 1)) {
            throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
        }
    }
}

bool NoiseSpec::is_ideal() const {
    if (white_p != 1.0) {
        return false;
    }
    for (double l : depolarizing) {
        if (l != 0.0) {
            return false;
        }
    }
    return true;
}

DensityMatrix apply_white_noise(const Ket &state, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("white-noise weight must lie in [0, 1]");
    }
    const std::array<double, 2> weights{p, 1 - p};
    const std::array<DensityMatrix, 2> parts{DensityMatrix::from_ket(state),
                                             DensityMatrix::maximally_mixed(state.n_qubits())};
    return DensityMatrix::mixture(weights, parts);
}

DensityMatrix depolarize(const DensityMatrix &rho, int qubit, double lambda) {
    if (!(lambda >= 0 && lambda <= 1)) {
        throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
    }
    const std::array<double, 4> weights{1 - lambda, lambda / 3, lambda / 3, lambda / 3};
    const std::array<DensityMatrix, 4> parts{rho, apply_1q(rho, gates::pauli_x(), qubit, false),
                                             apply_1q(rho, gates::pauli_y(), qubit, false),
                                             apply_1q(rho, gates::pauli_z(), qubit, false)};
    return DensityMatrix::mixture(weights, parts);
}

DensityMatrix apply_noise(const Ket &state, const NoiseSpec &noise) {
    noise.validate(state.n_qubits());
    auto rho = apply_white_noise(state, noise.white_p);
    for (std::size_t k = 0; k < noise.depolarizing.size(); k++) {
        if (noise.depolarizing[k] > 0) {
            rho = depolarize(rho, static_cast<int>(k) + 1, noise.depolarizing[k]);
        }
    }
    return rho;
}

std::vector<DensityBranchResult> run_pattern_dm(const DensityMatrix &rho, const Pattern &pattern,
                                                const RunMode &mode) {
    if (std::holds_alternative<SampleMode>(mode)) {
        throw std::invalid_argument("density-matrix execution supports enumerate and force modes only");
    }
    auto projector = [](const DensityMatrix &s, int pos, const Ket &b) { return project_out(s, pos, b); };
    internal::PatternWalker<DensityMatrix, decltype(projector)> walker(pattern, projector);
    std::vector<DensityBranchResult> branches;
    auto collect = [&](const std::vector<int> &bits, double prob, const DensityMatrix &out) {
        DensityBranchResult b;
        for (std::size_t k = 0; k < bits.size(); k++) {
            b.outcomes[pattern.steps[k].qubit] = bits[k];
        }
        b.probability = prob;
        b.output_state = out;
        b.frame = frame_for(pattern, b.outcomes);
        branches.push_back(std::move(b));
    };
    if (const auto *force = std::get_if<ForceMode>(&mode)) {
        walker.walk(rho, &force->bits, collect);
    } else {
        walker.walk(rho, nullptr, collect);
    }
    return branches;
}

DensityMatrix apply_frame(const DensityMatrix &output, const PauliFrame &frame) {
    if (static_cast<int>(frame.entries.size()) != output.n_qubits()) {
        throw std::invalid_argument("Pauli frame arity does not match the output state");
    }
    DensityMatrix out = output;
    for (std::size_t k = 0; k < frame.entries.size(); k++) {
        int q = static_cast<int>(k) + 1;
        if (frame.entries[k].x) {
            out = apply_1q(out, gates::pauli_x(), q, false);
        }
        if (frame.entries[k].z) {
            out = apply_1q(out, gates::pauli_z(), q, false);
        }
    }
    return out;
}

}  // namespace oneway
