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

#ifndef ONEWAY_NOISE_H
#define ONEWAY_NOISE_H

#include <map>
#include <vector>

#include "oneway/density_matrix.h"
#include "oneway/mbqc.h"

namespace oneway {

/// White-noise weight plus optional per-qubit depolarizing strengths.
struct NoiseSpec {
    /// Weight of the pure state; 1 - white_p goes to the maximally mixed state.
    double white_p = 1.0;
    /// Empty, or one lambda per qubit.
    std::vector<double> depolarizing;

    void validate(int n_qubits) const;
    bool is_ideal() const;
};

/// p |psi><psi| + (1 - p) I / 2^n
DensityMatrix apply_white_noise(const Ket &state, double p);

/// (1 - lambda) rho + (lambda / 3) (X rho X + Y rho Y + Z rho Z) on one qubit.
DensityMatrix depolarize(const DensityMatrix &rho, int qubit, double lambda);

/// White noise first, then each depolarizing channel.
DensityMatrix apply_noise(const Ket &state, const NoiseSpec &noise);

struct DensityBranchResult {
    std::map<int, int> outcomes;
    double probability = 0;
    DensityMatrix output_state = DensityMatrix::maximally_mixed(0);
    PauliFrame frame;

    int outcome(int qubit) const { return outcomes.at(qubit); }
};

/// Density-matrix analogue of run_pattern in enumerate (or forced) mode.
std::vector<DensityBranchResult> run_pattern_dm(const DensityMatrix &rho, const Pattern &pattern,
                                                const RunMode &mode = EnumerateMode{});

DensityMatrix apply_frame(const DensityMatrix &output, const PauliFrame &frame);

}  // namespace oneway

#endif  // ONEWAY_NOISE_H
