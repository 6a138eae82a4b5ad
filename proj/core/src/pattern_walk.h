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

#ifndef ONEWAY_PATTERN_WALK_H
#define ONEWAY_PATTERN_WALK_H

#include <algorithm>
#include <functional>
#include <vector>

#include "oneway/mbqc.h"

namespace oneway::internal {

/// Depth-first walk over the measurement tree of a pattern. Works for any state
/// type with a `project_out(state, position, ket)` overload. Leaves are visited
/// in lexicographic order of their outcome bits.
template <typename State, typename Projector>
class PatternWalker {
   public:
    using Leaf = std::function<void(const std::vector<int> &bits, double probability, const State &output)>;

    PatternWalker(const Pattern &pattern, Projector project) : pattern_(pattern), project_(std::move(project)) {
        pattern_.validate();
        int n = pattern_.n_qubits();
        step_of_.assign(n + 1, -1);
        for (std::size_t k = 0; k < pattern_.steps.size(); k++) {
            step_of_[pattern_.steps[k].qubit] = static_cast<int>(k);
        }
    }

    /// `forced` (when non-null) pins the outcome of every step.
    void walk(const State &state, const std::vector<int> *forced, const Leaf &leaf) const {
        if (state.n_qubits() != pattern_.n_qubits()) {
            throw std::invalid_argument("pattern expects " + std::to_string(pattern_.n_qubits()) +
                                        " qubits but the state has " + std::to_string(state.n_qubits()));
        }
        if (forced && forced->size() != pattern_.steps.size()) {
            throw std::invalid_argument("forced outcome list must have one bit per measurement step");
        }
        std::vector<int> remaining(pattern_.n_qubits());
        for (int q = 1; q <= pattern_.n_qubits(); q++) {
            remaining[q - 1] = q;
        }
        std::vector<int> bits;
        recurse(state, remaining, bits, 1.0, forced, leaf);
    }

    int parity(const MeasurementSpec &spec, const std::vector<int> &bits) const {
        int p = 0;
        for (int dep : spec.sign_deps) {
            p ^= bits[step_of_[dep]];
        }
        return p;
    }

   private:
    void recurse(const State &state, const std::vector<int> &remaining, std::vector<int> &bits, double prob,
                 const std::vector<int> *forced, const Leaf &leaf) const {
        std::size_t k = bits.size();
        if (k == pattern_.steps.size()) {
            leaf(bits, prob, reorder(state, remaining));
            return;
        }
        const auto &spec = pattern_.steps[k];
        int pos = static_cast<int>(std::lower_bound(remaining.begin(), remaining.end(), spec.qubit) - remaining.begin()) + 1;
        std::vector<int> next_remaining = remaining;
        next_remaining.erase(next_remaining.begin() + (pos - 1));
        int p = parity(spec, bits);
        for (int s = 0; s < 2; s++) {
            if (forced && (*forced)[k] != s) {
                continue;
            }
            auto proj = project_(state, pos, spec.basis_ket(s, p));
            if (!proj.collapsed) {
                if (forced) {
                    throw ImpossibleBranchError("forced outcome " + std::to_string(s) + " on qubit " +
                                                std::to_string(spec.qubit) + " has zero probability");
                }
                continue;
            }
            bits.push_back(s);
            recurse(*proj.collapsed, next_remaining, bits, prob * proj.probability, forced, leaf);
            bits.pop_back();
        }
    }

    // Remaining qubits are in ascending order; outputs may list them otherwise.
    State reorder(const State &state, const std::vector<int> &remaining) const {
        const auto &outs = pattern_.outputs;
        if (std::is_sorted(outs.begin(), outs.end())) {
            return state;
        }
        std::vector<int> order;
        for (int q : outs) {
            order.push_back(static_cast<int>(std::lower_bound(remaining.begin(), remaining.end(), q) - remaining.begin()) + 1);
        }
        return permute_qubits(state, order);
    }

    const Pattern &pattern_;
    Projector project_;
    std::vector<int> step_of_;
};

}  // namespace oneway::internal

#endif  // ONEWAY_PATTERN_WALK_H
