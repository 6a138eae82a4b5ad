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

#ifndef ONEWAY_MBQC_H
#define ONEWAY_MBQC_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oneway/statevec.h"

namespace oneway {

enum class Plane { kEquatorial, kZ };

std::string_view plane_name(Plane plane);
Plane parse_plane(std::string_view name);

/// One single-qubit measurement in a pattern.
///
/// Equatorial measurements project onto (|0> +- e^{-i phi}|1>)/sqrt(2) with
/// outcome 0 for '+'. The effective angle is (-1)^p * angle where p is the
/// parity of the outcomes of the qubits in `sign_deps`. Z measurements ignore
/// the angle and must have no dependencies.
struct MeasurementSpec {
    int qubit = 0;
    Plane plane = Plane::kEquatorial;
    double angle = 0;
    std::vector<int> sign_deps;
    std::string label;

    double effective_angle(int parity) const;
    /// Basis ket selected by `outcome` given the dependency parity.
    Ket basis_ket(int outcome, int parity) const;
};

/// Byproduct X^{parity(x)} Z^{parity(z)} left on an output qubit.
struct ByproductRule {
    std::vector<int> x;
    std::vector<int> z;
};

struct Pattern {
    std::vector<MeasurementSpec> steps;
    /// Unmeasured qubits, in the order the output state lists them.
    std::vector<int> outputs;
    std::map<int, ByproductRule> byproducts;

    int n_qubits() const { return static_cast<int>(steps.size() + outputs.size()); }
    /// Throws std::invalid_argument when steps and outputs do not partition
    /// 1..n, a dependency looks forward, a Z step has dependencies, or a
    /// byproduct rule mentions an unmeasured qubit.
    void validate() const;
};

struct FrameEntry {
    int qubit = 0;
    int x = 0;
    int z = 0;

    bool operator==(const FrameEntry &) const = default;
};

/// Pauli-frame exponents, one entry per output qubit in pattern output order.
struct PauliFrame {
    std::vector<FrameEntry> entries;

    bool is_identity() const;
    bool operator==(const PauliFrame &) const = default;
};

struct BranchResult {
    /// qubit -> outcome bit
    std::map<int, int> outcomes;
    double probability = 0;
    Ket output_state{0};
    PauliFrame frame;
    /// Shots that landed on this branch (sample mode only).
    std::uint64_t count = 0;

    int outcome(int qubit) const { return outcomes.at(qubit); }
};

struct EnumerateMode {};
struct SampleMode {
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
};
/// Outcome bits in pattern step order.
struct ForceMode {
    std::vector<int> bits;
};
using RunMode = std::variant<EnumerateMode, SampleMode, ForceMode>;

/// Executes the pattern. Branches come back in lexicographic order of their
/// outcome bits (step order). Enumerate returns every branch with
/// probability >= kZeroProbability; sample returns the branches that received
/// shots (at least one), with `count` filled in; force returns the single requested branch
/// or throws ImpossibleBranchError.
std::vector<BranchResult> run_pattern(const Ket &state, const Pattern &pattern, const RunMode &mode = EnumerateMode{});

/// Frame exponents for the given outcomes.
PauliFrame frame_for(const Pattern &pattern, const std::map<int, int> &outcomes);

/// Applies sigma_x^x then sigma_z^z to each output qubit. Entry k acts on
/// qubit k+1 of `output`.
Ket apply_frame(const Ket &output, const PauliFrame &frame);

struct OutcomeChoice {
    std::optional<int> forced;
    double uniform = 0;

    static OutcomeChoice force(int bit) { return {bit, 0}; }
    /// Outcome 0 when uniform < P(0).
    static OutcomeChoice sample(double uniform) { return {std::nullopt, uniform}; }
};

struct MeasurementOutcome {
    int outcome;
    double probability;
    Ket collapsed;
};

/// Projects onto |angle_+> (s = 0) or |angle_-> (s = 1), keeping all qubits.
MeasurementOutcome measure_equatorial(const Ket &state, int qubit, double angle, OutcomeChoice choice);

/// Uniform double in [0, 1) for (seed, shot, draw); a pure function of its
/// arguments so shot streams do not depend on execution order.
double shot_uniform(std::uint64_t seed, std::uint64_t shot, std::uint64_t draw);

/// Multinomial counts over a fixed list of outcome probabilities, one
/// shot_uniform draw per shot. Probabilities are renormalized by their sum.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t seed,
                                         std::uint64_t shots);

/// Re-expresses a measurement for a qubit whose state was transformed by `u`:
/// the returned spec measures in the basis {u|b_0>, u|b_1>} with outcome labels
/// preserved. Empty when that basis is neither Z nor equatorial, or when the
/// sign adaptivity would not survive the change of frame.
std::optional<MeasurementSpec> conjugate_measurement(const MeasurementSpec &spec, const Operator &u);

/// u X^a Z^b u^dagger expressed as a byproduct rule (up to sign).
ByproductRule conjugate_byproduct(const ByproductRule &rule, const Operator &u);

/// Applies conjugate_measurement/conjugate_byproduct qubit by qubit; `locals`
/// holds one unitary per qubit. Throws std::invalid_argument when some basis
/// is not expressible.
Pattern conjugate_pattern(const Pattern &pattern, std::span<const Operator> locals);

}  // namespace oneway

#endif  // ONEWAY_MBQC_H
