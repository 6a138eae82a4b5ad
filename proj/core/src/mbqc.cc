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

#include "oneway/mbqc.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "oneway/pauli.h"
#include "pattern_walk.h"

namespace oneway {

namespace {

double wrap_angle(double a) { return std::remainder(a, 2 * std::numbers::pi); }

bool same_angle(double a, double b) { return std::abs(wrap_angle(a - b)) < 1e-9; }

std::vector<int> symmetric_difference(std::vector<int> a, std::vector<int> b) {
    std::multiset<int> counts(a.begin(), a.end());
    counts.insert(b.begin(), b.end());
    std::vector<int> out;
    for (auto it = counts.begin(); it != counts.end(); it = counts.upper_bound(*it)) {
        if (counts.count(*it) % 2 == 1) {
            out.push_back(*it);
        }
    }
    return out;
}

int parity_of(const std::vector<int> &qubits, const std::map<int, int> &outcomes) {
    int p = 0;
    for (int q : qubits) {
        p ^= outcomes.at(q);
    }
    return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string_view plane_name(Plane plane) { return plane == Plane::kZ ? "z_basis" : "equatorial"; }

Plane parse_plane(std::string_view name) {
    if (name == "equatorial") return Plane::kEquatorial;
    if (name == "z_basis" || name == "z") return Plane::kZ;
    throw std::invalid_argument("unknown measurement plane '" + std::string(name) + "'");
}

double MeasurementSpec::effective_angle(int parity) const { return parity ? -angle : angle; }

Ket MeasurementSpec::basis_ket(int outcome, int parity) const {
    if (plane == Plane::kZ) {
        return outcome ? kets::one() : kets::zero();
    }
    return kets::equatorial(effective_angle(parity), outcome);
}

void Pattern::validate() const {
    int n = n_qubits();
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("pattern qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::vector<int> role(n + 1, 0);  // 0 unseen, 1 measured, 2 output
    std::vector<bool> measured_before(n + 1, false);
    auto claim = [&](int q, int r) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("pattern references qubit " + std::to_string(q) + " outside 1.." +
                                        std::to_string(n));
        }
        if (role[q] != 0) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " appears more than once in the pattern");
        }
        role[q] = r;
    };
    for (const auto &step : steps) {
        claim(step.qubit, 1);
        if (step.plane == Plane::kZ && !step.sign_deps.empty()) {
            throw std::invalid_argument("z_basis measurements cannot carry sign dependencies");
        }
        for (int dep : step.sign_deps) {
            if (dep < 1 || dep > n || !measured_before[dep]) {
                throw std::invalid_argument("sign dependency of qubit " + std::to_string(step.qubit) +
                                            " must reference an earlier measurement");
            }
        }
        measured_before[step.qubit] = true;
    }
    for (int q : outputs) {
        claim(q, 2);
    }
    for (const auto &[q, rule] : byproducts) {
        if (q < 1 || q > n || role[q] != 2) {
            throw std::invalid_argument("byproduct rule attached to non-output qubit " + std::to_string(q));
        }
        for (const auto *set : {&rule.x, &rule.z}) {
            for (int m : *set) {
                if (m < 1 || m > n || role[m] != 1) {
                    throw std::invalid_argument("byproduct rule references unmeasured qubit " + std::to_string(m));
                }
            }
        }
    }
}

bool PauliFrame::is_identity() const {
    for (const auto &e : entries) {
        if (e.x || e.z) {
            return false;
        }
    }
    return true;
}

PauliFrame frame_for(const Pattern &pattern, const std::map<int, int> &outcomes) {
    PauliFrame frame;
    for (int q : pattern.outputs) {
        FrameEntry e{q, 0, 0};
        auto it = pattern.byproducts.find(q);
        if (it != pattern.byproducts.end()) {
            e.x = parity_of(it->second.x, outcomes);
            e.z = parity_of(it->second.z, outcomes);
        }
        frame.entries.push_back(e);
    }
    return frame;
}

Ket apply_frame(const Ket &output, const PauliFrame &frame) {
    if (static_cast<int>(frame.entries.size()) != output.n_qubits()) {
        throw std::invalid_argument("Pauli frame arity does not match the output state");
    }
    Ket out = output;
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

double shot_uniform(std::uint64_t seed, std::uint64_t shot, std::uint64_t draw) {
    std::uint64_t x = splitmix64(splitmix64(seed ^ splitmix64(shot)) + draw);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t seed,
                                         std::uint64_t shots) {
    if (probabilities.empty()) {
        throw std::invalid_argument("cannot sample from an empty distribution");
    }
    if (shots == 0) {
        throw std::invalid_argument("sample mode needs at least one shot");
    }
    std::vector<double> cumulative;
    double total = 0;
    for (double p : probabilities) {
        if (!(p >= 0)) {
            throw std::invalid_argument("probabilities must be non-negative");
        }
        total += p;
        cumulative.push_back(total);
    }
    if (!(total > 0)) {
        throw std::invalid_argument("probabilities sum to zero");
    }
    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; shot++) {
        double u = shot_uniform(seed, shot, 0) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto k = std::min<std::size_t>(it - cumulative.begin(), counts.size() - 1);
        counts[k]++;
    }
    return counts;
}

std::vector<BranchResult> run_pattern(const Ket &state, const Pattern &pattern, const RunMode &mode) {
    auto projector = [](const Ket &s, int pos, const Ket &b) { return project_out(s, pos, b); };
    internal::PatternWalker<Ket, decltype(projector)> walker(pattern, projector);

    std::vector<BranchResult> branches;
    std::vector<std::uint64_t> leaf_index;
    auto collect = [&](const std::vector<int> &bits, double prob, const Ket &out) {
        BranchResult b;
        std::uint64_t index = 0;
        for (std::size_t k = 0; k < bits.size(); k++) {
            b.outcomes[pattern.steps[k].qubit] = bits[k];
            index = (index << 1) | static_cast<std::uint64_t>(bits[k]);
        }
        b.probability = prob;
        b.output_state = out;
        b.frame = frame_for(pattern, b.outcomes);
        branches.push_back(std::move(b));
        leaf_index.push_back(index);
    };

    if (const auto *force = std::get_if<ForceMode>(&mode)) {
        for (int bit : force->bits) {
            if (bit != 0 && bit != 1) {
                throw std::invalid_argument("forced outcomes must be 0 or 1");
            }
        }
        walker.walk(state, &force->bits, collect);
        return branches;
    }
    walker.walk(state, nullptr, collect);
    if (std::holds_alternative<EnumerateMode>(mode)) {
        return branches;
    }

    const auto &sample = std::get<SampleMode>(mode);
    if (sample.shots == 0) {
        throw std::invalid_argument("sample mode needs at least one shot");
    }
    std::size_t depth = pattern.steps.size();
    std::size_t n_leaves = std::size_t{1} << depth;
    // Heap-ordered probability tree: node k has children 2k, 2k+1.
    std::vector<double> tree(2 * n_leaves, 0.0);
    std::vector<int> slot(n_leaves, -1);
    for (std::size_t b = 0; b < branches.size(); b++) {
        tree[n_leaves + leaf_index[b]] = branches[b].probability;
        slot[leaf_index[b]] = static_cast<int>(b);
    }
    for (std::size_t k = n_leaves - 1; k >= 1; k--) {
        tree[k] = tree[2 * k] + tree[2 * k + 1];
    }
    for (std::uint64_t shot = 0; shot < sample.shots; shot++) {
        std::size_t node = 1;
        for (std::size_t k = 0; k < depth; k++) {
            double p0 = tree[2 * node] / tree[node];
            node = shot_uniform(sample.seed, shot, k) < p0 ? 2 * node : 2 * node + 1;
        }
        branches[slot[node - n_leaves]].count++;
    }
    std::vector<BranchResult> hit;
    for (auto &b : branches) {
        if (b.count > 0) {
            hit.push_back(std::move(b));
        }
    }
    return hit;
}

MeasurementOutcome measure_equatorial(const Ket &state, int qubit, double angle, OutcomeChoice choice) {
    int outcome;
    if (choice.forced) {
        outcome = *choice.forced;
        if (outcome != 0 && outcome != 1) {
            throw std::invalid_argument("forced outcome must be 0 or 1");
        }
    } else {
        double p0 = project(state, qubit, kets::equatorial(angle, 0)).probability;
        outcome = choice.uniform < p0 ? 0 : 1;
    }
    auto proj = project(state, qubit, kets::equatorial(angle, outcome));
    if (!proj.collapsed) {
        throw ImpossibleBranchError("equatorial outcome " + std::to_string(outcome) + " on qubit " +
                                    std::to_string(qubit) + " has zero probability");
    }
    return {outcome, proj.probability, *proj.collapsed};
}

std::optional<MeasurementSpec> conjugate_measurement(const MeasurementSpec &spec, const Operator &u) {
    auto image_angle = [&](int parity) -> std::optional<MeasurementSpec> {
        auto b0 = spec.basis_ket(0, parity);
        Complex v0 = u(0, 0) * b0.amplitude(0) + u(0, 1) * b0.amplitude(1);
        Complex v1 = u(1, 0) * b0.amplitude(0) + u(1, 1) * b0.amplitude(1);
        MeasurementSpec out = spec;
        if (std::abs(v1) < 1e-9) {
            out.plane = Plane::kZ;
            out.angle = 0;
            out.sign_deps.clear();
            return out;
        }
        if (std::abs(std::abs(v0) - std::abs(v1)) < 1e-9) {
            out.plane = Plane::kEquatorial;
            out.angle = wrap_angle(-std::arg(v1 / v0));
            return out;
        }
        // Flipped Z or a basis off the equator.
        return std::nullopt;
    };
    auto base = image_angle(0);
    if (!base) {
        return std::nullopt;
    }
    if (!spec.sign_deps.empty()) {
        auto flipped = image_angle(1);
        if (base->plane != Plane::kEquatorial || !flipped || flipped->plane != Plane::kEquatorial ||
            !same_angle(flipped->angle, -base->angle)) {
            return std::nullopt;
        }
    }
    return base;
}

ByproductRule conjugate_byproduct(const ByproductRule &rule, const Operator &u) {
    const Operator locals[] = {u};
    auto image_x = PauliString::single(1, 1, Pauli::X).conjugated(locals).letter(1);
    auto image_z = PauliString::single(1, 1, Pauli::Z).conjugated(locals).letter(1);
    auto has_x = [](Pauli p) { return p == Pauli::X || p == Pauli::Y; };
    auto has_z = [](Pauli p) { return p == Pauli::Z || p == Pauli::Y; };
    ByproductRule out;
    out.x = symmetric_difference(has_x(image_x) ? rule.x : std::vector<int>{},
                                 has_x(image_z) ? rule.z : std::vector<int>{});
    out.z = symmetric_difference(has_z(image_x) ? rule.x : std::vector<int>{},
                                 has_z(image_z) ? rule.z : std::vector<int>{});
    return out;
}

Pattern conjugate_pattern(const Pattern &pattern, std::span<const Operator> locals) {
    pattern.validate();
    if (static_cast<int>(locals.size()) != pattern.n_qubits()) {
        throw std::invalid_argument("need one local unitary per pattern qubit");
    }
    Pattern out;
    out.outputs = pattern.outputs;
    for (const auto &step : pattern.steps) {
        auto lab = conjugate_measurement(step, locals[step.qubit - 1]);
        if (!lab) {
            throw std::invalid_argument("measurement of qubit " + std::to_string(step.qubit) +
                                        " has no equatorial or Z form in the transformed frame");
        }
        out.steps.push_back(*lab);
    }
    for (const auto &[q, rule] : pattern.byproducts) {
        out.byproducts[q] = conjugate_byproduct(rule, locals[q - 1]);
    }
    out.validate();
    return out;
}

}  // namespace oneway
