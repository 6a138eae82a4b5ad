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

#include "oneway/protocols.h"

#include <array>
#include <cmath>
#include <stdexcept>

namespace oneway {

namespace {

const GraphSpec &chain4() {
    static const GraphSpec kChain = GraphSpec::linear_chain(4);
    return kChain;
}

const Ket &chain4_state() {
    static const Ket kState = build_cluster(chain4());
    return kState;
}

RunMode mode_for(const std::optional<std::vector<int>> &filter) {
    if (filter) {
        return ForceMode{*filter};
    }
    return EnumerateMode{};
}

Ket superpose(const Ket &a, const Ket &b) {
    std::vector<Complex> amps(a.dim());
    for (std::size_t i = 0; i < a.dim(); i++) {
        amps[i] = a.amplitude(i) + b.amplitude(i);
    }
    return Ket::from_amplitudes(std::move(amps));
}

DensityMatrix noisy(const Ket &state, const NoiseSpec &noise) {
    if (noise.is_ideal()) {
        noise.validate(state.n_qubits());
        return DensityMatrix::from_ket(state);
    }
    return apply_noise(state, noise);
}

}  // namespace

Pattern rotation_pattern_computational(const RotationJob &job) {
    bool fixed = job.input == RotationInput::kFixedPlus;
    Pattern p;
    p.steps.push_back({1, Plane::kZ, 0, {}, "I"});
    p.steps.push_back({2, Plane::kEquatorial, job.alpha, {}, "II"});
    std::vector<int> deps;
    if (job.ff_enabled) {
        deps = fixed ? std::vector<int>{1, 2} : std::vector<int>{2};
    }
    p.steps.push_back({3, Plane::kEquatorial, job.beta, deps, "III"});
    p.outputs = {4};
    p.byproducts[4] = ByproductRule{{3}, fixed ? std::vector<int>{1, 2} : std::vector<int>{2}};
    p.validate();
    return p;
}

Pattern rotation_pattern(const RotationJob &job) {
    if (job.ordering != Ordering::kA && job.ordering != Ordering::kB) {
        throw std::invalid_argument("the rotation protocol uses ordering a or b");
    }
    const auto &u = ordering_map(job.ordering).local_unitaries;
    return conjugate_pattern(rotation_pattern_computational(job), u);
}

Ket rotation_state(Ordering ordering) { return to_lab_logical(chain4_state(), ordering_map(ordering)); }

Ket rotation_reference(double alpha, double beta, int s1, int s2, int s3, Ordering ordering, RotationInput input) {
    if (ordering != Ordering::kA && ordering != Ordering::kB) {
        throw std::invalid_argument("the rotation protocol uses ordering a or b");
    }
    bool fixed = input == RotationInput::kFixedPlus;
    Ket out = (s1 && !fixed) ? kets::minus() : kets::plus();
    int x_exp = fixed ? (s1 ^ s2) : s2;
    out = apply_1q(out, gates::rz(alpha), 1);
    out = apply_1q(out, gates::rx(beta), 1);
    out = apply_1q(out, gates::hadamard(), 1);
    if (ordering == Ordering::kB) {
        out = apply_1q(out, gates::pauli_z(), 1);
    }
    if (x_exp) {
        out = apply_1q(out, gates::pauli_x(), 1);
    }
    if (s3) {
        out = apply_1q(out, gates::pauli_z(), 1);
    }
    return out;
}

double RotationReport::mean_fidelity(bool ff) const {
    double num = 0;
    double den = 0;
    for (const auto &b : branches) {
        num += b.probability * b.fidelity(ff);
        den += b.probability;
    }
    return den > 0 ? num / den : 0;
}

RotationReport run_rotation(const RotationJob &job, const NoiseSpec &noise) {
    auto pattern = rotation_pattern(job);
    auto rho = noisy(rotation_state(job.ordering), noise);
    bool fixed = job.input == RotationInput::kFixedPlus;
    RotationReport report{job, {}};
    for (auto &branch : run_pattern_dm(rho, pattern, mode_for(job.branch_filter))) {
        int s1 = branch.outcome(1);
        auto reference = rotation_reference(job.alpha, job.beta, fixed ? 0 : s1, 0, 0, job.ordering, job.input);
        RotationBranch row;
        row.outcomes = branch.outcomes;
        row.probability = branch.probability;
        row.frame = branch.frame;
        row.fidelity_ff_off = fidelity_dm(branch.output_state, reference);
        row.fidelity_ff_on = fidelity_dm(apply_frame(branch.output_state, branch.frame), reference);
        report.branches.push_back(std::move(row));
    }
    return report;
}

std::string_view control_prep_name(ControlPrep o) { return o == ControlPrep::kHadamard ? "h" : "id"; }

ControlPrep parse_control_prep(std::string_view name) {
    if (name == "h" || name == "H") return ControlPrep::kHadamard;
    if (name == "id" || name == "I" || name == "identity") return ControlPrep::kIdentity;
    throw std::invalid_argument("unknown control operator '" + std::string(name) + "' (expected id or h)");
}

Pattern cnot_pattern(const CnotJob &job) {
    Pattern p;
    if (job.o == ControlPrep::kIdentity) {
        p.steps.push_back({1, Plane::kZ, 0, {}, "control-z"});
    } else {
        p.steps.push_back({1, Plane::kEquatorial, 0, {}, "control-x"});
    }
    p.steps.push_back({4, Plane::kEquatorial, job.alpha, {}, "target"});
    p.outputs = {2, 3};
    p.byproducts[2] = ByproductRule{{}, {4}};
    p.byproducts[3] = ByproductRule{{4}, {}};
    p.validate();
    return p;
}

Ket cnot_reference(double alpha, ControlPrep o, int s1, int s4, bool compensated) {
    Ket control = s1 ? kets::minus() : kets::plus();
    if (o == ControlPrep::kHadamard) {
        control = apply_1q(control, gates::hadamard(), 1);
    }
    Ket target = apply_1q(kets::plus(), gates::rz(alpha), 1);
    Ket out = apply_2q(control.kron(target), gates::cnot(), 1, 2);
    out = apply_1q(out, gates::pauli_x(), 1);
    if (s4) {
        out = apply_1q(out, gates::pauli_z(), 1);
        out = apply_1q(out, gates::pauli_z(), 2);
    }
    if (!compensated) {
        out = apply_1q(out, gates::hadamard(), 2);
    }
    return out;
}

Ket cnot_to_lab(const Ket &output, bool compensated) {
    const auto &u = ordering_map(Ordering::kC).local_unitaries;
    Ket out = apply_1q(output, u[1], 1);
    out = apply_1q(out, u[2], 2);
    if (compensated) {
        out = apply_1q(out, gates::hadamard(), 2);
    }
    return out;
}

DensityMatrix cnot_to_lab(const DensityMatrix &output, bool compensated) {
    const auto &u = ordering_map(Ordering::kC).local_unitaries;
    DensityMatrix out = apply_1q(output, u[1], 1);
    out = apply_1q(out, u[2], 2);
    if (compensated) {
        out = apply_1q(out, gates::hadamard(), 2);
    }
    return out;
}

CnotReport run_cnot(const CnotJob &job, const NoiseSpec &noise) {
    auto pattern = cnot_pattern(job);
    auto rho = noisy(chain4_state(), noise);
    CnotReport report{job, {}};
    for (auto &branch : run_pattern_dm(rho, pattern, mode_for(job.branch_filter))) {
        int s1 = branch.outcome(1);
        int s4 = branch.outcome(4);
        auto lab = cnot_to_lab(branch.output_state, job.compensate_target_hadamard);
        auto reference = cnot_reference(job.alpha, job.o, s1, s4, job.compensate_target_hadamard);
        double joint = fidelity_dm(lab, reference);
        for (int c = 0; c < 2; c++) {
            const Ket readout = c ? kets::one() : kets::zero();
            auto expected = project_out(reference, 1, readout);
            if (!expected.collapsed) {
                continue;
            }
            CnotRow row{s1, s4, branch.probability, joint, c, 0, 0};
            auto observed = project_out(lab, 1, readout);
            row.readout_probability = observed.probability;
            if (observed.collapsed) {
                row.target_fidelity = fidelity_dm(*observed.collapsed, *expected.collapsed);
            }
            report.rows.push_back(row);
        }
    }
    return report;
}

Pattern cphase_pattern(const CphaseJob &job) {
    Pattern p;
    p.steps.push_back({1, Plane::kEquatorial, job.alpha, {}, "alpha"});
    p.steps.push_back({2, Plane::kEquatorial, job.beta, {1}, "beta"});
    p.outputs = {3, 4};
    p.byproducts[3] = ByproductRule{{2}, {1}};
    p.byproducts[4] = ByproductRule{{}, {2}};
    p.validate();
    return p;
}

Ket cphase_target(double alpha, double beta) {
    Ket phi = apply_1q(kets::plus(), gates::rz(alpha), 1);
    return apply_1q(phi, gates::rx(beta), 1);
}

Ket cphase_reference(double alpha, double beta, int s1, int s2) {
    Ket phi = cphase_target(alpha, beta);
    Ket x_phi = apply_1q(phi, gates::pauli_x(), 1);
    Ket xz_phi = apply_1q(apply_1q(phi, gates::pauli_z(), 1), gates::pauli_x(), 1);
    Ket out = superpose(kets::minus().kron(x_phi), kets::plus().kron(xz_phi));
    if (s1) {
        out = apply_1q(out, gates::pauli_z(), 2);
    }
    if (s2) {
        out = apply_1q(out, gates::pauli_x(), 2);
        out = apply_1q(out, gates::pauli_x(), 1);
    }
    return out;
}

namespace {
// Output qubits 3, 4 hold (k_B, k_A); lab reports list (k_A, k_B).
constexpr std::array<int, 2> kCphaseLabOrder{2, 1};
}  // namespace

Ket cphase_to_lab(const Ket &output) {
    const auto &u = ordering_map(Ordering::kD).local_unitaries;
    Ket out = apply_1q(output, u[2], 1);
    out = apply_1q(out, u[3], 2);
    return permute_qubits(out, kCphaseLabOrder);
}

DensityMatrix cphase_to_lab(const DensityMatrix &output) {
    const auto &u = ordering_map(Ordering::kD).local_unitaries;
    DensityMatrix out = apply_1q(output, u[2], 1);
    out = apply_1q(out, u[3], 2);
    return permute_qubits(out, kCphaseLabOrder);
}

PauliFrame cphase_lab_frame(const Pattern &pattern, const std::map<int, int> &outcomes) {
    const auto &u = ordering_map(Ordering::kD).local_unitaries;
    Pattern lab = pattern;
    for (auto &[q, rule] : lab.byproducts) {
        rule = conjugate_byproduct(rule, u[q - 1]);
    }
    auto frame = frame_for(lab, outcomes);
    return PauliFrame{{frame.entries[1], frame.entries[0]}};
}

CphaseReport run_cphase(const CphaseJob &job, const NoiseSpec &noise) {
    auto pattern = cphase_pattern(job);
    auto rho = noisy(chain4_state(), noise);
    Ket phi = cphase_target(job.alpha, job.beta);
    Ket target_plus = apply_1q(apply_1q(phi, gates::pauli_z(), 1), gates::pauli_x(), 1);
    Ket target_minus = apply_1q(phi, gates::pauli_x(), 1);
    Ket reference0 = cphase_reference(job.alpha, job.beta, 0, 0);

    CphaseReport report{job, {}};
    for (auto &branch : run_pattern_dm(rho, pattern, mode_for(job.branch_filter))) {
        CphaseRow row;
        row.s1 = branch.outcome(1);
        row.s2 = branch.outcome(2);
        row.branch_probability = branch.probability;
        auto lab = cphase_to_lab(branch.output_state);
        row.joint_fidelity = fidelity_dm(lab, cphase_reference(job.alpha, job.beta, row.s1, row.s2));
        auto corrected = apply_frame(lab, cphase_lab_frame(pattern, branch.outcomes));
        row.corrected_fidelity = fidelity_dm(corrected, reference0);
        auto plus = project_out(corrected, 1, kets::plus());
        row.readout_probability_plus = plus.probability;
        if (plus.collapsed) {
            row.target_fidelity_plus = fidelity_dm(*plus.collapsed, target_plus);
        }
        auto minus = project_out(corrected, 1, kets::minus());
        row.readout_probability_minus = minus.probability;
        if (minus.collapsed) {
            row.target_fidelity_minus = fidelity_dm(*minus.collapsed, target_minus);
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace oneway
