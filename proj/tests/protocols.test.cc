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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace oneway;
using oneway::testing::same_amplitudes;
using oneway::testing::same_ray;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR = 1 / std::sqrt(2.0);

double wrap(double angle) { return std::remainder(angle, 2 * kPi); }

}  // namespace

TEST(rotation, computational_pattern_shape) {
    RotationJob job{0.3, 0.8, Ordering::kA, true, RotationInput::kFromFirstOutcome, std::nullopt};
    auto p = rotation_pattern_computational(job);
    ASSERT_EQ(p.steps.size(), 3u);
    ASSERT_EQ(p.steps[0].plane, Plane::kZ);
    ASSERT_EQ(p.steps[1].angle, 0.3);
    ASSERT_EQ(p.steps[2].angle, 0.8);
    ASSERT_EQ(p.steps[2].sign_deps, (std::vector<int>{2}));
    ASSERT_EQ(p.outputs, (std::vector<int>{4}));
    ASSERT_EQ(p.byproducts.at(4).x, (std::vector<int>{3}));
    ASSERT_EQ(p.byproducts.at(4).z, (std::vector<int>{2}));

    job.ff_enabled = false;
    ASSERT_TRUE(rotation_pattern_computational(job).steps[2].sign_deps.empty());
    job.ff_enabled = true;
    job.input = RotationInput::kFixedPlus;
    auto fixed = rotation_pattern_computational(job);
    ASSERT_EQ(fixed.steps[2].sign_deps, (std::vector<int>{1, 2}));
    ASSERT_EQ(fixed.byproducts.at(4).z, (std::vector<int>{1, 2}));
}

TEST(rotation, lab_pattern_bases) {
    double a = 0.3, b = 0.8;
    // Ordering a: k_B in |+->, k_A at alpha + pi (the |alpha_-+> basis), pi_A at beta.
    auto pa = rotation_pattern(RotationJob{a, b, Ordering::kA, true, RotationInput::kFromFirstOutcome, std::nullopt});
    ASSERT_EQ(pa.steps[0].plane, Plane::kEquatorial);
    ASSERT_NEAR(wrap(pa.steps[0].angle), 0, 1e-12);
    ASSERT_NEAR(wrap(pa.steps[1].angle - (a + kPi)), 0, 1e-12);
    ASSERT_NEAR(wrap(pa.steps[2].angle - b), 0, 1e-12);
    ASSERT_EQ(pa.steps[2].sign_deps, (std::vector<int>{2}));
    // Output under H: X and Z exponents swap.
    ASSERT_EQ(pa.byproducts.at(4).x, (std::vector<int>{2}));
    ASSERT_EQ(pa.byproducts.at(4).z, (std::vector<int>{3}));

    // Ordering b: pi_B in |+->, pi_A at alpha + pi, k_A at -beta.
    auto pb = rotation_pattern(RotationJob{a, b, Ordering::kB, true, RotationInput::kFromFirstOutcome, std::nullopt});
    ASSERT_NEAR(wrap(pb.steps[0].angle), 0, 1e-12);
    ASSERT_NEAR(wrap(pb.steps[1].angle - (a + kPi)), 0, 1e-12);
    ASSERT_NEAR(wrap(pb.steps[2].angle + b), 0, 1e-12);

    ASSERT_THROW(rotation_pattern(RotationJob{a, b, Ordering::kC, true, RotationInput::kFromFirstOutcome, std::nullopt}),
                 std::invalid_argument);
}

TEST(rotation, reference_examples) {
    ASSERT_TRUE(same_ray(rotation_reference(0, 0, 0, 0, 0, Ordering::kA), kets::zero()));
    ASSERT_TRUE(same_ray(rotation_reference(0, 0, 0, 0, 0, Ordering::kB), kets::zero()));
    // Oracle: H R_z(pi/2)|+> = (1, -i)/sqrt 2 up to phase.
    auto r = rotation_reference(kPi / 2, 0, 0, 0, 0, Ordering::kA);
    ASSERT_TRUE(same_ray(r, Ket::from_amplitudes({kR, Complex(0, -kR)})));
    // s1 selects |->.
    ASSERT_TRUE(same_ray(rotation_reference(0, 0, 1, 0, 0, Ordering::kA), kets::one()));
    ASSERT_THROW(rotation_reference(0, 0, 0, 0, 0, Ordering::kD), std::invalid_argument);
}

TEST(rotation, ideal_branches_all_correct_with_feed_forward) {
    for (auto o : {Ordering::kA, Ordering::kB}) {
        RotationJob job{kPi / 4, kPi / 3, o, true, RotationInput::kFromFirstOutcome, std::nullopt};
        auto report = run_rotation(job);
        ASSERT_EQ(report.branches.size(), 8u);
        for (const auto &b : report.branches) {
            ASSERT_NEAR(b.fidelity_ff_on, 1, 1e-10);
            ASSERT_NEAR(b.probability, 0.125, 1e-12);
        }
    }
}

TEST(rotation, no_feed_forward_overlaps) {
    // alpha = beta = 0: the sigma_x branch is orthogonal, the sigma_z branch is not.
    auto zero = run_rotation(RotationJob{0, 0, Ordering::kA, true, RotationInput::kFromFirstOutcome, std::nullopt});
    for (const auto &b : zero.branches) {
        double expected = b.s(2) ? 0.0 : 1.0;
        ASSERT_NEAR(b.fidelity_ff_off, expected, 1e-12);
    }
    // alpha = pi/4, beta = pi/3, numpy oracle for (s2, s3) = 00, 01, 10, 11.
    const double oracle[2][2] = {{1.0, 0.5}, {0.375, 0.125}};
    for (auto o : {Ordering::kA, Ordering::kB}) {
        auto r = run_rotation(RotationJob{kPi / 4, kPi / 3, o, true, RotationInput::kFromFirstOutcome, std::nullopt});
        for (const auto &b : r.branches) {
            ASSERT_NEAR(b.fidelity_ff_off, oracle[b.s(2)][b.s(3)], 1e-12);
        }
    }
}

TEST(rotation, forced_branch) {
    RotationJob job{0.2, 0.4, Ordering::kA, true, RotationInput::kFromFirstOutcome, std::vector<int>{1, 0, 1}};
    auto r = run_rotation(job);
    ASSERT_EQ(r.branches.size(), 1u);
    ASSERT_EQ(r.branches[0].s(1), 1);
    ASSERT_EQ(r.branches[0].s(3), 1);
    ASSERT_NEAR(r.branches[0].fidelity_ff_on, 1, 1e-10);
}

TEST(rotation, fixed_plus_input_reaches_the_plus_reference) {
    for (auto o : {Ordering::kA, Ordering::kB}) {
        RotationJob job{1.1, -0.6, o, true, RotationInput::kFixedPlus, std::nullopt};
        auto pattern = rotation_pattern(job);
        auto branches = run_pattern(rotation_state(o), pattern);
        Ket target = rotation_reference(1.1, -0.6, 0, 0, 0, o);
        for (const auto &b : branches) {
            ASSERT_TRUE(same_ray(apply_frame(b.output_state, b.frame), target));
            ASSERT_TRUE(same_ray(b.output_state,
                                 rotation_reference(1.1, -0.6, b.outcome(1), b.outcome(2), b.outcome(3), o,
                                                    RotationInput::kFixedPlus)));
        }
    }
}

TEST(rotation, orderings_differ_by_sigma_z) {
    RotationJob a{0.9, 2.2, Ordering::kA, true, RotationInput::kFromFirstOutcome, std::nullopt};
    RotationJob b = a;
    b.ordering = Ordering::kB;
    auto ba = run_pattern(rotation_state(Ordering::kA), rotation_pattern(a));
    auto bb = run_pattern(rotation_state(Ordering::kB), rotation_pattern(b));
    ASSERT_EQ(ba.size(), bb.size());
    for (std::size_t k = 0; k < ba.size(); k++) {
        auto ca = apply_frame(ba[k].output_state, ba[k].frame);
        auto cb = apply_frame(bb[k].output_state, bb[k].frame);
        ASSERT_TRUE(same_ray(apply_1q(ca, gates::pauli_z(), 1), cb));
    }
}

TEST(cnot, pattern_shape) {
    auto h = cnot_pattern(CnotJob{0.5, ControlPrep::kHadamard, true, std::nullopt});
    ASSERT_EQ(h.steps[0].qubit, 1);
    ASSERT_EQ(h.steps[0].plane, Plane::kEquatorial);
    ASSERT_EQ(h.steps[0].angle, 0);
    ASSERT_EQ(h.steps[1].qubit, 4);
    ASSERT_EQ(h.steps[1].angle, 0.5);
    ASSERT_EQ(h.outputs, (std::vector<int>{2, 3}));
    auto id = cnot_pattern(CnotJob{0.5, ControlPrep::kIdentity, true, std::nullopt});
    ASSERT_EQ(id.steps[0].plane, Plane::kZ);
    ASSERT_EQ(parse_control_prep("id"), ControlPrep::kIdentity);
    ASSERT_THROW(parse_control_prep("x"), std::invalid_argument);
}

TEST(cnot, reference_examples) {
    // Oracle: X_c CNOT(|0> (x) R_z(pi/2)|+>) = |1> (x) (1 - i, 1 + i)/2. With O = I the
    // control is in |+>, so this is the branch where the control reads |1>.
    auto id_ref = cnot_reference(kPi / 2, ControlPrep::kIdentity, 0, 0);
    auto id_one = project_out(id_ref, 1, kets::one());
    ASSERT_NEAR(id_one.probability, 0.5, 1e-12);
    ASSERT_TRUE(same_ray(kets::one().kron(id_one.state()),
                         Ket::from_amplitudes({0, 0, Complex(0.5, -0.5), Complex(0.5, 0.5)})));
    // Oracle for O = H, s1 = 0, alpha = pi/4.
    ASSERT_TRUE(same_ray(cnot_reference(kPi / 4, ControlPrep::kHadamard, 0, 0),
                         Ket::from_amplitudes({0, 0, Complex(0.653281482438188, -0.270598050073098),
                                               Complex(0.653281482438188, 0.270598050073098)}),
                         1e-12));
    // O = H, s1 = 0: control |1>_c for any alpha.
    for (double a : {0.0, 0.3, kPi / 2, kPi / 4}) {
        for (int s4 = 0; s4 < 2; s4++) {
            auto ref = cnot_reference(a, ControlPrep::kHadamard, 0, s4);
            ASSERT_NEAR(project_out(ref, 1, kets::one()).probability, 1, 1e-12);
            ref = cnot_reference(a, ControlPrep::kHadamard, 1, s4);
            ASSERT_NEAR(project_out(ref, 1, kets::zero()).probability, 1, 1e-12);
        }
    }
}

TEST(cnot, every_branch_matches_the_reference) {
    for (auto o : {ControlPrep::kHadamard, ControlPrep::kIdentity}) {
        for (double a : {kPi / 2, kPi / 4, 1.234}) {
            for (bool comp : {true, false}) {
                auto report = run_cnot(CnotJob{a, o, comp, std::nullopt});
                double total = 0;
                int last = -1;
                for (const auto &row : report.rows) {
                    ASSERT_NEAR(row.joint_fidelity, 1, 1e-10);
                    ASSERT_NEAR(row.target_fidelity, 1, 1e-10);
                    if (row.s1 * 2 + row.s4 != last) {
                        total += row.branch_probability;
                        last = row.s1 * 2 + row.s4;
                    }
                }
                ASSERT_NEAR(total, 1, 1e-12);
            }
        }
    }
}

TEST(cnot, control_readout_rows) {
    auto h = run_cnot(CnotJob{kPi / 2, ControlPrep::kHadamard, true, std::nullopt});
    ASSERT_EQ(h.rows.size(), 4u);
    for (const auto &row : h.rows) {
        ASSERT_EQ(row.control_readout, 1 - row.s1);
        ASSERT_NEAR(row.readout_probability, 1, 1e-12);
    }
    auto id = run_cnot(CnotJob{kPi / 4, ControlPrep::kIdentity, true, std::nullopt});
    ASSERT_EQ(id.rows.size(), 8u);
    for (const auto &row : id.rows) {
        ASSERT_NEAR(row.readout_probability, 0.5, 1e-12);
    }
}

TEST(cnot, superposed_control_entangles) {
    // O = I leaves the control in |+-> before the C-NOT; an equatorial target
    // off the X axis makes the output entangled.
    auto ref = cnot_reference(kPi / 2, ControlPrep::kIdentity, 0, 0);
    std::vector<int> keep{1};
    double purity = partial_trace(DensityMatrix::from_ket(ref), keep).purity();
    ASSERT_LT(purity, 1 - 1e-6);
    ASSERT_NEAR(purity, 0.5, 1e-12);
    auto branches = run_pattern(build_cluster(GraphSpec::linear_chain(4)),
                                cnot_pattern(CnotJob{kPi / 2, ControlPrep::kIdentity, true, std::nullopt}));
    for (const auto &b : branches) {
        ASSERT_LT(partial_trace(DensityMatrix::from_ket(b.output_state), keep).purity(), 1 - 1e-6);
    }
}

TEST(cphase, pattern_shape) {
    auto p = cphase_pattern(CphaseJob{0.4, 0.9, std::nullopt});
    ASSERT_EQ(p.steps[0].angle, 0.4);
    ASSERT_EQ(p.steps[1].angle, 0.9);
    ASSERT_EQ(p.steps[1].sign_deps, (std::vector<int>{1}));
    ASSERT_EQ(p.outputs, (std::vector<int>{3, 4}));
}

TEST(cphase, reference_at_zero_angles) {
    // Oracle: (|->|+> - |+>|->)/sqrt 2 = (|01> - |10>)/sqrt 2.
    ASSERT_TRUE(same_amplitudes(cphase_reference(0, 0, 0, 0), {0, kR, -kR, 0}, 1e-12));
}

TEST(cphase, reference_identity_with_the_equivalent_circuit) {
    // The normalized two-term state equals (ZH (x) X) CZ (|+> (x) |Phi>). With
    // a bare H on the control the two are not parallel (oracle overlap 0.6207
    // at alpha = 0.7, beta = -1.3).
    auto circuit = [](double a, double b, const Operator &control) {
        Ket s = apply_cz(kets::plus().kron(cphase_target(a, b)), 1, 2);
        s = apply_1q(s, control, 1);
        return apply_1q(s, gates::pauli_x(), 2);
    };
    for (int trial = 0; trial < 50; trial++) {
        double a = 0.37 * trial - 3, b = 1.7 - 0.23 * trial;
        ASSERT_TRUE(same_ray(cphase_reference(a, b, 0, 0), circuit(a, b, gates::pauli_z() * gates::hadamard())));
    }
    ASSERT_NEAR(std::abs(inner(cphase_reference(0.7, -1.3, 0, 0), circuit(0.7, -1.3, gates::hadamard()))),
                0.6207412257284101, 1e-12);
}

TEST(cphase, every_branch_matches_the_reference) {
    for (int i = 0; i < 8; i++) {
        for (int j = 0; j < 8; j++) {
            CphaseJob job{2 * kPi * i / 8, 2 * kPi * j / 8, std::nullopt};
            auto report = run_cphase(job);
            ASSERT_EQ(report.rows.size(), 4u);
            for (const auto &row : report.rows) {
                ASSERT_NEAR(row.joint_fidelity, 1, 1e-10);
                ASSERT_NEAR(row.corrected_fidelity, 1, 1e-10);
                ASSERT_NEAR(row.target_fidelity_plus, 1, 1e-10);
                ASSERT_NEAR(row.target_fidelity_minus, 1, 1e-10);
                ASSERT_NEAR(row.readout_probability_plus + row.readout_probability_minus, 1, 1e-12);
            }
        }
    }
}

TEST(cphase, lab_frame_exponents) {
    auto p = cphase_pattern(CphaseJob{0.1, 0.2, std::nullopt});
    // X^{s2} on k_A; X^{s2} Z^{s1} on k_B.
    auto f = cphase_lab_frame(p, {{1, 1}, {2, 1}});
    ASSERT_EQ(f.entries[0].x, 1);
    ASSERT_EQ(f.entries[0].z, 0);
    ASSERT_EQ(f.entries[1].x, 1);
    ASSERT_EQ(f.entries[1].z, 1);
    auto g = cphase_lab_frame(p, {{1, 1}, {2, 0}});
    ASSERT_EQ(g.entries[0].x + g.entries[0].z, 0);
    ASSERT_EQ(g.entries[1].x, 0);
    ASSERT_EQ(g.entries[1].z, 1);
}

TEST(cphase, white_noise_is_monotone) {
    double previous = 0;
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        auto report = run_cphase(CphaseJob{0.5, 1.0, std::nullopt}, NoiseSpec{p, {}});
        double f = 0;
        for (const auto &row : report.rows) f += row.branch_probability * row.corrected_fidelity;
        ASSERT_GT(f, previous);
        previous = f;
    }
    ASSERT_NEAR(previous, 1, 1e-10);
}
