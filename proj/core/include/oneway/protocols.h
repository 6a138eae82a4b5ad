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

#ifndef ONEWAY_PROTOCOLS_H
#define ONEWAY_PROTOCOLS_H

#include <optional>
#include <string_view>
#include <vector>

#include "oneway/cluster.h"
#include "oneway/mbqc.h"
#include "oneway/noise.h"

namespace oneway {

// ---------------------------------------------------------------------------
// Single-qubit rotation: R_x(beta) R_z(alpha) on a 4-qubit chain.
//
// Qubit 1 is measured in Z (its outcome prepares the input |+> or |->), qubit 2
// at alpha, qubit 3 at +-beta depending on qubit 2, and qubit 4 carries the
// output with byproduct X^{s3} Z^{s2}.
// ---------------------------------------------------------------------------

enum class RotationInput {
    /// s1 selects the input state: |+> for s1 = 0, |-> for s1 = 1.
    kFromFirstOutcome,
    /// s1 is folded into the adaptivity and the frame so every branch
    /// computes on |+>.
    kFixedPlus,
};

struct RotationJob {
    double alpha = 0;
    double beta = 0;
    /// Lab encoding; only orderings a and b place the output on photon B.
    Ordering ordering = Ordering::kA;
    /// When false the step III basis no longer follows s2 (no adaptivity).
    /// Both fidelity columns of the report are filled either way.
    bool ff_enabled = true;
    RotationInput input = RotationInput::kFromFirstOutcome;
    /// Outcome bits (s1, s2, s3) when only one branch is wanted.
    std::optional<std::vector<int>> branch_filter;
};

/// Pattern in the computational frame, to be run on build_cluster(chain of 4).
Pattern rotation_pattern_computational(const RotationJob &job);

/// Pattern in the lab frame of job.ordering, to be run on rotation_state().
/// Measurement angles and byproduct rules are conjugated through the
/// ordering's local unitaries.
Pattern rotation_pattern(const RotationJob &job);

/// The chain cluster carried into the lab encoding, logical qubit order.
Ket rotation_state(Ordering ordering);

/// Closed-form lab output for outcomes (s1, s2, s3):
///   ordering a: Z^{s3} X^{s2} H R_x(beta) R_z(alpha) |chi_in>
///   ordering b: Z^{s3} X^{s2} Z H R_x(beta) R_z(alpha) |chi_in>
/// where |chi_in> = |+> or |-> by s1 (kFromFirstOutcome), or |+> with the
/// X exponent s1 ^ s2 (kFixedPlus).
Ket rotation_reference(double alpha, double beta, int s1, int s2, int s3, Ordering ordering,
                       RotationInput input = RotationInput::kFromFirstOutcome);

struct RotationBranch {
    std::map<int, int> outcomes;
    double probability = 0;
    PauliFrame frame;
    /// After applying the frame, against the s2 = s3 = 0 reference.
    double fidelity_ff_on = 0;
    /// Raw output against the same reference.
    double fidelity_ff_off = 0;

    int s(int qubit) const { return outcomes.at(qubit); }
    double fidelity(bool ff) const { return ff ? fidelity_ff_on : fidelity_ff_off; }
};

struct RotationReport {
    RotationJob job;
    std::vector<RotationBranch> branches;

    /// Probability-weighted mean fidelity.
    double mean_fidelity(bool ff) const;
};

RotationReport run_rotation(const RotationJob &job, const NoiseSpec &noise = {});

// ---------------------------------------------------------------------------
// C-NOT for equatorial targets on the horseshoe cluster (ordering c).
// ---------------------------------------------------------------------------

/// The operator O applied to the control before the C-NOT.
enum class ControlPrep { kIdentity, kHadamard };

std::string_view control_prep_name(ControlPrep o);
ControlPrep parse_control_prep(std::string_view name);

struct CnotJob {
    double alpha = 0;
    ControlPrep o = ControlPrep::kHadamard;
    /// Models the wave plates on photon B that undo the target Hadamard.
    bool compensate_target_hadamard = true;
    /// Outcome bits (s1, s4).
    std::optional<std::vector<int>> branch_filter;
};

/// Computational-frame pattern: qubit 1 in Z (O = I) or at angle 0 (O = H),
/// qubit 4 at alpha; outputs 2 (control) and 3 (target).
Pattern cnot_pattern(const CnotJob &job);

/// Closed-form lab output, qubit order (control k_B, target pi_B):
///   (Z_c Z_t)^{s4} X_c CNOT(O Z^{s1} |+>_c (x) R_z(alpha) |+>_t)
/// with an extra H on the target when the compensation is off.
Ket cnot_reference(double alpha, ControlPrep o, int s1, int s4, bool compensated = true);

/// Maps a computational-frame output (qubits 2, 3) into the lab frame.
Ket cnot_to_lab(const Ket &output, bool compensated = true);
DensityMatrix cnot_to_lab(const DensityMatrix &output, bool compensated = true);

struct CnotRow {
    int s1 = 0;
    int s4 = 0;
    double branch_probability = 0;
    /// Two-qubit output against cnot_reference for the same branch.
    double joint_fidelity = 0;
    /// Control measured in {|0>, |1>} (lab).
    int control_readout = 0;
    double readout_probability = 0;
    /// Target conditioned on the readout, against the conditioned reference.
    double target_fidelity = 0;
};

struct CnotReport {
    CnotJob job;
    std::vector<CnotRow> rows;
};

/// One row per branch and possible control readout; readouts the reference
/// forbids are omitted.
CnotReport run_cnot(const CnotJob &job, const NoiseSpec &noise = {});

// ---------------------------------------------------------------------------
// C-Phase with control |+> and an arbitrary target (ordering d).
// ---------------------------------------------------------------------------

struct CphaseJob {
    double alpha = 0;
    double beta = 0;
    /// Outcome bits (s1, s2).
    std::optional<std::vector<int>> branch_filter;
};

/// Computational-frame pattern: qubit 1 at alpha, qubit 2 at +-beta
/// (dependent on qubit 1); outputs 3, 4.
Pattern cphase_pattern(const CphaseJob &job);

/// R_x(beta) R_z(alpha) |+>
Ket cphase_target(double alpha, double beta);

/// Closed-form lab output, qubit order (control k_A, target k_B). For
/// s1 = s2 = 0 this is (|-> (x) X|Phi> + |+> (x) XZ|Phi>) / sqrt(2); other
/// branches carry X^{s2} on k_A and X^{s2} Z^{s1} on k_B.
Ket cphase_reference(double alpha, double beta, int s1, int s2);

/// Maps a computational-frame output (qubits 3, 4) into the lab frame, qubit
/// order (k_A, k_B).
Ket cphase_to_lab(const Ket &output);
DensityMatrix cphase_to_lab(const DensityMatrix &output);

/// The Pauli frame of a C-Phase branch expressed on (k_A, k_B).
PauliFrame cphase_lab_frame(const Pattern &pattern, const std::map<int, int> &outcomes);

struct CphaseRow {
    int s1 = 0;
    int s2 = 0;
    double branch_probability = 0;
    /// Raw lab output against cphase_reference(s1, s2).
    double joint_fidelity = 0;
    /// Frame-corrected output against cphase_reference(0, 0).
    double corrected_fidelity = 0;
    /// Corrected target conditioned on control |+> (vs XZ|Phi>) and |-> (vs X|Phi>).
    double readout_probability_plus = 0;
    double target_fidelity_plus = 0;
    double readout_probability_minus = 0;
    double target_fidelity_minus = 0;
};

struct CphaseReport {
    CphaseJob job;
    std::vector<CphaseRow> rows;
};

CphaseReport run_cphase(const CphaseJob &job, const NoiseSpec &noise = {});

}  // namespace oneway

#endif  // ONEWAY_PROTOCOLS_H
