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

#include <numbers>

#include "gtest/gtest.h"
#include "oneway/cluster.h"
#include "oneway/protocols.h"
#include "test_util.h"

using namespace oneway;
using oneway::testing::random_density;
using oneway::testing::random_ket;

namespace {

constexpr double kPi = std::numbers::pi;

Ket chain4() { return build_cluster(GraphSpec::linear_chain(4)); }

}  // namespace

TEST(noise, white_noise_endpoints) {
    auto psi = random_ket(3);
    ASSERT_LT(apply_white_noise(psi, 1).distance(DensityMatrix::from_ket(psi)), 1e-15);
    ASSERT_LT(apply_white_noise(psi, 0).distance(DensityMatrix::maximally_mixed(3)), 1e-15);
    ASSERT_THROW(apply_white_noise(psi, 1.1), std::invalid_argument);
    ASSERT_THROW(apply_white_noise(psi, -0.1), std::invalid_argument);
}

TEST(noise, white_noise_on_the_lab_cluster) {
    auto c4 = lab_cluster_state();
    auto group = stabilizer_group(GraphSpec::linear_chain(4), ordering_map(Ordering::kA));
    auto rho = apply_white_noise(c4, 0.872);
    // p + (1 - p)/16 = 0.872 + 0.008
    ASSERT_NEAR(stabilizer_fidelity(rho, group), 0.880, 1e-12);
    ASSERT_NEAR(fidelity_dm(rho, c4), 0.880, 1e-12);
}

TEST(noise, depolarize_examples) {
    auto rho = random_density(2, 2);
    ASSERT_LT(depolarize(rho, 1, 0).distance(rho), 1e-15);
    for (int trial = 0; trial < 20; trial++) {
        auto one = random_density(1, 2);
        ASSERT_LT(depolarize(one, 1, 0.75).distance(DensityMatrix::maximally_mixed(1)), 1e-12);
    }
    // Oracle: 1 - 2 lambda / 3 at lambda = 0.1.
    auto plus = DensityMatrix::from_ket(kets::plus());
    ASSERT_NEAR(fidelity_dm(depolarize(plus, 1, 0.1), kets::plus()), 0.9333333333333333, 1e-12);
    ASSERT_THROW(depolarize(plus, 1, 1.5), std::invalid_argument);
    ASSERT_THROW(depolarize(plus, 2, 0.1), std::out_of_range);
}

TEST(noise, noise_spec_validation) {
    NoiseSpec ok{0.9, {0.1, 0, 0, 0.2}};
    ASSERT_NO_THROW(ok.validate(4));
    ASSERT_FALSE(ok.is_ideal());
    ASSERT_TRUE(NoiseSpec{}.is_ideal());
    ASSERT_THROW((NoiseSpec{0.9, {0.1}}.validate(4)), std::invalid_argument);
    ASSERT_THROW((NoiseSpec{1.2, {}}.validate(4)), std::invalid_argument);
    ASSERT_THROW((NoiseSpec{1, {0, 0, 0, 2}}.validate(4)), std::invalid_argument);
}

TEST(noise, apply_noise_orders_channels) {
    auto psi = random_ket(2);
    NoiseSpec n{0.8, {0.1, 0.2}};
    auto expected = depolarize(depolarize(apply_white_noise(psi, 0.8), 1, 0.1), 2, 0.2);
    ASSERT_LT(apply_noise(psi, n).distance(expected), 1e-15);
}

TEST(noise, pure_input_matches_state_vector_run) {
    RotationJob job;
    job.alpha = 0.8;
    job.beta = -0.4;
    auto p = rotation_pattern_computational(job);
    auto kb = run_pattern(chain4(), p);
    auto db = run_pattern_dm(DensityMatrix::from_ket(chain4()), p);
    ASSERT_EQ(kb.size(), db.size());
    for (std::size_t k = 0; k < kb.size(); k++) {
        ASSERT_EQ(kb[k].outcomes, db[k].outcomes);
        ASSERT_EQ(kb[k].frame, db[k].frame);
        ASSERT_NEAR(kb[k].probability, db[k].probability, 1e-12);
        ASSERT_LT(db[k].output_state.distance(DensityMatrix::from_ket(kb[k].output_state)), 1e-12);
    }
    ASSERT_THROW(run_pattern_dm(DensityMatrix::from_ket(chain4()), p, SampleMode{1, 10}), std::invalid_argument);
}

TEST(noise, white_noise_rotation_fidelity_closed_form) {
    for (double p : {1.0, 0.872, 0.5, 0.0}) {
        for (double a : {0.0, 1.1, -2.5}) {
            for (double b : {0.0, 0.7, kPi / 2}) {
                RotationJob job;
                job.alpha = a;
                job.beta = b;
                auto report = run_rotation(job, NoiseSpec{p, {}});
                ASSERT_EQ(report.branches.size(), 8u);
                for (const auto &br : report.branches) {
                    ASSERT_NEAR(br.fidelity_ff_on, p + (1 - p) / 2, 1e-10);
                    ASSERT_NEAR(br.probability, 0.125, 1e-12);
                }
            }
        }
    }
    RotationJob job;
    auto report = run_rotation(job, NoiseSpec{0.872, {}});
    ASSERT_NEAR(report.mean_fidelity(true), 0.936, 1e-12);
}

TEST(noise, ff_off_never_beats_ff_on) {
    for (double b : {0.0, 0.5, kPi / 2, 2.0}) {
        RotationJob job;
        job.alpha = 0.9;
        job.beta = b;
        auto report = run_rotation(job, NoiseSpec{0.872, {}});
        double on = report.mean_fidelity(true);
        double off = report.mean_fidelity(false);
        ASSERT_LE(off, on + 1e-12);
        if (b != 0) {
            ASSERT_LT(off, on - 1e-3) << b;
        }
    }
}

TEST(noise, property_branch_ensembles_preserve_trace_and_positivity) {
    CphaseJob job{0.3, 1.7, std::nullopt};
    auto p = cphase_pattern(job);
    for (int trial = 0; trial < 20; trial++) {
        auto rho = random_density(4, 1 + trial % 5);
        double total = 0;
        for (const auto &b : run_pattern_dm(rho, p)) {
            total += b.probability;
            ASSERT_NEAR(b.output_state.trace().real(), 1, 1e-10);
            ASSERT_GE(b.output_state.min_eigenvalue(), -1e-10);
            ASSERT_TRUE(b.output_state.is_hermitian(1e-12));
        }
        ASSERT_NEAR(total, 1, 1e-10);
    }
}

TEST(noise, property_branches_are_linear_in_the_input) {
    CnotJob job{0.6, ControlPrep::kHadamard, true, std::nullopt};
    auto p = cnot_pattern(job);
    for (int trial = 0; trial < 20; trial++) {
        auto r1 = random_density(4, 2);
        auto r2 = random_density(4, 3);
        double w = 0.1 + 0.04 * trial;
        std::vector<double> ws{w, 1 - w};
        std::vector<DensityMatrix> parts{r1, r2};
        auto mix = DensityMatrix::mixture(ws, parts);
        auto b1 = run_pattern_dm(r1, p);
        auto b2 = run_pattern_dm(r2, p);
        auto bm = run_pattern_dm(mix, p);
        ASSERT_EQ(b1.size(), bm.size());
        for (std::size_t k = 0; k < bm.size(); k++) {
            double pm = w * b1[k].probability + (1 - w) * b2[k].probability;
            ASSERT_NEAR(bm[k].probability, pm, 1e-10);
            // p_mix rho_mix = w p1 rho1 + (1 - w) p2 rho2
            std::vector<double> cw{w * b1[k].probability / pm, (1 - w) * b2[k].probability / pm};
            std::vector<DensityMatrix> cp{b1[k].output_state, b2[k].output_state};
            ASSERT_LT(bm[k].output_state.distance(DensityMatrix::mixture(cw, cp)), 1e-10);
        }
    }
}
