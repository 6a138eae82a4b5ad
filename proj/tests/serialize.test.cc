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

#include "oneway/serialize.h"

#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace oneway;
using nlohmann::json;
using oneway::testing::random_ket;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(serialize, parse_angle) {
    ASSERT_DOUBLE_EQ(parse_angle("0.5"), 0.5);
    ASSERT_DOUBLE_EQ(parse_angle("-1e-3"), -1e-3);
    ASSERT_DOUBLE_EQ(parse_angle("pi"), kPi);
    ASSERT_DOUBLE_EQ(parse_angle("pi/4"), kPi / 4);
    ASSERT_DOUBLE_EQ(parse_angle("-pi/4"), -kPi / 4);
    ASSERT_DOUBLE_EQ(parse_angle("3pi/4"), 3 * kPi / 4);
    ASSERT_DOUBLE_EQ(parse_angle("3*pi/2"), 3 * kPi / 2);
    ASSERT_DOUBLE_EQ(parse_angle(" pi/2 "), kPi / 2);
    for (const char *bad : {"", "pie", "pi/0", "pi/", "x", "2pi4", "1.2.3", "pi/a"}) {
        ASSERT_THROW(parse_angle(bad), std::invalid_argument) << bad;
    }
    ASSERT_DOUBLE_EQ(angle_from_json(json("pi/2")), kPi / 2);
    ASSERT_DOUBLE_EQ(angle_from_json(json(0.25)), 0.25);
    ASSERT_THROW(angle_from_json(json::array()), std::invalid_argument);
}

TEST(serialize, graph_round_trip) {
    GraphSpec g = GraphSpec::linear_chain(4);
    json j = g;
    ASSERT_EQ(j.dump(), R"({"edges":[[1,2],[2,3],[3,4]],"n":4})");
    auto back = j.get<GraphSpec>();
    ASSERT_EQ(back.n_qubits, 4);
    ASSERT_EQ(back.edges, g.edges);
    ASSERT_THROW(json::parse(R"({"n": 2, "edges": [[1, 1]]})").get<GraphSpec>(), std::invalid_argument);
    ASSERT_THROW(json::parse(R"({"n": 2, "edges": [[1, 2]], "extra": 1})").get<GraphSpec>(), std::invalid_argument);
    ASSERT_THROW(json::parse(R"({"edges": []})").get<GraphSpec>(), std::invalid_argument);
}

TEST(serialize, pattern_round_trip) {
    RotationJob job{0.3, -0.7, Ordering::kB, true, RotationInput::kFromFirstOutcome, std::nullopt};
    auto p = rotation_pattern(job);
    json j = p;
    auto back = j.get<Pattern>();
    ASSERT_EQ(back.steps.size(), p.steps.size());
    for (std::size_t k = 0; k < p.steps.size(); k++) {
        ASSERT_EQ(back.steps[k].qubit, p.steps[k].qubit);
        ASSERT_EQ(back.steps[k].plane, p.steps[k].plane);
        ASSERT_EQ(back.steps[k].angle, p.steps[k].angle);
        ASSERT_EQ(back.steps[k].sign_deps, p.steps[k].sign_deps);
        ASSERT_EQ(back.steps[k].label, p.steps[k].label);
    }
    ASSERT_EQ(back.outputs, p.outputs);
    ASSERT_EQ(back.byproducts.at(4).x, p.byproducts.at(4).x);
    ASSERT_EQ(back.byproducts.at(4).z, p.byproducts.at(4).z);
    ASSERT_EQ(j.dump(), json(back).dump());
}

TEST(serialize, pattern_document) {
    auto p = json::parse(R"({
        "steps": [{"qubit": 1, "plane": "z_basis"},
                  {"qubit": 2, "angle": "pi/2"},
                  {"qubit": 3, "angle": 0.5, "sign_deps": [2], "label": "III"}],
        "outputs": [4],
        "byproduct_rules": {"4": {"x": [3], "z": [2]}}
    })").get<Pattern>();
    ASSERT_EQ(p.steps[0].plane, Plane::kZ);
    ASSERT_DOUBLE_EQ(p.steps[1].angle, kPi / 2);
    ASSERT_EQ(p.steps[1].plane, Plane::kEquatorial);
    ASSERT_EQ(p.byproducts.at(4).z, (std::vector<int>{2}));
    // Forward dependency.
    ASSERT_THROW(json::parse(R"({"steps": [{"qubit": 1, "sign_deps": [2]}], "outputs": [2]})").get<Pattern>(),
                 std::invalid_argument);
    ASSERT_THROW(json::parse(R"({"steps": [], "outputs": [1], "byproduct_rules": {"one": {}}})").get<Pattern>(),
                 std::invalid_argument);
    ASSERT_THROW(json::parse(R"({"steps": [{"qubit": 1, "plane": "yz"}], "outputs": [2]})").get<Pattern>(),
                 std::invalid_argument);
}

TEST(serialize, noise_and_jobs) {
    NoiseSpec n{0.872, {0.1, 0, 0, 0.2}};
    json j = n;
    ASSERT_EQ(j.dump(), R"({"depolarizing":[0.1,0.0,0.0,0.2],"white_p":0.872})");
    auto back = j.get<NoiseSpec>();
    ASSERT_EQ(back.white_p, n.white_p);
    ASSERT_EQ(back.depolarizing, n.depolarizing);

    RotationJob r{0.1, 0.2, Ordering::kB, false, RotationInput::kFixedPlus, std::vector<int>{0, 1, 1}};
    auto rb = json(r).get<RotationJob>();
    ASSERT_EQ(rb.alpha, r.alpha);
    ASSERT_EQ(rb.ordering, Ordering::kB);
    ASSERT_FALSE(rb.ff_enabled);
    ASSERT_EQ(rb.input, RotationInput::kFixedPlus);
    ASSERT_EQ(rb.branch_filter, r.branch_filter);

    auto cj = json::parse(R"({"alpha": "pi/4", "o_choice": "id"})").get<CnotJob>();
    ASSERT_DOUBLE_EQ(cj.alpha, kPi / 4);
    ASSERT_EQ(cj.o, ControlPrep::kIdentity);
    ASSERT_TRUE(cj.compensate_target_hadamard);
    ASSERT_FALSE(cj.branch_filter.has_value());
    ASSERT_EQ(json(cj).get<CnotJob>().o, ControlPrep::kIdentity);

    auto pj = json::parse(R"({"alpha": 1, "beta": "-pi/2", "branch_filter": [1, 0]})").get<CphaseJob>();
    ASSERT_DOUBLE_EQ(pj.beta, -kPi / 2);
    ASSERT_EQ(pj.branch_filter, (std::vector<int>{1, 0}));
    ASSERT_THROW(json::parse(R"({"gamma": 1})").get<CphaseJob>(), std::invalid_argument);
}

TEST(serialize, ket_round_trip) {
    auto psi = random_ket(3);
    auto back = ket_from_json(json(psi));
    for (std::size_t k = 0; k < psi.dim(); k++) {
        // Renormalization may move the last bit.
        ASSERT_NEAR(std::abs(back.amplitude(k) - psi.amplitude(k)), 0, 1e-15);
    }
    auto real = ket_from_json(json::parse(R"({"amplitudes": [1, 1]})"));
    ASSERT_NEAR(real.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_THROW(ket_from_json(json::parse(R"({"n": 2, "amplitudes": [1, 1]})")), std::invalid_argument);
    ASSERT_THROW(ket_from_json(json::parse(R"({"amplitudes": [[1, 2, 3]]})")), std::invalid_argument);
}
