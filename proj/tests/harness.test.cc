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

#include "fmt/format.h"
#include "gtest/gtest.h"
#include "harness/commands.h"
#include "harness/config.h"
#include "harness/report.h"

using namespace oneway;
using namespace oneway::harness;
using nlohmann::json;

namespace {

RunConfig config(const std::string &command, const char *settings = "{}") {
    return resolve_config(command, json::parse(settings));
}

/// Every cell of the CSV rendering equals the matching JSON value.
void expect_same_rows(const Report &r) {
    auto doc = json::parse(to_json_text(r));
    auto csv = parse_csv(to_csv_text(r));
    ASSERT_EQ(csv.size(), r.rows.size() + 1);
    ASSERT_EQ(csv[0], r.columns);
    ASSERT_EQ(doc["rows"].size(), r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); i++) {
        const auto &obj = doc["rows"][i];
        for (std::size_t k = 0; k < r.columns.size(); k++) {
            const auto &v = obj[r.columns[k]];
            const auto &field = csv[i + 1][k];
            if (v.is_null()) {
                EXPECT_EQ(field, "");
            } else if (v.is_boolean()) {
                EXPECT_EQ(field, v.get<bool>() ? "true" : "false");
            } else if (v.is_number_integer()) {
                EXPECT_EQ(std::stoll(field), v.get<std::int64_t>());
            } else if (v.is_number()) {
                EXPECT_EQ(std::stod(field), v.get<double>()) << r.columns[k];
            } else {
                EXPECT_EQ(field, v.get<std::string>());
            }
        }
    }
}

}  // namespace

TEST(harness, report_width_checked) {
    Report r({"a", "b"});
    r.add_row({std::int64_t{1}, 2.5});
    ASSERT_THROW(r.add_row({std::int64_t{1}}), std::logic_error);
    ASSERT_EQ(r.column("b"), 1u);
    ASSERT_THROW(r.column("c"), std::out_of_range);
}

TEST(harness, csv_quoting_round_trip) {
    Report r({"text", "value", "flag", "missing"});
    r.add_row({std::string("plain"), 0.1, true, Cell{}});
    r.add_row({std::string("with,comma \"quoted\""), -0.0, false, Cell{}});
    auto text = to_csv_text(r);
    ASSERT_EQ(text, "text,value,flag,missing\nplain,0.1,true,\n\"with,comma \"\"quoted\"\"\",0,false,\n");
    auto rows = parse_csv(text);
    ASSERT_EQ(rows[2][0], "with,comma \"quoted\"");
    expect_same_rows(r);
    ASSERT_THROW(parse_csv("\"open"), std::invalid_argument);
}

TEST(harness, format_double_round_trips) {
    for (double v : {0.1, 1.0 / 3, 1e-300, 123456789.125, 0.936, -2.5e-7}) {
        ASSERT_EQ(std::stod(format_double(v)), v);
    }
    ASSERT_EQ(format_double(-0.0), "0");
    ASSERT_THROW(format_double(std::nan("")), std::domain_error);
}

TEST(harness, detector_map_defaults_and_overrides) {
    auto m = DetectorMap::defaults();
    ASSERT_EQ(m.a_label(0, 0), "a2");
    ASSERT_EQ(m.a_label(0, 1), "a1");
    ASSERT_EQ(m.a_label(1, 0), "a3");
    ASSERT_EQ(m.a_label(1, 1), "a4");
    ASSERT_EQ(m.b_label(0), "b1");
    m.override_with("a1=10,a3=01");
    ASSERT_EQ(m.a_label(1, 0), "a1");
    ASSERT_EQ(m.a_label(0, 1), "a3");
    ASSERT_EQ(m.str(), "a1=10,a2=00,a3=01,a4=11,b1=0,b2=1");
    auto bad = DetectorMap::defaults();
    ASSERT_THROW(bad.override_with("a1=00"), SchemaError);
    ASSERT_THROW(bad.override_with("a5=00"), SchemaError);
    ASSERT_THROW(bad.override_with("b1=2"), SchemaError);
    ASSERT_THROW(bad.override_with("c1=0"), SchemaError);
}

TEST(harness, config_schema) {
    auto c = config("rotate", R"({"alpha": "pi/4", "beta": 0.5, "ordering": "b", "ff": "off", "noise_p": "0.872"})");
    ASSERT_DOUBLE_EQ(c.alpha, M_PI / 4);
    ASSERT_EQ(c.alpha_text, "pi/4");
    ASSERT_EQ(c.ordering, Ordering::kB);
    ASSERT_FALSE(c.ff);
    ASSERT_DOUBLE_EQ(c.noise.white_p, 0.872);
    ASSERT_FALSE(c.echo.contains("out"));

    ASSERT_THROW(config("rotate", R"({"oracle": "h"})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"ordering": "c"})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"alpha": "pie"})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"noise_p": 1.5})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"mode": "force"})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"mode": "enumerate", "force_bits": "010"})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"shots": 10})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"mode": "sample", "shots": 0})"), SchemaError);
    ASSERT_THROW(config("rotate", R"({"depol": [0.1, 0.2]})"), SchemaError);
    ASSERT_THROW(config("fig3", R"({"alpha": 1})"), SchemaError);
    ASSERT_THROW(config("enumerate"), SchemaError);
    ASSERT_THROW(config("enumerate", R"({"protocol": "cnot", "graph": "g.json"})"), SchemaError);
    ASSERT_THROW(config("bogus"), SchemaError);

    auto f = config("cnot", R"({"force_bits": "1,0"})");
    ASSERT_EQ(f.mode, RunModeKind::kForce);
    ASSERT_EQ(f.force_bits, (std::vector<int>{1, 0}));
    auto d = config("fidelity", R"({"depol": "0.1"})");
    ASSERT_EQ(d.noise.depolarizing, (std::vector<double>{0.1, 0.1, 0.1, 0.1}));
    auto s = config("cphase", R"({"mode": "sample", "seed": "18446744073709551615"})");
    ASSERT_EQ(s.seed, 18446744073709551615ull);
    ASSERT_EQ(s.shots, 100000u);
}

TEST(harness, rotate_report) {
    auto r = run_command(config("rotate", R"({"alpha": "pi/4", "beta": "pi/3"})"));
    ASSERT_EQ(r.rows.size(), 8u);
    auto col = r.column("fidelity_ff_off");
    const double oracle[4] = {1.0, 0.5, 0.375, 0.125};
    for (std::size_t k = 0; k < 8; k++) {
        ASSERT_NEAR(std::get<double>(r.rows[k][col]), oracle[k % 4], 1e-12);
        ASSERT_NEAR(std::get<double>(r.rows[k][r.column("fidelity")]), 1, 1e-10);
    }
    // (s_piA, s_kA) = (s3, s2) = (0, 0) lands on a2.
    ASSERT_EQ(std::get<std::string>(r.rows[0][r.column("detector_a")]), "a2");
    ASSERT_EQ(r.meta["command"], "rotate");
    ASSERT_EQ(r.meta["version"], harness_version());
    expect_same_rows(r);
}

TEST(harness, rotate_examples) {
    // Ordering b, alpha = pi/4, beta = 0, branch s2 = s3 = 0: ideal fidelity 1.
    auto b = run_command(config("rotate", R"({"alpha": "pi/4", "ordering": "b", "force_bits": "000"})"));
    ASSERT_EQ(b.rows.size(), 1u);
    ASSERT_NEAR(std::get<double>(b.rows[0][b.column("fidelity")]), 1, 1e-10);
    // Ordering a, ff off, alpha = beta = 0, sigma_x branch: 0.
    auto off = run_command(config("rotate", R"({"ff": "off", "force_bits": "010"})"));
    ASSERT_NEAR(std::get<double>(off.rows[0][off.column("fidelity")]), 0, 1e-12);
    // White noise 0.872 with feed-forward: 0.936 everywhere.
    auto noisy = run_command(config("rotate", R"({"alpha": 0.4, "beta": 1.2, "noise_p": 0.872})"));
    for (const auto &row : noisy.rows) {
        ASSERT_NEAR(std::get<double>(row[noisy.column("fidelity")]), 0.936, 1e-10);
    }
}

TEST(harness, sample_mode_counts) {
    auto r = run_command(config("cphase", R"({"mode": "sample", "shots": 4000, "seed": 5})"));
    std::int64_t total = 0;
    for (const auto &row : r.rows) total += std::get<std::int64_t>(row[r.column("count")]);
    ASSERT_EQ(total, 4000);
    ASSERT_EQ(to_json_text(r), to_json_text(run_command(config("cphase", R"({"mode": "sample", "shots": 4000, "seed": 5})"))));
}

TEST(harness, fidelity_report) {
    for (auto [p, expected] : {std::pair{1.0, 1.0}, {0.872, 0.880}, {0.0, 0.0625}}) {
        auto r = run_command(config("fidelity", fmt::format(R"({{"noise_p": {}}})", p).c_str()));
        ASSERT_NEAR(std::get<double>(r.rows[0][r.column("stabilizer_fidelity")]), expected, 1e-12);
        ASSERT_NEAR(std::get<double>(r.rows[0][r.column("overlap_fidelity")]), expected, 1e-12);
    }
}

TEST(harness, table1_layout) {
    auto r = run_command(config("table1"));
    ASSERT_EQ(r.rows.size(), 16u);
    for (const auto &row : r.rows) {
        ASSERT_NEAR(std::get<double>(row[r.column("fidelity")]), 1, 1e-10);
        ASSERT_EQ(std::get<std::int64_t>(row[r.column("s2")]), 0);
    }
    ASSERT_EQ(std::get<double>(r.rows[4][r.column("measured_fidelity")]), 0.879);
    expect_same_rows(r);
}

TEST(harness, table2_layout) {
    auto r = run_command(config("table2"));
    // O = H: 2 alphas x 4 branches; O = I: 2 alphas x 4 branches x 2 readouts.
    ASSERT_EQ(r.rows.size(), 24u);
    for (const auto &row : r.rows) {
        ASSERT_NEAR(std::get<double>(row[r.column("target_fidelity")]), 1, 1e-10);
    }
    ASSERT_EQ(std::get<std::string>(r.rows[0][r.column("control_state")]), "|1>_c");
    ASSERT_EQ(std::get<double>(r.rows[0][r.column("measured_fidelity")]), 0.965);
    expect_same_rows(r);
}

TEST(harness, fig3_and_cphase_avg) {
    auto f = run_command(config("fig3", R"({"alpha": "pi/2", "beta": "pi/2"})"));
    ASSERT_EQ(f.rows.size(), 4u);
    for (int i = 0; i < 4; i++) {
        ASSERT_EQ(std::get<std::string>(f.rows[i][0]), fmt::format("a{}", i + 1));
    }
    auto c = run_command(config("cphase-avg", R"({"grid": 3})"));
    ASSERT_EQ(c.rows.size(), 10u);
    ASSERT_EQ(std::get<std::string>(c.rows.back()[0]), "average");
    ASSERT_NEAR(std::get<double>(c.rows.back()[c.column("fidelity_plus")]), 1, 1e-10);
    expect_same_rows(c);
}

TEST(harness, enumerate_protocol) {
    auto r = run_command(config("enumerate", R"({"protocol": "rotation", "alpha": 0.3})"));
    ASSERT_EQ(r.rows.size(), 8u);
    ASSERT_EQ(r.columns[1], "s1");
    expect_same_rows(r);
    ASSERT_THROW(run_command(config("enumerate", R"({"protocol": "rotation", "force_bits": "01"})")), SchemaError);
}

TEST(harness, impossible_forced_branch) {
    // O = I measures qubit 1 in Z; a forced branch is always possible here, so
    // use a pattern document instead.
    ASSERT_THROW(run_command(config("enumerate", R"({"pattern": "/nonexistent/p.json"})")), IoError);
}
