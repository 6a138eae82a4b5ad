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

#ifndef ONEWAY_HARNESS_CONFIG_H
#define ONEWAY_HARNESS_CONFIG_H

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oneway/cluster.h"
#include "oneway/noise.h"
#include "oneway/protocols.h"

namespace oneway::harness {

/// Bad flags, bad config documents, or parameters outside a command's schema.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unreadable inputs or unwritable outputs.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExitCode : int { kOk = 0, kSchema = 2, kIo = 3, kImpossibleBranch = 4 };

/// Detector labels of the two-photon apparatus. Photon A's four detectors
/// a1..a4 each see one pair (s_piA, s_kA); photon B's b1, b2 see s_kB.
struct DetectorMap {
    /// a[i] = {s_piA, s_kA} seen by detector a_{i+1}.
    std::array<std::array<int, 2>, 4> a;
    /// b[j] = s_kB seen by detector b_{j+1}.
    std::array<int, 2> b;

    /// a2 <-> (0,0); the remaining pairs go to a1, a3, a4 in lexicographic
    /// order. b1 <-> 0, b2 <-> 1.
    static DetectorMap defaults();

    /// Applies "a1=01,a3=10,b1=1"-style overrides; the result must still be a
    /// bijection. Throws SchemaError.
    void override_with(std::string_view text);

    std::string a_label(int s_pi_a, int s_k_a) const;
    std::string b_label(int s_k_b) const;
    std::string str() const;
};

enum class RunModeKind { kEnumerate, kSample, kForce };
enum class Format { kJson, kCsv };

/// Everything a subcommand needs, resolved and validated.
struct RunConfig {
    std::string command;
    std::optional<std::string> protocol;
    double alpha = 0;
    double beta = 0;
    /// Angles as the user wrote them, for the report metadata.
    std::string alpha_text = "0";
    std::string beta_text = "0";
    Ordering ordering = Ordering::kA;
    ControlPrep oracle = ControlPrep::kHadamard;
    bool ff = true;
    bool compensate = true;
    RotationInput input = RotationInput::kFromFirstOutcome;
    NoiseSpec noise;
    RunModeKind mode = RunModeKind::kEnumerate;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::vector<int> force_bits;
    Format format = Format::kJson;
    std::optional<std::string> out;
    DetectorMap detectors = DetectorMap::defaults();
    int grid = 8;
    std::optional<std::string> pattern_path;
    std::optional<std::string> state_path;
    std::optional<std::string> graph_path;

    /// The settings actually used, echoed into report metadata.
    nlohmann::ordered_json echo;
};

/// Subcommand names in help order.
const std::vector<std::string> &command_names();

/// Keys a subcommand accepts (in config files, with underscores; on the
/// command line, with dashes).
const std::vector<std::string> &allowed_keys(const std::string &command);

/// Validates `settings` (a JSON object keyed by setting name, values as
/// native JSON or as strings) against the command schema. Throws SchemaError.
RunConfig resolve_config(const std::string &command, const nlohmann::json &settings);

/// Parses a JSON file; IoError when unreadable, SchemaError when malformed.
nlohmann::json read_json_file(const std::string &path);

}  // namespace oneway::harness

#endif  // ONEWAY_HARNESS_CONFIG_H
