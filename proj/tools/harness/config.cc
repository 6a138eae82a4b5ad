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

#include "harness/config.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "harness/report.h"
#include "oneway/serialize.h"

namespace oneway::harness {

using nlohmann::json;
using nlohmann::ordered_json;

DetectorMap DetectorMap::defaults() {
    DetectorMap m;
    // Only a2 <-> (0, 0) is fixed by the apparatus description.
    m.a = {std::array<int, 2>{0, 1}, {0, 0}, {1, 0}, {1, 1}};
    m.b = {0, 1};
    return m;
}

void DetectorMap::override_with(std::string_view text) {
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq != 2 || (item[0] != 'a' && item[0] != 'b')) {
            throw SchemaError(fmt::format("bad detector assignment '{}' (expected e.g. a1=01 or b2=1)", item));
        }
        int index = item[1] - '1';
        auto bits = item.substr(eq + 1);
        auto bit = [&](char c) {
            if (c != '0' && c != '1') {
                throw SchemaError(fmt::format("bad detector bits in '{}'", item));
            }
            return c - '0';
        };
        if (item[0] == 'a') {
            if (index < 0 || index > 3 || bits.size() != 2) {
                throw SchemaError(fmt::format("bad detector assignment '{}' (a1..a4 take two bits)", item));
            }
            a[index] = {bit(bits[0]), bit(bits[1])};
        } else {
            if (index < 0 || index > 1 || bits.size() != 1) {
                throw SchemaError(fmt::format("bad detector assignment '{}' (b1, b2 take one bit)", item));
            }
            b[index] = bit(bits[0]);
        }
    }
    std::array<int, 4> seen{};
    for (const auto &p : a) {
        seen[p[0] * 2 + p[1]]++;
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }) || b[0] == b[1]) {
        throw SchemaError("detector map must assign every outcome to exactly one detector");
    }
}

std::string DetectorMap::a_label(int s_pi_a, int s_k_a) const {
    for (int i = 0; i < 4; i++) {
        if (a[i][0] == s_pi_a && a[i][1] == s_k_a) {
            return fmt::format("a{}", i + 1);
        }
    }
    throw std::logic_error("detector map is not a bijection");
}

std::string DetectorMap::b_label(int s_k_b) const { return b[0] == s_k_b ? "b1" : "b2"; }

std::string DetectorMap::str() const {
    return fmt::format("a1={}{},a2={}{},a3={}{},a4={}{},b1={},b2={}", a[0][0], a[0][1], a[1][0], a[1][1], a[2][0],
                       a[2][1], a[3][0], a[3][1], b[0], b[1]);
}

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> kNames{"rotate", "cnot",   "cphase", "fidelity", "enumerate",
                                                 "table1", "table2", "fig3",   "cphase-avg"};
    return kNames;
}

const std::vector<std::string> &allowed_keys(const std::string &command) {
    static const std::map<std::string, std::vector<std::string>> kKeys{
        {"rotate",
         {"alpha", "beta", "ordering", "ff", "input", "noise_p", "depol", "mode", "shots", "seed", "force_bits",
          "detector_map", "format", "out"}},
        {"cnot",
         {"alpha", "oracle", "compensate", "noise_p", "depol", "mode", "shots", "seed", "force_bits", "format",
          "out"}},
        {"cphase", {"alpha", "beta", "noise_p", "depol", "mode", "shots", "seed", "force_bits", "format", "out"}},
        {"fidelity", {"ordering", "noise_p", "depol", "format", "out"}},
        {"enumerate",
         {"protocol", "pattern", "state", "graph", "alpha", "beta", "ordering", "oracle", "ff", "input", "mode",
          "shots", "seed", "force_bits", "format", "out"}},
        {"table1", {"input", "noise_p", "depol", "detector_map", "format", "out"}},
        {"table2", {"compensate", "noise_p", "depol", "format", "out"}},
        {"fig3", {"alpha", "beta", "noise_p", "depol", "detector_map", "format", "out"}},
        {"cphase-avg", {"grid", "noise_p", "depol", "format", "out"}},
    };
    auto it = kKeys.find(command);
    if (it == kKeys.end()) {
        throw SchemaError(fmt::format("unknown command '{}'", command));
    }
    return it->second;
}

namespace {

std::string as_text(const json &v, const std::string &key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "on" : "off";
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number()) return format_double(v.get<double>());
    throw SchemaError(fmt::format("setting '{}' must be a scalar", key));
}

double as_double(const json &v, const std::string &key) {
    if (v.is_number()) return v.get<double>();
    auto text = as_text(v, key);
    try {
        std::size_t used = 0;
        double d = std::stod(text, &used);
        if (used == text.size()) return d;
    } catch (const std::exception &) {
    }
    throw SchemaError(fmt::format("setting '{}' expects a number, got '{}'", key, text));
}

std::uint64_t as_uint(const json &v, const std::string &key) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    auto text = as_text(v, key);
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw SchemaError(fmt::format("setting '{}' expects a non-negative integer, got '{}'", key, text));
    }
    return out;
}

bool as_switch(const json &v, const std::string &key) {
    if (v.is_boolean()) return v.get<bool>();
    auto text = as_text(v, key);
    if (text == "on" || text == "true") return true;
    if (text == "off" || text == "false") return false;
    throw SchemaError(fmt::format("setting '{}' expects on or off, got '{}'", key, text));
}

std::string as_choice(const json &v, const std::string &key, std::initializer_list<std::string_view> choices) {
    auto text = as_text(v, key);
    for (auto c : choices) {
        if (text == c) return text;
    }
    std::string list;
    for (auto c : choices) {
        list += (list.empty() ? "" : "|") + std::string(c);
    }
    throw SchemaError(fmt::format("setting '{}' expects one of {}, got '{}'", key, list, text));
}

double as_angle(const json &v, const std::string &key, std::string &text_out) {
    try {
        double value = angle_from_json(v);
        text_out = v.is_string() ? v.get<std::string>() : format_double(value);
        return value;
    } catch (const std::invalid_argument &e) {
        throw SchemaError(fmt::format("setting '{}': {}", key, e.what()));
    }
}

std::vector<double> as_double_list(const json &v, const std::string &key) {
    std::vector<double> out;
    if (v.is_array()) {
        for (const auto &x : v) {
            out.push_back(as_double(x, key));
        }
        return out;
    }
    std::stringstream ss(as_text(v, key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(as_double(json(item), key));
    }
    return out;
}

std::vector<int> as_bits(const json &v, const std::string &key) {
    std::vector<int> bits;
    auto push = [&](std::int64_t b) {
        if (b != 0 && b != 1) {
            throw SchemaError(fmt::format("setting '{}' expects bits 0/1", key));
        }
        bits.push_back(static_cast<int>(b));
    };
    if (v.is_array()) {
        for (const auto &x : v) {
            if (!x.is_number_integer()) {
                throw SchemaError(fmt::format("setting '{}' expects bits 0/1", key));
            }
            push(x.get<std::int64_t>());
        }
        return bits;
    }
    for (char c : as_text(v, key)) {
        if (c == ',' || c == ' ') continue;
        push(c == '0' ? 0 : c == '1' ? 1 : 2);
    }
    return bits;
}

}  // namespace

RunConfig resolve_config(const std::string &command, const json &settings) {
    const auto &allowed = allowed_keys(command);
    if (!settings.is_object()) {
        throw SchemaError("settings must be a JSON object");
    }
    for (const auto &item : settings.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw SchemaError(fmt::format("setting '{}' is not accepted by '{}'", item.key(), command));
        }
    }
    auto has = [&](const char *key) { return settings.contains(key) && !settings.at(key).is_null(); };

    RunConfig c;
    c.command = command;
    if (has("protocol")) c.protocol = as_choice(settings["protocol"], "protocol", {"rotation", "cnot", "cphase"});
    if (has("alpha")) c.alpha = as_angle(settings["alpha"], "alpha", c.alpha_text);
    if (has("beta")) c.beta = as_angle(settings["beta"], "beta", c.beta_text);
    if (has("ordering")) c.ordering = parse_ordering(as_choice(settings["ordering"], "ordering", {"a", "b", "c", "d"}));
    if (has("oracle")) c.oracle = parse_control_prep(as_choice(settings["oracle"], "oracle", {"id", "h"}));
    if (has("ff")) c.ff = as_switch(settings["ff"], "ff");
    if (has("compensate")) c.compensate = as_switch(settings["compensate"], "compensate");
    if (has("input")) {
        auto in = as_choice(settings["input"], "input", {"first-outcome", "fixed-plus"});
        c.input = in == "fixed-plus" ? RotationInput::kFixedPlus : RotationInput::kFromFirstOutcome;
    }
    if (has("noise_p")) {
        c.noise.white_p = as_double(settings["noise_p"], "noise_p");
        if (!(c.noise.white_p >= 0 && c.noise.white_p <= 1)) {
            throw SchemaError("setting 'noise_p' must lie in [0, 1]");
        }
    }
    if (has("depol")) {
        c.noise.depolarizing = as_double_list(settings["depol"], "depol");
        for (double l : c.noise.depolarizing) {
            if (!(l >= 0 && l <= 1)) {
                throw SchemaError("setting 'depol' values must lie in [0, 1]");
            }
        }
        // A single value applies to every qubit of the 4-qubit cluster.
        if (c.noise.depolarizing.size() == 1) {
            c.noise.depolarizing.assign(4, c.noise.depolarizing[0]);
        }
        if (c.noise.depolarizing.size() != 4) {
            throw SchemaError("setting 'depol' takes one value or four (one per cluster qubit)");
        }
    }
    if (has("force_bits")) {
        c.force_bits = as_bits(settings["force_bits"], "force_bits");
        c.mode = RunModeKind::kForce;
    }
    if (has("mode")) {
        auto m = as_choice(settings["mode"], "mode", {"enumerate", "sample", "force"});
        c.mode = m == "sample" ? RunModeKind::kSample : m == "force" ? RunModeKind::kForce : RunModeKind::kEnumerate;
    }
    if (c.mode == RunModeKind::kForce && !has("force_bits")) {
        throw SchemaError("mode 'force' needs force_bits");
    }
    if (c.mode != RunModeKind::kForce && has("force_bits")) {
        throw SchemaError("force_bits only applies in mode 'force'");
    }
    if (has("shots")) {
        if (c.mode != RunModeKind::kSample) throw SchemaError("shots only applies in mode 'sample'");
        c.shots = as_uint(settings["shots"], "shots");
        if (c.shots == 0) throw SchemaError("setting 'shots' must be positive");
    }
    if (has("seed")) c.seed = as_uint(settings["seed"], "seed");
    if (has("format")) c.format = as_choice(settings["format"], "format", {"json", "csv"}) == "csv" ? Format::kCsv : Format::kJson;
    if (has("out")) c.out = as_text(settings["out"], "out");
    if (has("detector_map")) {
        const auto &dm = settings["detector_map"];
        if (dm.is_object()) {
            std::string text;
            for (const auto &item : dm.items()) {
                text += (text.empty() ? "" : ",") + item.key() + "=" + as_text(item.value(), "detector_map");
            }
            c.detectors.override_with(text);
        } else {
            c.detectors.override_with(as_text(dm, "detector_map"));
        }
    }
    if (has("grid")) {
        auto g = as_uint(settings["grid"], "grid");
        if (g < 1 || g > 64) throw SchemaError("setting 'grid' must lie in [1, 64]");
        c.grid = static_cast<int>(g);
    }
    if (has("pattern")) c.pattern_path = as_text(settings["pattern"], "pattern");
    if (has("state")) c.state_path = as_text(settings["state"], "state");
    if (has("graph")) c.graph_path = as_text(settings["graph"], "graph");

    // Command-specific requirements.
    if (command == "rotate" && c.ordering != Ordering::kA && c.ordering != Ordering::kB) {
        throw SchemaError("rotate uses ordering a or b");
    }
    if (command == "fig3" && (!has("alpha") || !has("beta"))) {
        throw SchemaError("fig3 needs both alpha and beta");
    }
    if (command == "enumerate") {
        if (c.protocol.has_value() == c.pattern_path.has_value()) {
            throw SchemaError("enumerate needs exactly one of protocol or pattern");
        }
        if (c.protocol && (c.state_path || c.graph_path)) {
            throw SchemaError("enumerate with a protocol uses the protocol's own cluster");
        }
        if (c.state_path && c.graph_path) {
            throw SchemaError("give at most one of state or graph");
        }
        if (c.protocol == "rotation" && c.ordering != Ordering::kA && c.ordering != Ordering::kB) {
            throw SchemaError("the rotation protocol uses ordering a or b");
        }
    }

    // Echo the resolved settings in schema order; the output path is left out
    // so that identical runs written to different files stay byte-identical.
    for (const auto &key : allowed) {
        if (key == "out") continue;
        if (key == "alpha") c.echo[key] = ordered_json{{"text", c.alpha_text}, {"radians", c.alpha}};
        else if (key == "beta") c.echo[key] = ordered_json{{"text", c.beta_text}, {"radians", c.beta}};
        else if (key == "ordering") c.echo[key] = std::string(ordering_name(c.ordering));
        else if (key == "oracle") c.echo[key] = std::string(control_prep_name(c.oracle));
        else if (key == "ff") c.echo[key] = c.ff ? "on" : "off";
        else if (key == "compensate") c.echo[key] = c.compensate ? "on" : "off";
        else if (key == "input") c.echo[key] = c.input == RotationInput::kFixedPlus ? "fixed-plus" : "first-outcome";
        else if (key == "noise_p") c.echo[key] = c.noise.white_p;
        else if (key == "depol") c.echo[key] = c.noise.depolarizing;
        else if (key == "mode") c.echo[key] = c.mode == RunModeKind::kSample ? "sample" : c.mode == RunModeKind::kForce ? "force" : "enumerate";
        else if (key == "shots") c.echo[key] = c.mode == RunModeKind::kSample ? ordered_json(c.shots) : ordered_json(nullptr);
        else if (key == "seed") c.echo[key] = c.seed;
        else if (key == "force_bits") c.echo[key] = c.mode == RunModeKind::kForce ? ordered_json(c.force_bits) : ordered_json(nullptr);
        else if (key == "format") c.echo[key] = c.format == Format::kCsv ? "csv" : "json";
        else if (key == "detector_map") c.echo[key] = c.detectors.str();
        else if (key == "grid") c.echo[key] = c.grid;
        else if (key == "protocol") c.echo[key] = c.protocol ? ordered_json(*c.protocol) : ordered_json(nullptr);
        else if (key == "pattern") c.echo[key] = c.pattern_path ? ordered_json(*c.pattern_path) : ordered_json(nullptr);
        else if (key == "state") c.echo[key] = c.state_path ? ordered_json(*c.state_path) : ordered_json(nullptr);
        else if (key == "graph") c.echo[key] = c.graph_path ? ordered_json(*c.graph_path) : ordered_json(nullptr);
    }
    return c;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot read '{}'", path));
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw SchemaError(fmt::format("'{}' is not valid JSON: {}", path, e.what()));
    }
}

}  // namespace oneway::harness
