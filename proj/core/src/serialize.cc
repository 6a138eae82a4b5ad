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

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oneway {

using nlohmann::json;

namespace {

double parse_number(std::string_view text, std::string_view whole) {
    // std::from_chars for double is missing from some libstdc++ builds.
    std::string buf(text);
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
    }
    if (used != buf.size()) {
        throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
    }
    return v;
}

template <typename T>
T required(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw std::invalid_argument(std::string("missing required field '") + key + "'");
    }
    return j.at(key).get<T>();
}

void reject_unknown(const json &j, std::initializer_list<std::string_view> known, std::string_view what) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON object");
    }
    for (const auto &item : j.items()) {
        bool ok = false;
        for (auto k : known) {
            ok |= item.key() == k;
        }
        if (!ok) {
            throw std::invalid_argument("unknown field '" + item.key() + "' in " + std::string(what));
        }
    }
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string_view whole = text;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto pi_at = text.find("pi");
    if (pi_at == std::string_view::npos) {
        return parse_number(text, whole);
    }
    std::string_view coeff = text.substr(0, pi_at);
    std::string_view rest = text.substr(pi_at + 2);
    if (!coeff.empty() && coeff.back() == '*') {
        coeff.remove_suffix(1);
    }
    double c = 1;
    if (coeff == "-") {
        c = -1;
    } else if (coeff == "+" || coeff.empty()) {
        c = 1;
    } else {
        c = parse_number(coeff, whole);
    }
    double d = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
        }
        d = parse_number(rest.substr(1), whole);
        if (d == 0) {
            throw std::invalid_argument("angle denominator is zero in '" + std::string(whole) + "'");
        }
    }
    return c * std::numbers::pi / d;
}

double angle_from_json(const json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return parse_angle(j.get<std::string>());
    }
    throw std::invalid_argument("angle must be a number or a string such as \"pi/4\"");
}

void to_json(json &j, const GraphSpec &g) {
    json edges = json::array();
    for (auto [a, b] : g.edges) {
        edges.push_back({a, b});
    }
    j = json{{"n", g.n_qubits}, {"edges", edges}};
}

void from_json(const json &j, GraphSpec &g) {
    reject_unknown(j, {"n", "edges"}, "graph");
    g.n_qubits = required<int>(j, "n");
    g.edges.clear();
    for (const auto &e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("graph edges must be [i, j] pairs");
        }
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    g.validate();
}

void to_json(json &j, const MeasurementSpec &m) {
    j = json{{"qubit", m.qubit},
             {"plane", plane_name(m.plane)},
             {"angle", m.angle},
             {"sign_deps", m.sign_deps},
             {"label", m.label}};
}

void from_json(const json &j, MeasurementSpec &m) {
    reject_unknown(j, {"qubit", "plane", "angle", "sign_deps", "label"}, "measurement step");
    m.qubit = required<int>(j, "qubit");
    m.plane = parse_plane(j.value("plane", std::string("equatorial")));
    m.angle = j.contains("angle") ? angle_from_json(j.at("angle")) : 0.0;
    m.sign_deps = j.value("sign_deps", std::vector<int>{});
    m.label = j.value("label", std::string{});
}

void to_json(json &j, const Pattern &p) {
    json rules = json::object();
    for (const auto &[q, rule] : p.byproducts) {
        rules[std::to_string(q)] = json{{"x", rule.x}, {"z", rule.z}};
    }
    j = json{{"steps", p.steps}, {"outputs", p.outputs}, {"byproduct_rules", rules}};
}

void from_json(const json &j, Pattern &p) {
    reject_unknown(j, {"steps", "outputs", "byproduct_rules"}, "pattern");
    p.steps = j.value("steps", std::vector<MeasurementSpec>{});
    p.outputs = j.value("outputs", std::vector<int>{});
    p.byproducts.clear();
    const json rules = j.value("byproduct_rules", json::object());
    if (!rules.is_object()) {
        throw std::invalid_argument("byproduct_rules must be a JSON object");
    }
    for (const auto &item : rules.items()) {
        int q;
        const auto &key = item.key();
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), q);
        if (ec != std::errc() || ptr != key.data() + key.size()) {
            throw std::invalid_argument("byproduct rule keys must be qubit indices");
        }
        reject_unknown(item.value(), {"x", "z"}, "byproduct rule");
        p.byproducts[q] = ByproductRule{item.value().value("x", std::vector<int>{}),
                                        item.value().value("z", std::vector<int>{})};
    }
    p.validate();
}

void to_json(json &j, const PauliFrame &f) {
    j = json::object();
    for (const auto &e : f.entries) {
        j[std::to_string(e.qubit)] = json{{"x", e.x}, {"z", e.z}};
    }
}

void to_json(json &j, const NoiseSpec &n) { j = json{{"white_p", n.white_p}, {"depolarizing", n.depolarizing}}; }

void from_json(const json &j, NoiseSpec &n) {
    reject_unknown(j, {"white_p", "depolarizing"}, "noise spec");
    n.white_p = j.value("white_p", 1.0);
    n.depolarizing = j.value("depolarizing", std::vector<double>{});
}

namespace {

json filter_json(const std::optional<std::vector<int>> &f) { return f ? json(*f) : json(nullptr); }

std::optional<std::vector<int>> filter_from(const json &j) {
    if (!j.contains("branch_filter") || j.at("branch_filter").is_null()) {
        return std::nullopt;
    }
    return j.at("branch_filter").get<std::vector<int>>();
}

}  // namespace

void to_json(json &j, const RotationJob &job) {
    j = json{{"alpha", job.alpha},
             {"beta", job.beta},
             {"ordering", ordering_name(job.ordering)},
             {"ff_enabled", job.ff_enabled},
             {"input", job.input == RotationInput::kFixedPlus ? "fixed_plus" : "from_first_outcome"},
             {"branch_filter", filter_json(job.branch_filter)}};
}

void from_json(const json &j, RotationJob &job) {
    reject_unknown(j, {"alpha", "beta", "ordering", "ff_enabled", "input", "branch_filter"}, "rotation job");
    job.alpha = j.contains("alpha") ? angle_from_json(j.at("alpha")) : 0.0;
    job.beta = j.contains("beta") ? angle_from_json(j.at("beta")) : 0.0;
    job.ordering = parse_ordering(j.value("ordering", std::string("a")));
    job.ff_enabled = j.value("ff_enabled", true);
    auto input = j.value("input", std::string("from_first_outcome"));
    if (input == "fixed_plus") {
        job.input = RotationInput::kFixedPlus;
    } else if (input == "from_first_outcome") {
        job.input = RotationInput::kFromFirstOutcome;
    } else {
        throw std::invalid_argument("unknown rotation input mode '" + input + "'");
    }
    job.branch_filter = filter_from(j);
}

void to_json(json &j, const CnotJob &job) {
    j = json{{"alpha", job.alpha},
             {"o_choice", control_prep_name(job.o)},
             {"compensate_target_hadamard", job.compensate_target_hadamard},
             {"branch_filter", filter_json(job.branch_filter)}};
}

void from_json(const json &j, CnotJob &job) {
    reject_unknown(j, {"alpha", "o_choice", "compensate_target_hadamard", "branch_filter"}, "cnot job");
    job.alpha = j.contains("alpha") ? angle_from_json(j.at("alpha")) : 0.0;
    job.o = parse_control_prep(j.value("o_choice", std::string("h")));
    job.compensate_target_hadamard = j.value("compensate_target_hadamard", true);
    job.branch_filter = filter_from(j);
}

void to_json(json &j, const CphaseJob &job) {
    j = json{{"alpha", job.alpha}, {"beta", job.beta}, {"branch_filter", filter_json(job.branch_filter)}};
}

void from_json(const json &j, CphaseJob &job) {
    reject_unknown(j, {"alpha", "beta", "branch_filter"}, "cphase job");
    job.alpha = j.contains("alpha") ? angle_from_json(j.at("alpha")) : 0.0;
    job.beta = j.contains("beta") ? angle_from_json(j.at("beta")) : 0.0;
    job.branch_filter = filter_from(j);
}

void to_json(json &j, const Ket &k) {
    json amps = json::array();
    for (const auto &a : k.amplitudes()) {
        amps.push_back({a.real(), a.imag()});
    }
    j = json{{"n", k.n_qubits()}, {"amplitudes", amps}};
}

Ket ket_from_json(const json &j) {
    reject_unknown(j, {"n", "amplitudes"}, "state");
    std::vector<Complex> amps;
    for (const auto &a : required<json>(j, "amplitudes")) {
        if (a.is_number()) {
            amps.emplace_back(a.get<double>(), 0.0);
        } else if (a.is_array() && a.size() == 2) {
            amps.emplace_back(a[0].get<double>(), a[1].get<double>());
        } else {
            throw std::invalid_argument("amplitudes must be numbers or [re, im] pairs");
        }
    }
    Ket k = Ket::from_amplitudes(std::move(amps));
    if (j.contains("n") && j.at("n").get<int>() != k.n_qubits()) {
        throw std::invalid_argument("state 'n' does not match the amplitude count");
    }
    return k;
}

}  // namespace oneway
