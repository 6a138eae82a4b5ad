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

#ifndef ONEWAY_SERIALIZE_H
#define ONEWAY_SERIALIZE_H

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "oneway/cluster.h"
#include "oneway/mbqc.h"
#include "oneway/noise.h"
#include "oneway/protocols.h"

namespace oneway {

/// Parses an angle in radians: a plain number ("0.5", "-1e-3") or a rational
/// multiple of pi ("pi", "-pi/4", "3pi/4", "3*pi/2", "pi/2"). Throws
/// std::invalid_argument otherwise.
double parse_angle(std::string_view text);

/// Angles in JSON documents may be numbers or parse_angle strings.
double angle_from_json(const nlohmann::json &j);

void to_json(nlohmann::json &j, const GraphSpec &g);
void from_json(const nlohmann::json &j, GraphSpec &g);

void to_json(nlohmann::json &j, const MeasurementSpec &m);
void from_json(const nlohmann::json &j, MeasurementSpec &m);

void to_json(nlohmann::json &j, const Pattern &p);
void from_json(const nlohmann::json &j, Pattern &p);

void to_json(nlohmann::json &j, const PauliFrame &f);

void to_json(nlohmann::json &j, const NoiseSpec &n);
void from_json(const nlohmann::json &j, NoiseSpec &n);

void to_json(nlohmann::json &j, const RotationJob &job);
void from_json(const nlohmann::json &j, RotationJob &job);

void to_json(nlohmann::json &j, const CnotJob &job);
void from_json(const nlohmann::json &j, CnotJob &job);

void to_json(nlohmann::json &j, const CphaseJob &job);
void from_json(const nlohmann::json &j, CphaseJob &job);

/// {"n": int, "amplitudes": [[re, im], ...]}; amplitudes are renormalized on read.
void to_json(nlohmann::json &j, const Ket &k);
Ket ket_from_json(const nlohmann::json &j);

}  // namespace oneway

#endif  // ONEWAY_SERIALIZE_H
