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

#ifndef ONEWAY_HARNESS_COMMANDS_H
#define ONEWAY_HARNESS_COMMANDS_H

#include <string>

#include "harness/config.h"
#include "harness/report.h"

namespace oneway::harness {

/// Version string written into every report.
std::string harness_version();

/// Runs a resolved subcommand and returns its report. Throws SchemaError,
/// IoError, ImpossibleBranchError, or std::invalid_argument from the core.
Report run_command(const RunConfig &config);

Report cmd_rotate(const RunConfig &config);
Report cmd_cnot(const RunConfig &config);
Report cmd_cphase(const RunConfig &config);
Report cmd_fidelity(const RunConfig &config);
Report cmd_enumerate(const RunConfig &config);
Report cmd_table1(const RunConfig &config);
Report cmd_table2(const RunConfig &config);
Report cmd_fig3(const RunConfig &config);
Report cmd_cphase_avg(const RunConfig &config);

/// Report text in the configured format.
std::string render(const Report &report, Format format);

}  // namespace oneway::harness

#endif  // ONEWAY_HARNESS_COMMANDS_H
