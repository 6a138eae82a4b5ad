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

// oneway: command-line front end for the one-way computation simulator.
//
//   oneway rotate --alpha pi/4 --beta pi/2 --ordering a --format csv
//   oneway table2 --noise-p 0.872 --out table2.json
//
// Exit codes: 0 success, 2 bad flags or config, 3 I/O failure, 4 a forced
// branch that cannot occur.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "harness/commands.h"
#include "harness/config.h"

using namespace oneway;
using namespace oneway::harness;

namespace {

const std::map<std::string, std::string> kHelp{
    {"protocol", "built-in pattern to enumerate: rotation|cnot|cphase"},
    {"alpha", "first rotation angle, e.g. 0.3, pi/4, -3pi/4"},
    {"beta", "second rotation angle"},
    {"ordering", "photon/qubit ordering a|b|c|d"},
    {"oracle", "control operator before the C-NOT: id|h"},
    {"ff", "feed-forward on|off"},
    {"compensate", "undo the target Hadamard on photon B: on|off"},
    {"input", "rotation input: first-outcome|fixed-plus"},
    {"noise_p", "white-noise weight p of the pure cluster state"},
    {"depol", "per-qubit depolarizing strength (one value or four)"},
    {"mode", "enumerate|sample|force"},
    {"shots", "shots in sample mode"},
    {"seed", "64-bit sampling seed"},
    {"force_bits", "outcome bits in measurement order, e.g. 010"},
    {"format", "json|csv"},
    {"out", "output file (default: stdout)"},
    {"detector_map", "detector overrides, e.g. a1=01,a3=10"},
    {"grid", "grid points per angle"},
    {"pattern", "pattern JSON file"},
    {"state", "input state JSON file"},
    {"graph", "graph JSON file for the input cluster"},
};

const std::map<std::string, std::string> kCommandHelp{
    {"rotate", "single-qubit rotation, per-branch fidelities with and without feed-forward"},
    {"cnot", "C-NOT on the horseshoe cluster"},
    {"cphase", "C-Phase with control |+> and an arbitrary target"},
    {"fidelity", "stabilizer and overlap fidelity of the (noisy) lab cluster"},
    {"enumerate", "dump every branch of a pattern"},
    {"table1", "momentum-output rotation table"},
    {"table2", "C-NOT target fidelity table"},
    {"fig3", "rotation fidelities per photon-A detector"},
    {"cphase-avg", "conditional C-Phase target fidelity over an angle grid"},
};

struct Subcommand {
    CLI::App *app = nullptr;
    std::string config_path;
    std::map<std::string, std::string> scalars;
    std::vector<std::string> depol;
};

std::string flag_name(const std::string &key) {
    std::string out = key;
    std::replace(out.begin(), out.end(), '_', '-');
    return "--" + out;
}

int write_output(const RunConfig &config, const std::string &text) {
    if (!config.out) {
        std::cout << text;
        std::cout.flush();
        return std::cout ? 0 : 3;
    }
    std::ofstream out(*config.out, std::ios::binary);
    if (!out) {
        throw IoError(fmt::format("cannot open '{}' for writing", *config.out));
    }
    out << text;
    out.close();
    if (!out) {
        throw IoError(fmt::format("failed writing '{}'", *config.out));
    }
    return 0;
}

int run(int argc, char **argv) {
    CLI::App app{"one-way quantum computation on 2-photon 4-qubit cluster states"};
    app.set_version_flag("--version", harness_version());
    app.require_subcommand(1);

    std::map<std::string, Subcommand> subs;
    for (const auto &name : command_names()) {
        auto &sub = subs[name];
        sub.app = app.add_subcommand(name, kCommandHelp.at(name));
        sub.app->add_option("--config", sub.config_path, "JSON file with settings (flags override it)");
        for (const auto &key : allowed_keys(name)) {
            if (key == "depol") {
                sub.app->add_option(flag_name(key), sub.depol, kHelp.at(key))->expected(1, 4)->allow_extra_args(false);
            } else {
                sub.app->add_option(flag_name(key), sub.scalars[key], kHelp.at(key));
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return static_cast<int>(ExitCode::kSchema);
    }

    for (auto &[name, sub] : subs) {
        if (!sub.app->parsed()) continue;
        nlohmann::json settings = nlohmann::json::object();
        if (!sub.config_path.empty()) {
            settings = read_json_file(sub.config_path);
            if (!settings.is_object()) {
                throw SchemaError("config file must hold a JSON object");
            }
        }
        for (const auto &key : allowed_keys(name)) {
            auto *opt = sub.app->get_option(flag_name(key));
            if (opt->count() == 0) continue;
            if (key == "depol") {
                settings[key] = sub.depol;
            } else {
                settings[key] = sub.scalars[key];
            }
        }
        auto config = resolve_config(name, settings);
        auto report = run_command(config);
        return write_output(config, render(report, config.format));
    }
    return static_cast<int>(ExitCode::kSchema);
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const IoError &e) {
        std::cerr << "oneway: " << e.what() << "\n";
        return static_cast<int>(ExitCode::kIo);
    } catch (const ImpossibleBranchError &e) {
        std::cerr << "oneway: impossible branch: " << e.what() << "\n";
        return static_cast<int>(ExitCode::kImpossibleBranch);
    } catch (const std::invalid_argument &e) {
        std::cerr << "oneway: " << e.what() << "\n";
        return static_cast<int>(ExitCode::kSchema);
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "oneway: " << e.what() << "\n";
        return static_cast<int>(ExitCode::kSchema);
    }
}
