// Copyright 2026 The QPA-Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "run_config.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpa/format.hpp"

namespace qpa::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Parsed {
    std::unique_ptr<CLI::App> app;
    RunConfig config;
    std::string manifest;
};

constexpr const char* kCommandNames[] = {"encode-ke", "evolve", "fidelity", "metrics", "error-budget"};

std::unique_ptr<CLI::App> make_app(RunConfig& c, std::string& manifest) {
    auto app = std::make_unique<CLI::App>("Pyramid-encoded wave-packet simulation experiments", "qpa-sim");
    app->require_subcommand(1);
    // --h names the error-budget grid step, so help is long-form only.
    app->set_help_flag("--help", "Print this help message and exit");
    app->set_config("--config", "", "key=value file; explicit flags take precedence");
    app->add_option("--manifest", manifest, "Replay the parameters of an earlier run's manifest.json");

    app->add_option("--qubits", c.qubits, "Register width n")->capture_default_str();
    app->add_option("--d", c.half_range, "Grid half-range; positions span (-d, d)")->capture_default_str();
    app->add_option("--dt", c.dt, "Time per reported step")->capture_default_str();
    app->add_option("--steps", c.steps, "Reported steps after t = 0")->capture_default_str();
    app->add_option("--trotter-steps", c.trotter_steps, "Substeps per reported step; a list sweeps")
        ->delimiter(',')
        ->capture_default_str();
    app->add_option("--k0", c.k0, "Initial packet wavenumber")->capture_default_str();
    app->add_option("--mass", c.mass, "Particle mass")->capture_default_str();
    app->add_option("--potential", c.potential, "Potential shape")
        ->check(CLI::IsMember({"none", "single", "double", "multi"}))
        ->capture_default_str();
    app->add_option("--eta", c.eta, "Potential step height")->capture_default_str();
    app->add_option("--potential-qubits", c.potential_qubits, "Qubits carrying the potential rotations")
        ->delimiter(',');
    app->add_option("--shots", c.shots, "Measurement shots")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
    app->add_option("--mode", c.mode, "Transform convention")
        ->check(CLI::IsMember({"paper", "centered"}))
        ->capture_default_str();
    app->add_option("--out", c.out, "Output directory")->capture_default_str();
    app->add_option("--format", c.format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    app->add_option("--method", c.method, "Kinetic encoder (encode-ke)")
        ->check(CLI::IsMember({"qate", "qwe", "direct"}))
        ->capture_default_str();
    app->add_option("--window", c.window, "Half-indices kept exact by qwe, e.g. 11..15 or 1,2,3,4");
    app->add_option("--cp-budget", c.cp_budget, "Controlled-phase budget for qwe; negative means n-1")
        ->capture_default_str();

    app->add_option("--n-min", c.n_min, "First width of a sweep (fidelity, metrics)")->capture_default_str();
    app->add_option("--n-max", c.n_max, "Last width of a sweep (fidelity, metrics)")->capture_default_str();

    app->add_option("--h", c.h, "Grid step for error-budget; default 2^-qubits");
    app->add_option("--l2", c.l2, "Two-qubit gate count for error-budget; default from the QATE circuit");
    app->add_option("--gate-variance", c.gate_variance, "Per-gate error variance")->capture_default_str();
    app->add_option("--t1", c.t1, "Relaxation time")->capture_default_str();
    app->add_option("--t2", c.t2, "Dephasing time")->capture_default_str();
    app->add_option("--readout-variance", c.readout_variance, "Readout error variance")->capture_default_str();

    const char* descriptions[] = {"Encode the kinetic diagonal and compare it with its target",
                                  "Evolve the wave packet and compare it with the classical reference",
                                  "Sweep register widths and report final-step fidelities",
                                  "Gate counts and depths of the kinetic encoder",
                                  "Itemized closed-form error estimate"};
    for (std::size_t i = 0; i < std::size(kCommandNames); ++i) {
        auto* sub = app->add_subcommand(kCommandNames[i], descriptions[i]);
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->fallthrough();
        sub->final_callback([&c, i] { c.command = static_cast<Command>(i); });
    }
    return app;
}

Parsed parse_once(const std::vector<std::string>& args) {
    Parsed p;
    p.app = make_app(p.config, p.manifest);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        p.app->parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(p.app->help(), true);
    } catch (const CLI::CallForAllHelp&) {
        throw UsageError(p.app->help("", CLI::AppFormatMode::All), true);
    } catch (const CLI::FileError& e) {
        throw Error(ErrorCode::Io, e.what());
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\nRun with --help for usage.");
    }
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string token(const Json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_number_float()) {
        return format_double(value.get<double>());
    }
    if (value.is_number_integer() || value.is_number_unsigned()) {
        return value.dump();
    }
    if (value.is_array()) {
        std::string out;
        for (const auto& v : value) {
            out += (out.empty() ? "" : ",") + token(v);
        }
        return out;
    }
    throw UsageError("unsupported manifest value " + value.dump());
}

/// Tokens for every manifest parameter the user did not set explicitly.
std::vector<std::string> manifest_tokens(const Parsed& first) {
    Json manifest;
    try {
        manifest = Json::parse(read_file(first.manifest));
    } catch (const Json::exception& e) {
        throw UsageError("malformed manifest '" + first.manifest + "': " + e.what());
    }
    const std::string command = manifest.value("command", "");
    if (command != command_name(first.config.command)) {
        throw UsageError("manifest '" + first.manifest + "' records command '" + command + "', not '" +
                         std::string(command_name(first.config.command)) + "'");
    }
    std::vector<std::string> tokens;
    const Json parameters = manifest.value("parameters", Json::object());
    for (const auto& [key, value] : parameters.items()) {
        const CLI::Option* opt = first.app->get_option_no_throw("--" + key);
        if (opt == nullptr || key == "out" || key == "manifest" || key == "config") {
            throw UsageError("manifest '" + first.manifest + "' has unknown parameter '" + key + "'");
        }
        if (opt->count() > 0) {
            continue;
        }
        const std::string text = token(value);
        if (!text.empty()) {
            tokens.push_back("--" + key);
            tokens.push_back(text);
        }
    }
    return tokens;
}

}  // namespace

std::string_view command_name(Command command) { return kCommandNames[static_cast<int>(command)]; }

RunConfig parse_args(const std::vector<std::string>& args) {
    Parsed first = parse_once(args);
    if (first.manifest.empty()) {
        return first.config;
    }
    std::vector<std::string> replay = manifest_tokens(first);
    replay.insert(replay.end(), args.begin(), args.end());
    return parse_once(replay).config;
}

std::string manifest_json(const RunConfig& c) {
    Json p;
    p["qubits"] = c.qubits;
    p["d"] = c.half_range;
    p["dt"] = c.dt;
    p["steps"] = c.steps;
    p["trotter-steps"] = c.trotter_steps;
    p["k0"] = c.k0;
    p["mass"] = c.mass;
    p["potential"] = c.potential;
    p["eta"] = c.eta;
    p["potential-qubits"] = c.potential_qubits;
    p["shots"] = c.shots;
    p["seed"] = c.seed;
    p["mode"] = c.mode;
    p["format"] = c.format;
    p["method"] = c.method;
    p["window"] = c.window;
    p["cp-budget"] = c.cp_budget;
    p["n-min"] = c.n_min;
    p["n-max"] = c.n_max;
    if (c.h) p["h"] = *c.h;
    if (c.l2) p["l2"] = *c.l2;
    p["gate-variance"] = c.gate_variance;
    p["t1"] = c.t1;
    p["t2"] = c.t2;
    p["readout-variance"] = c.readout_variance;

    Json m;
    m["command"] = command_name(c.command);
    m["parameters"] = std::move(p);
    return m.dump(2) + "\n";
}

PotentialSpec potential_spec(const RunConfig& c, const Grid& grid) {
    PotentialKind kind = PotentialKind::None;
    if (c.potential == "single") {
        kind = PotentialKind::SingleStep;
    } else if (c.potential == "double") {
        kind = PotentialKind::DoubleStep;
    } else if (c.potential == "multi") {
        kind = PotentialKind::MultiStep;
    }
    return PotentialSpec::from_qubits(grid, kind, c.eta, c.potential_qubits);
}

EvolutionConfig evolution_config(const RunConfig& c, int n_qubits, int trotter_steps) {
    EvolutionConfig e;
    e.grid = Grid::make(c.half_range, n_qubits);
    e.packet.k0 = c.k0;
    e.potential = potential_spec(c, e.grid);
    e.dt = c.dt;
    e.trotter_steps = trotter_steps;
    e.total_steps = c.steps;
    e.mode = parse_mode(c.mode);
    e.shots = c.shots;
    e.seed = c.seed;
    e.mass = c.mass;
    validate(e);
    return e;
}

std::vector<std::uint64_t> parse_window(const std::string& text) {
    auto number = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw Error(ErrorCode::InvalidArgument, "malformed window '" + text + "'");
        }
        return v;
    };
    std::vector<std::uint64_t> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view part = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(number(part));
            continue;
        }
        const auto lo = number(part.substr(0, dots));
        const auto hi = number(part.substr(dots + 2));
        if (hi < lo) {
            throw Error(ErrorCode::InvalidArgument, "empty window range '" + std::string(part) + "'");
        }
        for (auto i = lo; i <= hi; ++i) out.push_back(i);
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "window is empty");
    }
    return out;
}

}  // namespace qpa::cli
