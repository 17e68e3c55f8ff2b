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

/**
 * @file run_config.hpp
 * @brief Command-line parameters, their defaults, and manifest round trips.
 *
 * Values are resolved in this order, later ones winning: built-in defaults,
 * a --manifest written by an earlier run, a key=value --config file, and
 * explicit flags.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpa/encoder.hpp"
#include "qpa/evolution.hpp"
#include "qpa/report.hpp"

namespace qpa::cli {

enum class Command { EncodeKe, Evolve, Fidelity, Metrics, ErrorBudget };

std::string_view command_name(Command command);

struct RunConfig {
    Command command = Command::Metrics;

    int qubits = 5;
    double half_range = 10.0;
    double dt = 0.1;
    int steps = 1;
    std::vector<int> trotter_steps{10};
    double k0 = 1.0;
    double mass = 1.0;
    std::string potential = "single";
    double eta = 1.0;
    std::vector<int> potential_qubits;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    std::string mode = "centered";
    std::string format = "csv";

    std::string method = "qate";
    std::string window;
    int cp_budget = -1;  // negative means n - 1

    int n_min = 3;
    int n_max = 9;

    std::optional<double> h;   // defaults to 2^-qubits
    std::optional<double> l2;  // defaults to the QATE two-qubit count for --qubits
    double gate_variance = 0.0;
    double t1 = 100.0;
    double t2 = 100.0;
    double readout_variance = 0.0;

    std::string out = "qpa-out";  // not part of the manifest
};

/// Bad flags, values or combinations. `help` is set when the user asked for help.
class UsageError : public std::runtime_error {
   public:
    UsageError(const std::string& message, bool help = false) : std::runtime_error(message), help_(help) {}
    bool help() const noexcept { return help_; }

   private:
    bool help_;
};

/// Parses arguments (without the program name). Throws UsageError, and
/// qpa::Error(Io) when a config or manifest file cannot be read.
RunConfig parse_args(const std::vector<std::string>& args);

/// Every parameter except the output directory, as pretty-printed JSON.
std::string manifest_json(const RunConfig& config);

PotentialSpec potential_spec(const RunConfig& config, const Grid& grid);
EvolutionConfig evolution_config(const RunConfig& config, int n_qubits, int trotter_steps);

/// Half-indices from "a..b" ranges and single values separated by commas.
/// Throws InvalidArgument on malformed text.
std::vector<std::uint64_t> parse_window(const std::string& text);

}  // namespace qpa::cli
