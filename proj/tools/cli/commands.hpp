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
 * @file commands.hpp
 * @brief The five subcommands and the exit-code policy around them.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace qpa::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kValidation = 3, kIo = 4 };

/// Runs one command and returns the files it produces; nothing is written here.
OutputSet run_command(const RunConfig& config, std::ostream& log);

/// Parses, runs and commits. Errors go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpa::cli
