// Copyright 2026 The trapion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file commands.hpp
 * Command-line front end. Each command writes its report to `out`,
 * diagnostics to `err`, and returns the process exit code.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "trapion/cli/config.hpp"

namespace trapion::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNoSolution = 2,
    kExitDegenerateOnly = 3,
    kExitVerificationFailed = 4,
    kExitIoFailure = 5,
    kExitDomain = 6,
};

struct SolveRequest {
    double nu = 1.0;
    std::optional<double> omega;
    std::optional<double> M;
};

int cmd_solve(const SolveRequest &req, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err);

struct SurfaceRequest {
    enum class Mode { Psi0, Curve, Points };
    Mode mode = Mode::Psi0;
    double nu = 1.0;
    double M = 0.0;
    GridAxis omega{-1.5, 1.5, 61};
    GridAxis eta{-1.5, 1.5, 61};
    std::string output_path = "-"; ///< "-" writes to `out`
};

/// `start:stop:count`
GridAxis parse_axis(const std::string &text);

int cmd_surface(const SurfaceRequest &req, std::ostream &out, std::ostream &err);

/// Full argument parsing and dispatch; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace trapion::cli
