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
 * @file config.hpp
 * Flat key=value run configuration shared by the verify and simulate
 * commands. Complex entries are split into _re/_im keys.
 */

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trapion/params.hpp"

namespace trapion::cli {

/// Raised for malformed configuration text or values; maps to exit code 1.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Family { APlus, AMinus, BPlus, BMinus, Explicit };

std::string to_string(Family f);
Family parse_family(std::string_view text);

struct RunConfig {
    double nu = 1.0;
    double omega = -0.5;
    Family family = Family::AMinus;
    std::optional<double> eta;
    std::optional<double> delta;
    std::optional<double> M;
    std::complex<double> d0{1.0, 0.0};
    std::optional<std::complex<double>> d1; ///< defaults to i M d0
    std::complex<double> c1{0.70710678118654752, 0.0};
    std::complex<double> c2{0.70710678118654752, 0.0};
    std::size_t n_max = 64;
    double t_start = 0.0;
    double t_end = 50.0;
    std::size_t steps = 2001;
    std::string output_path = "trapion_simulation.csv";

    /// Sets one entry from text. Throws UsageError on an unknown key or bad value.
    void set(std::string_view key, std::string_view value);

    /// key=value lines in a fixed order; unset optional entries are omitted.
    [[nodiscard]] std::string dump() const;
};

/// Every key accepted by RunConfig::set, in dump order.
const std::vector<std::string> &config_keys();

/// Applies `key=value` lines on top of `cfg`. Blank lines and text after
/// `#` are ignored.
void apply_config_text(RunConfig &cfg, std::string_view text);

/// Reads and applies a config file. Throws UsageError if it cannot be read.
void apply_config_file(RunConfig &cfg, const std::string &path);

/// Parameters a config resolves to: the named family solution, with any
/// explicit eta/delta/M entries taking precedence.
struct ResolvedRun {
    ParameterSolution solution;
    EigenCoeffs coeffs;
};

/// Throws DomainError if the family has no solution at (nu, omega) and
/// UsageError if an explicit family lacks eta, delta or M.
ResolvedRun resolve(const RunConfig &cfg);

/// "%.17g"
std::string format_number(double x);

} // namespace trapion::cli
