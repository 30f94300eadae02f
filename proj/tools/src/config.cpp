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
#include "trapion/cli/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "trapion/errors.hpp"

namespace trapion::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    const std::string s(trim(text));
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw UsageError("invalid number for " + std::string(key) + ": '" + s + "'");
    }
    if (used != s.size()) {
        throw UsageError("invalid number for " + std::string(key) + ": '" + s + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    const auto s = trim(text);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("invalid count for " + std::string(key) + ": '" + std::string(s) + "'");
    }
    return v;
}

void set_re(std::complex<double> &z, double v) { z.real(v); }
void set_im(std::complex<double> &z, double v) { z.imag(v); }

} // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_string(Family f) {
    switch (f) {
    case Family::APlus:
        return "A+";
    case Family::AMinus:
        return "A-";
    case Family::BPlus:
        return "B+";
    case Family::BMinus:
        return "B-";
    case Family::Explicit:
        return "explicit";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    const auto t = trim(text);
    for (auto f : {Family::APlus, Family::AMinus, Family::BPlus, Family::BMinus, Family::Explicit}) {
        if (t == to_string(f)) {
            return f;
        }
    }
    throw UsageError("unknown family '" + std::string(t) + "' (expected A+, A-, B+, B- or explicit)");
}

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys{
        "nu",    "omega", "family", "eta",   "delta", "M",     "d0_re",  "d0_im",
        "d1_re", "d1_im", "c1_re",  "c1_im", "c2_re", "c2_im", "n_max",  "t_start",
        "t_end", "steps", "output_path"};
    return keys;
}

void RunConfig::set(std::string_view key, std::string_view value) {
    auto num = [&] { return parse_double(key, value); };
    auto d1_ref = [&]() -> std::complex<double> & {
        if (!d1) {
            d1 = std::complex<double>{0.0, 0.0};
        }
        return *d1;
    };
    if (key == "nu") {
        nu = num();
    } else if (key == "omega") {
        omega = num();
    } else if (key == "family") {
        family = parse_family(value);
    } else if (key == "eta") {
        eta = num();
    } else if (key == "delta") {
        delta = num();
    } else if (key == "M") {
        M = num();
    } else if (key == "d0_re") {
        set_re(d0, num());
    } else if (key == "d0_im") {
        set_im(d0, num());
    } else if (key == "d1_re") {
        set_re(d1_ref(), num());
    } else if (key == "d1_im") {
        set_im(d1_ref(), num());
    } else if (key == "c1_re") {
        set_re(c1, num());
    } else if (key == "c1_im") {
        set_im(c1, num());
    } else if (key == "c2_re") {
        set_re(c2, num());
    } else if (key == "c2_im") {
        set_im(c2, num());
    } else if (key == "n_max") {
        n_max = parse_count(key, value);
    } else if (key == "t_start") {
        t_start = num();
    } else if (key == "t_end") {
        t_end = num();
    } else if (key == "steps") {
        steps = parse_count(key, value);
    } else if (key == "output_path") {
        output_path = std::string(trim(value));
    } else {
        throw UsageError("unknown config key '" + std::string(key) + "'");
    }
}

std::string RunConfig::dump() const {
    std::ostringstream out;
    auto line = [&](const char *key, const std::string &v) { out << key << '=' << v << '\n'; };
    auto num = [&](const char *key, double v) { line(key, format_number(v)); };
    num("nu", nu);
    num("omega", omega);
    line("family", to_string(family));
    if (eta) {
        num("eta", *eta);
    }
    if (delta) {
        num("delta", *delta);
    }
    if (M) {
        num("M", *M);
    }
    num("d0_re", d0.real());
    num("d0_im", d0.imag());
    if (d1) {
        num("d1_re", d1->real());
        num("d1_im", d1->imag());
    }
    num("c1_re", c1.real());
    num("c1_im", c1.imag());
    num("c2_re", c2.real());
    num("c2_im", c2.imag());
    line("n_max", std::to_string(n_max));
    num("t_start", t_start);
    num("t_end", t_end);
    line("steps", std::to_string(steps));
    line("output_path", output_path);
    return out.str();
}

void apply_config_text(RunConfig &cfg, std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void apply_config_file(RunConfig &cfg, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str());
}

ResolvedRun resolve(const RunConfig &cfg) {
    ParameterSolution sol{};
    switch (cfg.family) {
    case Family::APlus:
    case Family::AMinus:
        sol = solve_family_a(cfg.nu, cfg.omega)[cfg.family == Family::APlus ? 0 : 1];
        break;
    case Family::BPlus:
    case Family::BMinus:
        sol = solve_family_b(cfg.nu, cfg.omega)[cfg.family == Family::BPlus ? 0 : 1];
        break;
    case Family::Explicit:
        if (!cfg.eta || !cfg.delta || !cfg.M) {
            throw UsageError("family=explicit needs eta, delta and M");
        }
        sol.label = SolutionLabel::APlus;
        sol.trap = TrapParams{cfg.nu, cfg.omega, 0.0, 0.0};
        break;
    }
    if (cfg.eta) {
        sol.trap.eta = *cfg.eta;
    }
    if (cfg.delta) {
        sol.trap.delta = *cfg.delta;
    }
    if (cfg.M) {
        sol.M = *cfg.M;
    }
    sol.e0_plus = energy_psi0_plus(sol.trap);
    sol.e1_minus = energy_psi1_minus(sol.trap);
    sol.degenerate = sol.e0_plus == sol.e1_minus;
    const EigenCoeffs coeffs{cfg.d0, cfg.d1.value_or(Complex{0.0, sol.M} * cfg.d0)};
    return {sol, coeffs};
}

} // namespace trapion::cli
