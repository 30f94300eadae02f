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
#include "trapion/cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trapion/dynamics.hpp"
#include "trapion/errors.hpp"

namespace trapion::cli {

namespace {

using nlohmann::json;

constexpr double kVerifyTolerance = 1e-10;

json interval_json(const IntervalReport &r) {
    return {{"omega_below_nu", r.omega_below_nu}, {"delta_in_range", r.delta_in_range},
            {"eta_in_range", r.eta_in_range},     {"M_in_range", r.M_in_range},
            {"signs_consistent", r.signs_consistent}, {"all", r.all()}};
}

json solution_json(const ParameterSolution &s) {
    json j{{"family", std::string(to_string(s.label))}, {"nu", s.trap.nu},     {"omega", s.trap.omega},
           {"delta", s.trap.delta},        {"eta", s.trap.eta},   {"M", s.M},
           {"E0_plus", s.e0_plus},         {"E1_minus", s.e1_minus},
           {"degenerate", s.degenerate}};
    if (s.label == SolutionLabel::APlus || s.label == SolutionLabel::AMinus ||
        s.label == SolutionLabel::P1Plus || s.label == SolutionLabel::P1Minus) {
        j["intervals"] = interval_json(validate_intervals(s));
    } else {
        j["intervals"] = nullptr;
    }
    return j;
}

json omitted_json(std::string_view family, const std::string &reason) {
    return {{"family", std::string(family)}, {"omitted", true}, {"reason", reason}};
}

json residuals_json(const ConditionReport &r) {
    json j = json::object();
    for (const auto &x : r.residuals) {
        j[x.name] = std::abs(x.value);
    }
    return j;
}

// Writes a CSV either to `out` ("-") or to a file. Returns false if the file
// cannot be written.
bool write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        return static_cast<bool>(out);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        return false;
    }
    file << text;
    file.close();
    return static_cast<bool>(file);
}

std::string csv_row(std::initializer_list<double> values) {
    std::string row;
    bool first = true;
    for (double v : values) {
        if (!first) {
            row += ',';
        }
        row += format_number(v);
        first = false;
    }
    row += '\n';
    return row;
}

} // namespace

GridAxis parse_axis(const std::string &text) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) {
        throw UsageError("range '" + text + "' must be start:stop:count");
    }
    RunConfig scratch;
    scratch.set("t_start", text.substr(0, a));
    scratch.set("t_end", text.substr(a + 1, b - a - 1));
    scratch.set("steps", text.substr(b + 1));
    if (scratch.steps < 1 || !(scratch.t_end >= scratch.t_start)) {
        throw UsageError("range '" + text + "' needs count >= 1 and stop >= start");
    }
    return {scratch.t_start, scratch.t_end, scratch.steps};
}

int cmd_solve(const SolveRequest &req, std::ostream &out, std::ostream &err) {
    if (req.omega.has_value() == req.M.has_value()) {
        err << "solve: give exactly one of --omega or --M\n";
        return kExitUsage;
    }
    if (!(req.nu > 0.0)) {
        err << "solve: nu must be positive\n";
        return kExitUsage;
    }
    std::vector<ParameterSolution> found;
    if (req.omega) {
        try {
            for (const auto &s : solve_family_a(req.nu, *req.omega)) {
                found.push_back(s);
            }
        } catch (const DomainError &e) {
            out << omitted_json("A", e.what()).dump() << '\n';
        }
        try {
            for (const auto &s : solve_family_b(req.nu, *req.omega)) {
                found.push_back(s);
            }
        } catch (const DomainError &e) {
            out << omitted_json("B", e.what()).dump() << '\n';
        }
    } else {
        const auto pts = parameter_points(req.nu, *req.M);
        found = pts.points;
        for (const auto &o : pts.omitted) {
            out << omitted_json(to_string(o.label), o.reason).dump() << '\n';
        }
    }
    bool nondegenerate = false;
    for (const auto &s : found) {
        out << solution_json(s).dump() << '\n';
        nondegenerate = nondegenerate || !s.degenerate;
    }
    if (found.empty()) {
        return kExitNoSolution;
    }
    return nondegenerate ? kExitOk : kExitDegenerateOnly;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    ResolvedRun run;
    try {
        run = resolve(cfg);
        run.solution.trap.validate();
    } catch (const UsageError &e) {
        err << "verify: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "verify: " << e.what() << '\n';
        return kExitDomain;
    }
    const auto &trap = run.solution.trap;
    json report{{"family", to_string(cfg.family)},
                {"nu", trap.nu},
                {"omega", trap.omega},
                {"delta", trap.delta},
                {"eta", trap.eta},
                {"M", run.solution.M},
                {"degenerate", run.solution.degenerate}};

    const auto r0 = check_condition_psi0(trap, kVerifyTolerance);
    ConditionReport r1;
    try {
        r1 = check_conditions_psi1(trap, run.coeffs.ratio(), kVerifyTolerance);
    } catch (const Error &e) {
        report["pass"] = false;
        report["failing"] = "psi1_ratio";
        report["message"] = e.what();
        out << report.dump() << '\n';
        return kExitVerificationFailed;
    }
    json conditions = residuals_json(r0);
    conditions.update(residuals_json(r1));
    report["conditions"] = conditions;
    for (const ConditionReport *r : {&r0, static_cast<const ConditionReport *>(&r1)}) {
        if (const auto fail = r->first_failure()) {
            report["pass"] = false;
            report["failing"] = fail->name;
            report["residual"] = std::abs(fail->value);
            out << report.dump() << '\n';
            err << "verify: " << fail->name << " residual " << format_number(std::abs(fail->value))
                << " exceeds " << format_number(kVerifyTolerance) << '\n';
            return kExitVerificationFailed;
        }
    }

    bool pass = true;
    try {
        json eigen = json::object();
        for (const std::size_t levels : {cfg.n_max, 2 * cfg.n_max}) {
            const Truncation trunc(levels);
            const auto h = build_hamiltonian(trap, trunc);
            const auto psi0 = psi0_plus(trap, trunc);
            const auto psi1 = psi1_minus(trap, run.coeffs, trunc);
            const double e0 = eigen_residual(h.matrix, psi0);
            const double e1 = eigen_residual(h.matrix, psi1);
            pass = pass && e0 < kVerifyTolerance && e1 < kVerifyTolerance;
            eigen[std::to_string(levels)] = {{"psi0_plus", e0}, {"psi1_minus", e1}};
        }
        report["eigen_residuals"] = eigen;

        const SuperpositionCoeffs sup{cfg.c1, cfg.c2};
        const auto sys = prepare(trap, run.coeffs, sup, Truncation(cfg.n_max));
        const double overlap = std::abs(inner_product(sys.psi0().state, sys.psi1().state));
        report["orthogonality"] = overlap;
        if (!sys.degenerate()) {
            pass = pass && overlap < kVerifyTolerance;
        }
        report["norm_closed"] = sys.norm_closed();
        report["norm_direct"] = sys.norm_direct();
        pass = pass && std::abs(sys.norm_closed() - sys.norm_direct()) < kVerifyTolerance;
    } catch (const PreparationError &e) {
        report["pass"] = false;
        report["failing"] = e.residual_name();
        out << report.dump() << '\n';
        return kExitVerificationFailed;
    } catch (const Error &e) {
        err << "verify: " << e.what() << '\n';
        report["pass"] = false;
        report["message"] = e.what();
        out << report.dump() << '\n';
        return kExitVerificationFailed;
    }
    report["pass"] = pass;
    out << report.dump() << '\n';
    return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.steps < 2 || !(cfg.t_end > cfg.t_start)) {
        err << "simulate: needs steps >= 2 and t_end > t_start\n";
        return kExitUsage;
    }
    ResolvedRun run;
    try {
        run = resolve(cfg);
    } catch (const UsageError &e) {
        err << "simulate: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "simulate: " << e.what() << '\n';
        return kExitDomain;
    }

    std::optional<PreparedSystem> sys;
    try {
        sys.emplace(prepare(run.solution.trap, run.coeffs, {cfg.c1, cfg.c2}, Truncation(cfg.n_max)));
    } catch (const PreparationError &e) {
        err << "simulate: " << e.what() << '\n';
        out << json{{"pass", false}, {"failing", e.residual_name()}}.dump() << '\n';
        return kExitVerificationFailed;
    } catch (const Error &e) {
        err << "simulate: " << e.what() << '\n';
        return kExitDomain;
    }

    const auto ts = time_series(*sys, cfg.t_start, cfg.t_end, cfg.steps);
    std::string csv = "t,sigma_z_closed,sigma_z_numeric,n_closed,n_numeric\n";
    for (std::size_t i = 0; i < ts.times.size(); ++i) {
        csv += csv_row({ts.times[i], ts.sigma_z_closed[i], ts.sigma_z_numeric[i], ts.n_closed[i],
                        ts.n_numeric[i]});
    }
    if (!write_text(cfg.output_path, csv, out)) {
        err << "simulate: cannot write '" << cfg.output_path << "'\n";
        return kExitIoFailure;
    }

    json summary{{"output_path", cfg.output_path},
                 {"rows", ts.times.size()},
                 {"max_sigma_z_deviation", ts.max_sigma_z_deviation},
                 {"max_n_deviation", ts.max_n_deviation},
                 {"predicted_frequency", sys->frequency()},
                 {"degenerate", sys->degenerate()},
                 {"norm_closed", sys->norm_closed()}};
    auto estimate = [&](const std::vector<double> &v, const char *key) {
        try {
            summary[key] = dominant_frequency(v, ts.times).zero_crossing;
        } catch (const NoOscillationError &) {
            summary[key] = nullptr;
            summary["constant_signals"] = true;
        } catch (const DomainError &e) {
            summary[key] = nullptr;
            summary["frequency_note"] = e.what();
        }
    };
    summary["constant_signals"] = false;
    estimate(ts.sigma_z_closed, "frequency_sigma_z");
    estimate(ts.n_closed, "frequency_n");
    summary["frequency"] = summary["frequency_sigma_z"];
    if (cfg.output_path == "-") {
        err << summary.dump() << '\n';
    } else {
        out << summary.dump() << '\n';
    }
    return kExitOk;
}

int cmd_surface(const SurfaceRequest &req, std::ostream &out, std::ostream &err) {
    std::string csv;
    try {
        switch (req.mode) {
        case SurfaceRequest::Mode::Psi0:
            csv = "omega,eta,delta\n";
            for (const auto &s : psi0_surface(req.nu, req.omega, req.eta)) {
                csv += csv_row({s.omega, s.eta, s.delta});
            }
            break;
        case SurfaceRequest::Mode::Curve: {
            csv = "omega,eta,delta\n";
            const auto omegas = req.omega.values();
            for (const auto &c : psi1_curve(req.nu, req.M, omegas)) {
                csv += csv_row({c.omega, c.eta, c.delta});
            }
            break;
        }
        case SurfaceRequest::Mode::Points: {
            csv = "label,omega,eta,delta\n";
            const auto pts = parameter_points(req.nu, req.M);
            for (const auto &p : pts.points) {
                csv += std::string(to_string(p.label)) + ',' +
                       csv_row({p.trap.omega, p.trap.eta, p.trap.delta});
            }
            for (const auto &o : pts.omitted) {
                err << omitted_json(to_string(o.label), o.reason).dump() << '\n';
            }
            break;
        }
        }
    } catch (const Error &e) {
        err << "surface: " << e.what() << '\n';
        return kExitDomain;
    }
    if (!write_text(req.output_path, csv, out)) {
        err << "surface: cannot write '" << req.output_path << "'\n";
        return kExitIoFailure;
    }
    return kExitOk;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Qubit-oscillator eigenstate solver and simulator", "trapion"};
    app.require_subcommand(1);

    SolveRequest solve_req;
    double solve_omega = 0.0;
    double solve_M = 0.0;
    auto *solve = app.add_subcommand("solve", "List parameter solutions as JSON lines");
    solve->add_option("--nu", solve_req.nu, "Trap frequency");
    auto *solve_omega_opt = solve->add_option("--omega", solve_omega, "Rabi frequency");
    auto *solve_M_opt = solve->add_option("--M", solve_M, "Imaginary part of d1/d0");
    solve_omega_opt->excludes(solve_M_opt);

    // verify and simulate share the RunConfig keys as flags.
    std::map<std::string, std::string> overrides;
    std::string config_path;
    bool dump_config = false;
    auto add_run_options = [&](CLI::App *cmd) {
        cmd->add_option("--config", config_path, "key=value configuration file");
        cmd->add_flag("--dump-config", dump_config, "Print the resolved configuration and exit");
        for (const auto &key : config_keys()) {
            cmd->add_option("--" + key, overrides[key]);
        }
        cmd->add_option("-o", overrides["output_path"], "Output path");
    };
    auto *verify = app.add_subcommand("verify", "Check conditions, eigen-residuals and norms");
    add_run_options(verify);
    auto *simulate = app.add_subcommand("simulate", "Write the observable time series as CSV");
    add_run_options(simulate);

    SurfaceRequest surf;
    bool want_psi0 = false;
    bool want_curve = false;
    bool want_points = false;
    std::string omega_range;
    std::string eta_range;
    auto *surface = app.add_subcommand("surface", "Write condition surfaces, curves or points");
    surface->add_option("--nu", surf.nu, "Trap frequency");
    auto *f_psi0 = surface->add_flag("--psi0", want_psi0, "psi0 condition surface");
    auto *f_curve = surface->add_flag("--curve", want_curve, "psi1 curve at fixed M");
    auto *f_points = surface->add_flag("--points", want_points, "P1/P2 intersection points");
    f_psi0->excludes(f_curve)->excludes(f_points);
    f_curve->excludes(f_points);
    surface->add_option("--M", surf.M, "Imaginary part of d1/d0");
    surface->add_option("--omega", omega_range, "start:stop:count");
    surface->add_option("--eta", eta_range, "start:stop:count");
    surface->add_option("-o,--output", surf.output_path, "Output path, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        for (auto *sub : app.get_subcommands()) {
            err << sub->help();
        }
        if (app.get_subcommands().empty()) {
            err << app.help();
        }
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            if (solve_omega_opt->count() > 0) {
                solve_req.omega = solve_omega;
            }
            if (solve_M_opt->count() > 0) {
                solve_req.M = solve_M;
            }
            return cmd_solve(solve_req, out, err);
        }
        if (verify->parsed() || simulate->parsed()) {
            auto *cmd = verify->parsed() ? verify : simulate;
            RunConfig cfg;
            if (!config_path.empty()) {
                apply_config_file(cfg, config_path);
            }
            for (const auto &key : config_keys()) {
                if (cmd->get_option("--" + key)->count() > 0) {
                    cfg.set(key, overrides[key]);
                }
            }
            if (cmd->get_option("-o")->count() > 0) {
                cfg.set("output_path", overrides["output_path"]);
            }
            if (dump_config) {
                out << cfg.dump();
                return kExitOk;
            }
            return verify->parsed() ? cmd_verify(cfg, out, err) : cmd_simulate(cfg, out, err);
        }
        if (want_psi0) {
            surf.mode = SurfaceRequest::Mode::Psi0;
        } else if (want_curve) {
            surf.mode = SurfaceRequest::Mode::Curve;
        } else if (want_points) {
            surf.mode = SurfaceRequest::Mode::Points;
        } else {
            err << "surface: choose one of --psi0, --curve or --points\n" << surface->help();
            return kExitUsage;
        }
        if (!omega_range.empty()) {
            surf.omega = parse_axis(omega_range);
        }
        if (!eta_range.empty()) {
            surf.eta = parse_axis(eta_range);
        }
        if (surf.mode != SurfaceRequest::Mode::Psi0 && surface->get_option("--M")->count() == 0) {
            err << "surface: --curve and --points need --M\n";
            return kExitUsage;
        }
        return cmd_surface(surf, out, err);
    } catch (const UsageError &e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace trapion::cli
