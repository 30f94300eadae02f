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
#include "trapion/params.hpp"

#include <cmath>
#include <sstream>

#include "trapion/errors.hpp"

namespace trapion {

namespace {

void require_positive_nu(double nu) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw DomainError("nu must be positive and finite");
    }
}

double real_checked(Complex z, const char *what) {
    if (std::abs(z.imag()) > kImaginaryResidue * std::max(1.0, std::abs(z))) {
        std::ostringstream msg;
        msg << what << " = " << z << " is not real";
        throw Error(msg.str());
    }
    return z.real();
}

ParameterSolution make_solution(SolutionLabel label, double nu, double omega, double delta,
                                double eta, double M, bool degenerate) {
    TrapParams trap{nu, omega, delta, eta};
    return {label, trap, M, degenerate, energy_psi0_plus(trap), energy_psi1_minus(trap)};
}

} // namespace

std::string_view to_string(SolutionLabel label) {
    switch (label) {
    case SolutionLabel::APlus:
        return "A+";
    case SolutionLabel::AMinus:
        return "A-";
    case SolutionLabel::BPlus:
        return "B+";
    case SolutionLabel::BMinus:
        return "B-";
    case SolutionLabel::P1Plus:
        return "P1+";
    case SolutionLabel::P1Minus:
        return "P1-";
    case SolutionLabel::P2Plus:
        return "P2+";
    case SolutionLabel::P2Minus:
        return "P2-";
    }
    return "?";
}

bool is_nondegenerate_manifold(SolutionLabel label) {
    switch (label) {
    case SolutionLabel::APlus:
    case SolutionLabel::AMinus:
    case SolutionLabel::P1Plus:
    case SolutionLabel::P1Minus:
        return true;
    default:
        return false;
    }
}

std::array<ParameterSolution, 2> solve_family_a(double nu, double omega) {
    require_positive_nu(nu);
    const double a = std::abs(omega);
    if (!(a > nu * kDomainMargin) || !(a < nu * (1.0 - kDomainMargin))) {
        std::ostringstream msg;
        msg << "family A needs 0 < |omega| < nu, got omega = " << omega << ", nu = " << nu;
        throw DomainError(msg.str());
    }
    const double gap = nu * nu - omega * omega;
    const double magnitude = std::sqrt(3.0 * gap) / (2.0 * nu);
    // -nu eta^2 / 3 with eta^2 expanded
    const double delta = -gap / (4.0 * nu);
    auto branch = [&](SolutionLabel label, double sign) {
        const double eta = sign * magnitude;
        return make_solution(label, nu, omega, delta, eta, 3.0 / (2.0 * eta), false);
    };
    return {branch(SolutionLabel::APlus, 1.0), branch(SolutionLabel::AMinus, -1.0)};
}

std::array<ParameterSolution, 2> solve_family_b(double nu, double omega) {
    require_positive_nu(nu);
    if (omega == 0.0 || !(omega * omega < 2.0 * nu * nu * (1.0 - kDomainMargin))) {
        std::ostringstream msg;
        msg << "family B needs omega != 0 and omega^2 < 2 nu^2, got omega = " << omega
            << ", nu = " << nu;
        throw DomainError(msg.str());
    }
    const double magnitude = std::sqrt(2.0 * nu * nu - omega * omega) / nu;
    auto branch = [&](SolutionLabel label, double sign) {
        const double eta = sign * magnitude;
        return make_solution(label, nu, omega, nu, eta, -eta / 2.0, true);
    };
    return {branch(SolutionLabel::BPlus, 1.0), branch(SolutionLabel::BMinus, -1.0)};
}

ParameterPoints parameter_points(double nu, double M) {
    require_positive_nu(nu);
    ParameterPoints out;
    const Complex m{0.0, M};
    const double m2 = M * M;

    if (M == 0.0) {
        for (auto label : {SolutionLabel::P1Plus, SolutionLabel::P1Minus, SolutionLabel::P2Plus,
                           SolutionLabel::P2Minus}) {
            out.omitted.push_back({label, "M = 0 gives no finite eta"});
        }
        return out;
    }

    if (m2 > 3.0 * (1.0 + kDomainMargin)) {
        // m^2 + 3 sits on the branch cut; take the root that gives P1+ a positive Omega.
        const double magnitude = nu * std::sqrt(m2 - 3.0) / std::abs(M);
        const double delta = real_checked(3.0 * nu / (4.0 * m * m), "P1 delta");
        const double eta = real_checked(3.0 * kI / (2.0 * m), "P1 eta");
        for (auto [label, sign] : {std::pair{SolutionLabel::P1Plus, 1.0},
                                   std::pair{SolutionLabel::P1Minus, -1.0}}) {
            const double omega = sign * magnitude;
            out.points.push_back(make_solution(label, nu, omega, delta, eta, M, false));
        }
    } else {
        for (auto label : {SolutionLabel::P1Plus, SolutionLabel::P1Minus}) {
            out.omitted.push_back({label, "Omega not real and nonzero: P1 needs M^2 > 3"});
        }
    }

    if (m2 < 0.5 * (1.0 - kDomainMargin)) {
        const Complex root = std::sqrt(2.0 * m * m + 1.0);
        const double eta = real_checked(2.0 * kI * m, "P2 eta");
        for (auto [label, sign] : {std::pair{SolutionLabel::P2Plus, 1.0},
                                   std::pair{SolutionLabel::P2Minus, -1.0}}) {
            const double omega = real_checked(sign * std::sqrt(2.0) * nu * root, "P2 omega");
            out.points.push_back(make_solution(label, nu, omega, nu, eta, M, true));
        }
    } else {
        for (auto label : {SolutionLabel::P2Plus, SolutionLabel::P2Minus}) {
            out.omitted.push_back({label, "Omega not real and nonzero: P2 needs M^2 < 1/2"});
        }
    }
    return out;
}

IntervalReport validate_intervals(const ParameterSolution &sol) {
    if (!is_nondegenerate_manifold(sol.label)) {
        throw DomainError("interval constraints apply to family A / P1 solutions only, got " +
                          std::string(to_string(sol.label)));
    }
    const auto &t = sol.trap;
    const double ratio = t.delta / t.nu;
    const double eta_sign = t.eta > 0.0 ? 1.0 : -1.0;
    bool signs = (t.eta > 0.0) == (sol.M > 0.0) && t.eta != 0.0 && sol.M != 0.0;
    if (sol.label == SolutionLabel::APlus) {
        signs = signs && eta_sign > 0.0;
    } else if (sol.label == SolutionLabel::AMinus) {
        signs = signs && eta_sign < 0.0;
    }
    return {
        std::abs(t.omega) < t.nu,
        -0.25 < ratio && ratio < 0.0,
        0.0 < std::abs(t.eta) && std::abs(t.eta) < std::sqrt(3.0) / 2.0,
        std::abs(sol.M) > std::sqrt(3.0),
        signs,
    };
}

std::vector<CurveSample> psi1_curve(double nu, double M, std::span<const double> omegas) {
    require_positive_nu(nu);
    if (M == 0.0) {
        throw DomainError("psi1 curve needs M != 0");
    }
    if (std::abs(M * M - 1.0) <= kDomainMargin) {
        throw DomainError("psi1 curve has a pole at M^2 = 1");
    }
    const Complex m{0.0, M};
    std::vector<CurveSample> out;
    out.reserve(omegas.size());
    for (const double omega : omegas) {
        const double w2 = omega * omega / (nu * nu);
        const Complex eta = kI * m * (1.0 + 0.5 * w2) / (m * m + 1.0);
        const Complex delta = nu * (1.0 - w2 - eta * eta - kI * eta / m);
        out.push_back({omega, real_checked(eta, "curve eta"), real_checked(delta, "curve delta")});
    }
    return out;
}

std::vector<double> GridAxis::values() const {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = start;
        return v;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        v[i] = start + static_cast<double>(i) * step;
    }
    v.back() = stop;
    return v;
}

std::vector<SurfaceSample> psi0_surface(double nu, const GridAxis &omega, const GridAxis &eta) {
    require_positive_nu(nu);
    if (omega.count < 2 || eta.count < 2) {
        throw DomainError("surface grid needs at least 2 points per axis");
    }
    std::vector<SurfaceSample> out;
    out.reserve(omega.count * eta.count);
    for (const double w : omega.values()) {
        for (const double e : eta.values()) {
            const double delta = nu * (w * w / (nu * nu) + e * e - 1.0);
            const auto report = check_condition_psi0({nu, w, delta, e});
            out.push_back({w, e, delta, report.residuals.front().value.real()});
        }
    }
    return out;
}

} // namespace trapion
