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
 * @file params.hpp
 * Closed-form parameter manifolds on which both eigenstate families are
 * valid at once, their physical-interval checks, and sampled curve and
 * surface data for plotting.
 *
 * Throughout, m = d1/d0 = iM with M real.
 */

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trapion/model.hpp"

namespace trapion {

/// A: eta = ±(sqrt3/2nu) sqrt(nu^2 - Omega^2), delta = -nu eta^2/3, M = 3/(2 eta).
/// B: eta = ±(1/nu) sqrt(2nu^2 - Omega^2), delta = nu, M = -eta/2 (degenerate).
/// P1/P2: the same manifolds parameterized by M instead of Omega.
enum class SolutionLabel { APlus, AMinus, BPlus, BMinus, P1Plus, P1Minus, P2Plus, P2Minus };

std::string_view to_string(SolutionLabel label);

/// True for A± and P1± (the non-degenerate manifold).
[[nodiscard]] bool is_nondegenerate_manifold(SolutionLabel label);

struct ParameterSolution {
    SolutionLabel label;
    TrapParams trap;
    double M;
    bool degenerate;
    double e0_plus;
    double e1_minus;

    [[nodiscard]] Complex m() const { return {0.0, M}; }
    /// (d0, i M d0).
    [[nodiscard]] EigenCoeffs eigen_coeffs(Complex d0 = 1.0) const {
        return {d0, m() * d0};
    }
};

/// Margin applied to the open domains of the solvers (|Omega| < nu etc.).
inline constexpr double kDomainMargin = 1e-12;
/// Imaginary parts below this (relative to max(1, |z|)) are algebraic
/// cancellation and are dropped.
inline constexpr double kImaginaryResidue = 1e-14;

/// Both eta branches (+ first). Requires 0 < |omega| < nu, else DomainError.
std::array<ParameterSolution, 2> solve_family_a(double nu, double omega);

/// Both eta branches (+ first), flagged degenerate with E0+ = E1- = 3nu/2.
/// Requires omega != 0 and omega^2 < 2 nu^2, else DomainError.
std::array<ParameterSolution, 2> solve_family_b(double nu, double omega);

struct OmittedBranch {
    SolutionLabel label;
    std::string reason;
};

struct ParameterPoints {
    std::vector<ParameterSolution> points;
    std::vector<OmittedBranch> omitted;
};

/// P1± = (±(nu/m) sqrt(m^2+3), 3nu/(4m^2), 3i/(2m)) for M^2 > 3 and
/// P2± = (±sqrt2 nu sqrt(2m^2+1), nu, 2im) for 0 < M^2 < 1/2, as (Omega, delta, eta).
/// Branches without a real nonzero Omega are listed in `omitted`.
ParameterPoints parameter_points(double nu, double M);

struct IntervalReport {
    bool omega_below_nu;   ///< |Omega| < nu
    bool delta_in_range;   ///< -1/4 < delta/nu < 0
    bool eta_in_range;     ///< 0 < |eta| < sqrt(3)/2
    bool M_in_range;       ///< |M| > sqrt(3)
    bool signs_consistent; ///< sign(eta) == sign(M) == branch sign

    [[nodiscard]] bool all() const {
        return omega_below_nu && delta_in_range && eta_in_range && M_in_range &&
               signs_consistent;
    }
};

/// Physical-interval verdicts for a non-degenerate solution. Throws
/// DomainError for the degenerate manifold, where no intervals are stated.
IntervalReport validate_intervals(const ParameterSolution &sol);

struct CurveSample {
    double omega;
    double eta;
    double delta;
};

/// Points of the psi1_minus validity curve for fixed M:
///   eta = i m (1 + Omega^2/2nu^2) / (m^2 + 1),  delta = nu (1 - Omega^2/nu^2 - eta^2 - i eta/m).
/// Throws DomainError at the pole M^2 = 1 and for M = 0.
std::vector<CurveSample> psi1_curve(double nu, double M, std::span<const double> omegas);

/// Inclusive uniform axis start..stop with `count` points.
struct GridAxis {
    double start;
    double stop;
    std::size_t count;

    [[nodiscard]] std::vector<double> values() const;
};

struct SurfaceSample {
    double omega;
    double eta;
    double delta;
    double residual; ///< psi0 condition residual at the sample
};

/// Grid over (Omega, eta) with delta = nu (Omega^2/nu^2 + eta^2 - 1), Omega
/// major. Both axes need at least 2 points.
std::vector<SurfaceSample> psi0_surface(double nu, const GridAxis &omega, const GridAxis &eta);

} // namespace trapion
