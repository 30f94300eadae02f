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
 * @file model.hpp
 * Trapped-ion Hamiltonian
 *
 *     H = nu n + (delta/2) sigma_z + Omega [sigma_+ D(i eta) + sigma_- D^dag(i eta)]
 *
 * together with its two closed-form eigenpair families and their validity
 * conditions.
 */

#include <string>
#include <string_view>
#include <vector>

#include "trapion/fockspace.hpp"

namespace trapion {

/// Physical parameters, hbar = 1, frequencies in units of a reference
/// frequency.
struct TrapParams {
    double nu;    ///< vibrational frequency, > 0
    double omega; ///< Rabi frequency, nonzero
    double delta; ///< laser-ion detuning
    double eta;   ///< Lamb-Dicke parameter, nonzero

    /// Throws DomainError unless nu > 0, omega != 0, eta != 0, all finite.
    void validate() const;

    friend bool operator==(const TrapParams &, const TrapParams &) = default;
};

/// Coefficients (d0, d1) of the second eigenstate family. Only the ratio
/// m = d1 / d0 enters the validity conditions.
struct EigenCoeffs {
    Complex d0{1.0};
    Complex d1{0.0};

    [[nodiscard]] Complex ratio() const { return d1 / d0; }
};

enum class EigenFamily { Psi0Plus, Psi1Minus };

std::string_view to_string(EigenFamily family);

struct EigenpairCandidate {
    EigenFamily family;
    StateVector state;     ///< normalized by the directly computed norm
    double energy;
    double norm_constant;  ///< closed-form normalization constant
    double direct_norm;    ///< norm of the unnormalized truncated vector
};

struct NamedResidual {
    std::string name;
    Complex value;
};

struct ConditionReport {
    EigenFamily family;
    std::vector<NamedResidual> residuals; ///< LHS - RHS of each condition
    double tolerance;
    bool satisfied;

    [[nodiscard]] double max_abs_residual() const;
    /// First residual whose magnitude exceeds the tolerance, or nullptr.
    [[nodiscard]] const NamedResidual *first_failure() const;
};

inline constexpr double kConditionTolerance = 1e-10;
inline constexpr double kImaginaryRatioTolerance = 1e-12;

struct Hamiltonian {
    ComplexMatrix matrix;  ///< symmetrized, (H + H^dag)/2
    double asymmetry;      ///< max |H - H^dag| entry before symmetrizing
};

/// Uses the Laguerre displacement path. Propagates TruncationError.
Hamiltonian build_hamiltonian(const TrapParams &p, const Truncation &trunc);

/// Same Hamiltonian with the vibrational coupling operator D(i eta) supplied
/// by the caller (e.g. the identity, to recover a Jaynes-Cummings-like form).
Hamiltonian build_hamiltonian(const TrapParams &p, const Truncation &trunc,
                              const ComplexMatrix &displacement);

[[nodiscard]] double energy_psi0_plus(const TrapParams &p);
[[nodiscard]] double energy_psi1_minus(const TrapParams &p);

/// N_0^+ = [1 + Omega^2/nu^2 + (eta nu / Omega)^2]^{1/2}
[[nodiscard]] double norm_psi0_plus(const TrapParams &p);
/// N_1^- = {[1 + (Omega/2nu)^2] |d0|^2 + [1 + (Omega/nu)^2 + 2 (eta nu/Omega)^2] |d1|^2}^{1/2}
[[nodiscard]] double norm_psi1_minus(const TrapParams &p, const EigenCoeffs &c);

/// Upper spinor (Omega/nu)|0> + (nu/Omega) i eta |1>, lower spinor |-i eta>,
/// energy nu + delta/2.
EigenpairCandidate psi0_plus(const TrapParams &p, const Truncation &trunc);

/// Upper spinor d0 |i eta> + d1 D(i eta)|1>, lower spinor
/// (Omega/nu)[(d0/2)|0> + d1|1> - i eta (nu^2/Omega^2) sqrt(2) d1 |2>],
/// energy 2 nu - delta/2.
EigenpairCandidate psi1_minus(const TrapParams &p, const EigenCoeffs &c,
                              const Truncation &trunc);

/// Residual Omega^2/nu^2 + eta^2 - delta/nu - 1.
ConditionReport check_condition_psi0(const TrapParams &p,
                                     double tol = kConditionTolerance);

/// Residuals of
///   2 - eta^2 - delta/nu - Omega^2/(2 nu^2) = -i eta m
///   1 - eta^2 - delta/nu - Omega^2/nu^2     =  i eta / m
/// Throws InvalidRatioError if m is zero or has a real part above 1e-12.
ConditionReport check_conditions_psi1(const TrapParams &p, Complex m,
                                      double tol = kConditionTolerance);

/// ||H psi - E psi||_2
double eigen_residual(const ComplexMatrix &h, const EigenpairCandidate &cand);

} // namespace trapion
