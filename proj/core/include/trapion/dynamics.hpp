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
 * @file dynamics.hpp
 * Superposition of the two eigenstates, its exact time evolution, and the
 * atomic inversion and mean phonon number, each computed twice: from the
 * closed-form expressions and from the evolved state vector. The numeric
 * path evolves through the spectral decomposition of the truncated
 * Hamiltonian and does not use the eigenpair energies.
 */

#include <memory>
#include <span>
#include <vector>

#include "trapion/model.hpp"

namespace trapion {

struct SuperpositionCoeffs {
    Complex c1;
    Complex c2;

    /// Throws DomainError unless |c1|^2 + |c2|^2 = 1 within 1e-12.
    void validate() const;
};

/// One observable in closed form:
///   value(t) = inv_norm_sq * (psi0_block + psi1_block + 2 Re{cross e^{i t (E0+ - E1-)}})
/// The three blocks are kept apart so that a mismatch against the state-vector
/// value can be attributed to a single term.
struct ClosedFormTerms {
    double psi0_block;
    double psi1_block;
    Complex cross;
    double inv_norm_sq;
    double energy_gap; ///< E0+ - E1-

    [[nodiscard]] double value(double t) const;
    [[nodiscard]] double constant_part() const { return inv_norm_sq * (psi0_block + psi1_block); }
    [[nodiscard]] double cross_amplitude() const { return 2.0 * inv_norm_sq * std::abs(cross); }
};

/// Immutable after construction, including the cached eigendecomposition,
/// so copies share it and concurrent reads are safe.
class PreparedSystem {
  public:
    [[nodiscard]] const TrapParams &trap() const noexcept { return trap_; }
    [[nodiscard]] const EigenCoeffs &eigen_coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const SuperpositionCoeffs &superposition() const noexcept { return sup_; }
    [[nodiscard]] const Truncation &truncation() const noexcept { return trunc_; }
    [[nodiscard]] const EigenpairCandidate &psi0() const noexcept { return psi0_; }
    [[nodiscard]] const EigenpairCandidate &psi1() const noexcept { return psi1_; }
    [[nodiscard]] const Hamiltonian &hamiltonian() const noexcept { return shared_->hamiltonian; }
    [[nodiscard]] const StateVector &initial_state() const noexcept { return initial_; }

    /// N from the closed-form normalization expression.
    [[nodiscard]] double norm_closed() const noexcept { return norm_closed_; }
    /// Norm of c1|psi0+> + c2|psi1-> computed from the vectors.
    [[nodiscard]] double norm_direct() const noexcept { return norm_direct_; }

    [[nodiscard]] bool degenerate() const noexcept { return degenerate_; }
    /// |E0+ - E1-|, the angular frequency of every observable.
    [[nodiscard]] double frequency() const noexcept;

    [[nodiscard]] const Eigen::VectorXd &spectrum_energies() const noexcept {
        return shared_->energies;
    }

  private:
    friend PreparedSystem prepare(const TrapParams &, const EigenCoeffs &,
                                  const SuperpositionCoeffs &, const Truncation &);
    friend StateVector evolve_numeric(const PreparedSystem &, double);
    friend double atomic_inversion_numeric(const PreparedSystem &, double);
    friend double mean_phonons_numeric(const PreparedSystem &, double);
    friend struct TimeSeries time_series(const PreparedSystem &, double, double, std::size_t);

    struct Shared {
        Hamiltonian hamiltonian;
        Eigen::VectorXd energies;
        ComplexMatrix eigenvectors;
        ComplexVector initial_in_eigenbasis;
        ComplexMatrix sigma_z;        // sigma_z (x) 1
        ComplexMatrix number;         // 1 (x) n
    };

    PreparedSystem(TrapParams trap, EigenCoeffs coeffs, SuperpositionCoeffs sup,
                   Truncation trunc, EigenpairCandidate psi0, EigenpairCandidate psi1,
                   StateVector initial, double norm_closed, double norm_direct,
                   std::shared_ptr<const Shared> shared);

    TrapParams trap_;
    EigenCoeffs coeffs_;
    SuperpositionCoeffs sup_;
    Truncation trunc_;
    EigenpairCandidate psi0_;
    EigenpairCandidate psi1_;
    StateVector initial_;
    double norm_closed_;
    double norm_direct_;
    bool degenerate_;
    std::shared_ptr<const Shared> shared_;
};

/// Builds |psi(0)> = (c1|psi0+> + c2|psi1->)/N. Throws PreparationError
/// naming the first validity condition whose residual exceeds 1e-10, or
/// the ratio if d1/d0 is undefined or not purely imaginary.
PreparedSystem prepare(const TrapParams &trap, const EigenCoeffs &coeffs,
                       const SuperpositionCoeffs &sup, const Truncation &trunc);

/// Closed-form normalization N of the superposition.
double superposition_norm_closed(const TrapParams &trap, const EigenCoeffs &coeffs,
                                 const SuperpositionCoeffs &sup);

/// (c1 e^{-i t E0+}|psi0+> + c2 e^{-i t E1-}|psi1->)/N
StateVector evolve_analytic(const PreparedSystem &sys, double t);

/// sum_k e^{-i t E_k}|k><k|psi(0)> over the truncated Hamiltonian spectrum.
StateVector evolve_numeric(const PreparedSystem &sys, double t);

ClosedFormTerms atomic_inversion_terms(const PreparedSystem &sys);
ClosedFormTerms mean_phonon_terms(const PreparedSystem &sys);

double atomic_inversion_closed(const PreparedSystem &sys, double t);
double atomic_inversion_numeric(const PreparedSystem &sys, double t);
double mean_phonons_closed(const PreparedSystem &sys, double t);
double mean_phonons_numeric(const PreparedSystem &sys, double t);

struct TimeSeries {
    std::vector<double> times;
    std::vector<double> sigma_z_closed;
    std::vector<double> sigma_z_numeric;
    std::vector<double> n_closed;
    std::vector<double> n_numeric;
    double max_sigma_z_deviation = 0.0;
    double max_n_deviation = 0.0;
};

/// Uniform grid of `steps` points on [t_start, t_end]. Requires steps >= 2
/// and t_end > t_start (DomainError otherwise).
TimeSeries time_series(const PreparedSystem &sys, double t_start, double t_end,
                       std::size_t steps);

struct FrequencyEstimate {
    double zero_crossing; ///< primary estimate
    double fourier;       ///< refined discrete-Fourier peak
    std::size_t upward_crossings;
};

/// Angular frequency of the principal component of a sampled signal.
/// The primary estimate is 2 pi (k-1) / (t_k - t_1) over the k upward
/// zero crossings of the mean-subtracted signal. Throws NoOscillationError
/// for a constant signal and DomainError for fewer than two full periods.
FrequencyEstimate dominant_frequency(std::span<const double> values,
                                     std::span<const double> times);

/// Multiplies the state by the phase that makes its largest-magnitude
/// amplitude real and positive.
StateVector align_global_phase(const StateVector &x);

/// ||x - y|| after aligning both with the phase of the amplitude where
/// `x` is largest.
double phase_aligned_distance(const StateVector &x, const StateVector &y);

} // namespace trapion
