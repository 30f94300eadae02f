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
 * @file fockspace.hpp
 * Dense operators and states on a truncated harmonic-oscillator Fock space
 * and on its tensor product with a two-level atom.
 *
 * Basis layout of a qubit-oscillator state: index = s * levels + n, where
 * s = 0 is the excited (upper spinor) component, s = 1 the ground (lower)
 * component and n the Fock level. Everything else in the library derives
 * its layout from StateVector::index().
 */

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace trapion {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Number of Fock levels kept, |0> ... |levels-1>.
class Truncation {
  public:
    static constexpr std::size_t kDefaultLevels = 64;
    static constexpr std::size_t kMinLevels = 2;

    explicit Truncation(std::size_t levels = kDefaultLevels);

    [[nodiscard]] std::size_t levels() const noexcept { return levels_; }
    /// Dimension of the qubit-oscillator space, 2 * levels.
    [[nodiscard]] std::size_t dimension() const noexcept { return 2 * levels_; }
    /// Lowest 3/4 of the levels. Single-matrix identities of the truncated
    /// displacement operator are asserted here.
    [[nodiscard]] std::size_t protected_levels() const noexcept {
        return (3 * levels_) / 4;
    }
    /// Lowest half of the levels. Identities involving a product of two
    /// truncated matrices (the inner sum is cut off too) are asserted here.
    [[nodiscard]] std::size_t product_protected_levels() const noexcept {
        return levels_ / 2;
    }

    friend bool operator==(const Truncation &, const Truncation &) = default;

  private:
    std::size_t levels_;
};

enum class Spin : std::size_t { Excited = 0, Ground = 1 };

/// Complex amplitudes over the qubit-oscillator basis.
class StateVector {
  public:
    StateVector(Truncation trunc, ComplexVector amplitudes);

    static StateVector zero(Truncation trunc);
    static StateVector basis(Truncation trunc, Spin spin, std::size_t level);
    /// Stacks an excited and a ground oscillator component (each of length
    /// trunc.levels()).
    static StateVector from_spinor(Truncation trunc, const ComplexVector &excited,
                                   const ComplexVector &ground);

    [[nodiscard]] static std::size_t index(const Truncation &trunc, Spin spin,
                                           std::size_t level);

    [[nodiscard]] const Truncation &truncation() const noexcept { return trunc_; }
    [[nodiscard]] const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] ComplexVector excited() const;
    [[nodiscard]] ComplexVector ground() const;

    [[nodiscard]] double norm() const { return amplitudes_.norm(); }
    [[nodiscard]] bool is_normalized(double tol = 1e-12) const;
    [[nodiscard]] StateVector normalized() const;

    /// Copy with every amplitude multiplied by a complex scalar.
    [[nodiscard]] StateVector scaled(Complex factor) const;

  private:
    Truncation trunc_;
    ComplexVector amplitudes_;
};

StateVector operator+(const StateVector &x, const StateVector &y);

struct BosonicAlphabet {
    ComplexMatrix a;
    ComplexMatrix a_dag;
    ComplexMatrix n_op;
};

/// Annihilation, creation and number operators. Entries are exact
/// square roots of integers; a_dag is the exact conjugate transpose of a.
BosonicAlphabet bosonic_alphabet(const Truncation &trunc);

enum class DisplacementMethod {
    /// Exponentiate the truncated generator alpha a^dag - alpha^* a through
    /// the eigendecomposition of its Hermitian counterpart. Exactly unitary
    /// on the truncated space.
    Spectral,
    /// Closed-form matrix elements of the untruncated operator through
    /// generalized Laguerre polynomials.
    Laguerre,
};

/// Default bound on the truncated weight of the coherent state D(alpha)|0>.
inline constexpr double kDefaultMaxNormDeficit = 1e-8;

/// Glauber displacement operator D(alpha) = exp(alpha a^dag - alpha^* a).
///
/// Throws TruncationError when the coherent-state weight lost above the
/// truncation exceeds `max_norm_deficit`.
ComplexMatrix displacement_matrix(Complex alpha, const Truncation &trunc,
                                  DisplacementMethod method = DisplacementMethod::Laguerre,
                                  double max_norm_deficit = kDefaultMaxNormDeficit);

/// Single element <m|D(alpha)|n> of the untruncated displacement operator.
Complex displacement_element(Complex alpha, std::size_t m, std::size_t n);

/// Coherent state |alpha> = D(alpha)|0> restricted to the truncation.
/// Amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!) are evaluated in log-space.
ComplexVector coherent_state(Complex alpha, const Truncation &trunc);

/// Weight of the coherent state above the truncation, 1 - sum_{n<levels} |c_n|^2,
/// summed directly over the Poisson tail (no cancellation against 1).
double coherent_tail_weight(Complex alpha, const Truncation &trunc);

/// D(alpha)|k>, i.e. column k of the Laguerre displacement matrix.
ComplexVector displaced_number_state(Complex alpha, std::size_t k,
                                     const Truncation &trunc);

/// Generalized Laguerre polynomial L_n^{(k)}(x) by three-term recurrence.
double generalized_laguerre(std::size_t n, double k, double x);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix sigma_z();
/// |e><g|, raises ground to excited.
ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();
} // namespace pauli

/// Kronecker product atomic (2x2) (x) vibrational (levels x levels), atomic
/// index major so it matches StateVector::index().
ComplexMatrix qubit_kron(const ComplexMatrix &atomic, const ComplexMatrix &vibrational);

/// <x|y>, conjugate-linear in x.
Complex inner_product(const StateVector &x, const StateVector &y);

/// <x|op|x>.
Complex expectation(const ComplexMatrix &op, const StateVector &x);

struct RealExpectation {
    double value;
    /// Imaginary part that was dropped. Always below the tolerance.
    double discarded_imag;
};

/// <x|op|x> for a Hermitian op. Throws Error if the imaginary part exceeds
/// `imag_tol`, otherwise drops it and reports it in `discarded_imag`.
RealExpectation hermitian_expectation(const ComplexMatrix &op, const StateVector &x,
                                      double imag_tol = 1e-12);

} // namespace trapion
