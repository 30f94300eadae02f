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
#include "trapion/fockspace.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "trapion/errors.hpp"

namespace trapion {

namespace {

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void require_same_space(const StateVector &x, const StateVector &y) {
    if (x.amplitudes().size() != y.amplitudes().size()) {
        throw DimensionError("state dimensions differ: " +
                             std::to_string(x.amplitudes().size()) + " vs " +
                             std::to_string(y.amplitudes().size()));
    }
}

} // namespace

Truncation::Truncation(std::size_t levels) : levels_(levels) {
    if (levels < kMinLevels) {
        throw TruncationError("truncation needs at least " + std::to_string(kMinLevels) +
                              " Fock levels, got " + std::to_string(levels));
    }
}

StateVector::StateVector(Truncation trunc, ComplexVector amplitudes)
    : trunc_(trunc), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != trunc_.dimension()) {
        throw DimensionError("state vector of length " + std::to_string(amplitudes_.size()) +
                             " does not match dimension " +
                             std::to_string(trunc_.dimension()));
    }
}

StateVector StateVector::zero(Truncation trunc) {
    return {trunc, ComplexVector::Zero(static_cast<Eigen::Index>(trunc.dimension()))};
}

StateVector StateVector::basis(Truncation trunc, Spin spin, std::size_t level) {
    auto v = ComplexVector::Zero(static_cast<Eigen::Index>(trunc.dimension())).eval();
    v(static_cast<Eigen::Index>(index(trunc, spin, level))) = 1.0;
    return {trunc, std::move(v)};
}

StateVector StateVector::from_spinor(Truncation trunc, const ComplexVector &excited,
                                     const ComplexVector &ground) {
    const auto n = static_cast<Eigen::Index>(trunc.levels());
    if (excited.size() != n || ground.size() != n) {
        throw DimensionError("spinor components must have length " + std::to_string(n));
    }
    ComplexVector v(2 * n);
    v.head(n) = excited;
    v.tail(n) = ground;
    return {trunc, std::move(v)};
}

std::size_t StateVector::index(const Truncation &trunc, Spin spin, std::size_t level) {
    if (level >= trunc.levels()) {
        throw TruncationError("Fock level " + std::to_string(level) +
                              " outside truncation of " + std::to_string(trunc.levels()));
    }
    return static_cast<std::size_t>(spin) * trunc.levels() + level;
}

ComplexVector StateVector::excited() const {
    return amplitudes_.head(static_cast<Eigen::Index>(trunc_.levels()));
}

ComplexVector StateVector::ground() const {
    return amplitudes_.tail(static_cast<Eigen::Index>(trunc_.levels()));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(amplitudes_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw Error("cannot normalize the zero vector");
    }
    return {trunc_, amplitudes_ / nrm};
}

StateVector StateVector::scaled(Complex factor) const { return {trunc_, amplitudes_ * factor}; }

StateVector operator+(const StateVector &x, const StateVector &y) {
    require_same_space(x, y);
    return {x.truncation(), x.amplitudes() + y.amplitudes()};
}

BosonicAlphabet bosonic_alphabet(const Truncation &trunc) {
    const auto n = static_cast<Eigen::Index>(trunc.levels());
    BosonicAlphabet ops{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n),
                        ComplexMatrix::Zero(n, n)};
    for (Eigen::Index k = 1; k < n; ++k) {
        ops.a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    ops.a_dag = ops.a.adjoint();
    // a_dag * a rounds sqrt(k)^2; the diagonal is set to the exact integers.
    for (Eigen::Index k = 0; k < n; ++k) {
        ops.n_op(k, k) = static_cast<double>(k);
    }
    return ops;
}

double generalized_laguerre(std::size_t n, double k, double x) {
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 1.0 + k - x;
    for (std::size_t j = 1; j < n; ++j) {
        const auto jd = static_cast<double>(j);
        const double next = ((2.0 * jd + 1.0 + k - x) * cur - (jd + k) * prev) / (jd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex displacement_element(Complex alpha, std::size_t m, std::size_t n) {
    const double r = std::abs(alpha);
    if (r == 0.0) {
        return m == n ? Complex{1.0} : Complex{0.0};
    }
    const double x = r * r;
    // Above the diagonal: <m|D(alpha)|n> = (-alpha^*)^{n-m} sqrt(m!/n!) e^{-x/2} L_m^{(n-m)}(x).
    const bool lower = m >= n;
    const std::size_t lo = lower ? n : m;
    const std::size_t hi = lower ? m : n;
    const std::size_t gap = hi - lo;
    const Complex base = lower ? alpha : -std::conj(alpha);

    const double lag = generalized_laguerre(lo, static_cast<double>(gap), x);
    if (lag == 0.0) {
        return 0.0;
    }
    const double log_mag = 0.5 * (log_factorial(lo) - log_factorial(hi)) +
                           static_cast<double>(gap) * std::log(r) - 0.5 * x +
                           std::log(std::abs(lag));
    const double phase = static_cast<double>(gap) * std::arg(base);
    const double sign = lag < 0.0 ? -1.0 : 1.0;
    return sign * std::polar(std::exp(log_mag), phase);
}

double coherent_tail_weight(Complex alpha, const Truncation &trunc) {
    const double mean = std::norm(alpha);
    if (mean == 0.0) {
        return 0.0;
    }
    const double log_mean = std::log(mean);
    double tail = 0.0;
    for (std::size_t n = trunc.levels();; ++n) {
        const double term =
            std::exp(-mean + static_cast<double>(n) * log_mean - log_factorial(n));
        tail += term;
        // Past the Poisson mode the terms decay geometrically.
        if (static_cast<double>(n) > mean && term <= tail * 1e-18) {
            break;
        }
    }
    return tail;
}

ComplexVector coherent_state(Complex alpha, const Truncation &trunc) {
    const auto levels = static_cast<Eigen::Index>(trunc.levels());
    ComplexVector c = ComplexVector::Zero(levels);
    const double r = std::abs(alpha);
    if (r == 0.0) {
        c(0) = 1.0;
        return c;
    }
    const double log_r = std::log(r);
    const double theta = std::arg(alpha);
    for (Eigen::Index n = 0; n < levels; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        const double log_mag = -0.5 * r * r + static_cast<double>(n) * log_r -
                               0.5 * log_factorial(nn);
        c(n) = std::polar(std::exp(log_mag), static_cast<double>(n) * theta);
    }
    return c;
}

ComplexVector displaced_number_state(Complex alpha, std::size_t k, const Truncation &trunc) {
    if (k >= trunc.levels()) {
        throw TruncationError("displaced number state index " + std::to_string(k) +
                              " outside truncation of " + std::to_string(trunc.levels()));
    }
    const auto levels = static_cast<Eigen::Index>(trunc.levels());
    ComplexVector col(levels);
    for (Eigen::Index m = 0; m < levels; ++m) {
        col(m) = displacement_element(alpha, static_cast<std::size_t>(m), k);
    }
    return col;
}

ComplexMatrix displacement_matrix(Complex alpha, const Truncation &trunc,
                                  DisplacementMethod method, double max_norm_deficit) {
    const double deficit = coherent_tail_weight(alpha, trunc);
    if (deficit > max_norm_deficit) {
        throw TruncationError("truncation of " + std::to_string(trunc.levels()) +
                              " levels loses weight " + std::to_string(deficit) +
                              " of the coherent state with |alpha| = " +
                              std::to_string(std::abs(alpha)));
    }

    const auto levels = static_cast<Eigen::Index>(trunc.levels());
    if (method == DisplacementMethod::Laguerre) {
        ComplexMatrix d(levels, levels);
        for (Eigen::Index n = 0; n < levels; ++n) {
            for (Eigen::Index m = 0; m < levels; ++m) {
                d(m, n) = displacement_element(alpha, static_cast<std::size_t>(m),
                                               static_cast<std::size_t>(n));
            }
        }
        return d;
    }

    if (alpha == Complex{0.0}) {
        return ComplexMatrix::Identity(levels, levels);
    }
    // exp(G) with G = alpha a^dag - alpha^* a anti-Hermitian; K = iG is
    // Hermitian and exp(G) = V exp(-i Lambda) V^dag.
    const auto ops = bosonic_alphabet(trunc);
    const ComplexMatrix generator = alpha * ops.a_dag - std::conj(alpha) * ops.a;
    ComplexMatrix hermitian = kI * generator;
    hermitian = 0.5 * (hermitian + hermitian.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("eigendecomposition of the displacement generator failed");
    }
    const ComplexVector phases =
        (-kI * solver.eigenvalues().cast<Complex>()).array().exp().matrix();
    const ComplexMatrix &vecs = solver.eigenvectors();
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix sigma_z() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    return s;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 1) = 1.0;
    return s;
}

ComplexMatrix sigma_minus() { return sigma_plus().transpose(); }

} // namespace pauli

ComplexMatrix qubit_kron(const ComplexMatrix &atomic, const ComplexMatrix &vibrational) {
    if (atomic.rows() != 2 || atomic.cols() != 2) {
        throw DimensionError("atomic factor must be 2x2");
    }
    if (vibrational.rows() != vibrational.cols() || vibrational.rows() == 0) {
        throw DimensionError("vibrational factor must be square and non-empty");
    }
    const Eigen::Index n = vibrational.rows();
    ComplexMatrix out(2 * n, 2 * n);
    for (Eigen::Index s = 0; s < 2; ++s) {
        for (Eigen::Index t = 0; t < 2; ++t) {
            out.block(s * n, t * n, n, n) = atomic(s, t) * vibrational;
        }
    }
    return out;
}

Complex inner_product(const StateVector &x, const StateVector &y) {
    require_same_space(x, y);
    return x.amplitudes().dot(y.amplitudes());
}

Complex expectation(const ComplexMatrix &op, const StateVector &x) {
    if (op.rows() != x.amplitudes().size() || op.cols() != x.amplitudes().size()) {
        throw DimensionError("operator of size " + std::to_string(op.rows()) + "x" +
                             std::to_string(op.cols()) + " does not act on a state of length " +
                             std::to_string(x.amplitudes().size()));
    }
    return x.amplitudes().dot(op * x.amplitudes());
}

RealExpectation hermitian_expectation(const ComplexMatrix &op, const StateVector &x,
                                      double imag_tol) {
    const Complex value = expectation(op, x);
    if (std::abs(value.imag()) > imag_tol) {
        throw Error("expectation of a Hermitian operator has imaginary part " +
                    std::to_string(value.imag()));
    }
    return {value.real(), value.imag()};
}

} // namespace trapion
