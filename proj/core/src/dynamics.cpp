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
#include "trapion/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "trapion/errors.hpp"
#include "trapion/params.hpp"

namespace trapion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool energies_coincide(double e0, double e1) {
    return std::abs(e0 - e1) <= 1e-12 * std::max({1.0, std::abs(e0), std::abs(e1)});
}

/// c1^* c2 / (N0^* N1) e^{-eta^2/2}, shared by every cross term.
Complex cross_prefactor(const TrapParams &p, const EigenCoeffs &c, const SuperpositionCoeffs &s) {
    return std::conj(s.c1) * s.c2 / (norm_psi0_plus(p) * norm_psi1_minus(p, c)) *
           std::exp(-0.5 * p.eta * p.eta);
}

} // namespace

void SuperpositionCoeffs::validate() const {
    const double total = std::norm(c1) + std::norm(c2);
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "superposition coefficients must satisfy |c1|^2 + |c2|^2 = 1, got " << total;
        throw DomainError(msg.str());
    }
}

double ClosedFormTerms::value(double t) const {
    const Complex phase = std::exp(kI * (t * energy_gap));
    return inv_norm_sq * (psi0_block + psi1_block + 2.0 * (cross * phase).real());
}

PreparedSystem::PreparedSystem(TrapParams trap, EigenCoeffs coeffs, SuperpositionCoeffs sup,
                               Truncation trunc, EigenpairCandidate psi0,
                               EigenpairCandidate psi1, StateVector initial, double norm_closed,
                               double norm_direct, std::shared_ptr<const Shared> shared)
    : trap_(trap), coeffs_(coeffs), sup_(sup), trunc_(trunc), psi0_(std::move(psi0)),
      psi1_(std::move(psi1)), initial_(std::move(initial)), norm_closed_(norm_closed),
      norm_direct_(norm_direct),
      degenerate_(energies_coincide(psi0_.energy, psi1_.energy)), shared_(std::move(shared)) {}

double PreparedSystem::frequency() const noexcept { return std::abs(psi0_.energy - psi1_.energy); }

double superposition_norm_closed(const TrapParams &p, const EigenCoeffs &c,
                                 const SuperpositionCoeffs &s) {
    const double nu = p.nu;
    const double om = p.omega;
    const double eta = p.eta;
    const Complex bracket =
        c.d0 * (3.0 * om / (2.0 * nu) + nu * eta * eta / om) +
        kI * eta * c.d1 * (2.0 * om / nu + 2.0 * nu / om * eta * eta - nu / om);
    const double squared = 1.0 + 2.0 * (cross_prefactor(p, c, s) * bracket).real();
    if (squared <= 0.0) {
        throw Error("closed-form superposition norm is not positive");
    }
    return std::sqrt(squared);
}

PreparedSystem prepare(const TrapParams &trap, const EigenCoeffs &coeffs,
                       const SuperpositionCoeffs &sup, const Truncation &trunc) {
    trap.validate();
    sup.validate();

    const auto psi0_report = check_condition_psi0(trap);
    if (const auto *bad = psi0_report.first_failure()) {
        std::ostringstream msg;
        msg << "psi0_plus condition violated: " << bad->name << " = " << bad->value.real();
        throw PreparationError(bad->name, std::abs(bad->value), msg.str());
    }
    if (coeffs.d0 == Complex{0.0}) {
        throw PreparationError("psi1_ratio", std::numeric_limits<double>::infinity(),
                               "ratio m = d1/d0 is undefined for d0 = 0");
    }
    const Complex m = coeffs.ratio();
    ConditionReport psi1_report;
    try {
        psi1_report = check_conditions_psi1(trap, m);
    } catch (const InvalidRatioError &e) {
        throw PreparationError("psi1_ratio", std::abs(m.real()), e.what());
    }
    if (const auto *bad = psi1_report.first_failure()) {
        std::ostringstream msg;
        msg << "psi1_minus condition violated: " << bad->name << " = " << bad->value;
        throw PreparationError(bad->name, std::abs(bad->value), msg.str());
    }

    auto psi0 = psi0_plus(trap, trunc);
    auto psi1 = psi1_minus(trap, coeffs, trunc);
    const StateVector combined = psi0.state.scaled(sup.c1) + psi1.state.scaled(sup.c2);
    const double norm_direct = combined.norm();
    const double norm_closed = superposition_norm_closed(trap, coeffs, sup);
    StateVector initial = combined.scaled(1.0 / norm_direct);

    auto shared = std::make_shared<PreparedSystem::Shared>();
    shared->hamiltonian = build_hamiltonian(trap, trunc);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(shared->hamiltonian.matrix);
    if (solver.info() != Eigen::Success) {
        throw EigensolverError("eigendecomposition of the truncated Hamiltonian failed");
    }
    shared->energies = solver.eigenvalues();
    shared->eigenvectors = solver.eigenvectors();
    shared->initial_in_eigenbasis = shared->eigenvectors.adjoint() * initial.amplitudes();

    const auto levels = static_cast<Eigen::Index>(trunc.levels());
    const auto ops = bosonic_alphabet(trunc);
    shared->sigma_z = qubit_kron(pauli::sigma_z(), ComplexMatrix::Identity(levels, levels));
    shared->number = qubit_kron(pauli::identity(), ops.n_op);

    return PreparedSystem(trap, coeffs, sup, trunc, std::move(psi0), std::move(psi1),
                          std::move(initial), norm_closed, norm_direct, std::move(shared));
}

StateVector evolve_analytic(const PreparedSystem &sys, double t) {
    const Complex a0 = sys.superposition().c1 * std::exp(-kI * (t * sys.psi0().energy));
    const Complex a1 = sys.superposition().c2 * std::exp(-kI * (t * sys.psi1().energy));
    const StateVector sum = sys.psi0().state.scaled(a0) + sys.psi1().state.scaled(a1);
    return sum.scaled(1.0 / sys.norm_direct());
}

StateVector evolve_numeric(const PreparedSystem &sys, double t) {
    const auto &sh = *sys.shared_;
    const ComplexVector phases =
        (-kI * t * sh.energies.cast<Complex>()).array().exp().matrix();
    ComplexVector amplitudes = sh.eigenvectors * phases.cwiseProduct(sh.initial_in_eigenbasis);
    return {sys.truncation(), std::move(amplitudes)};
}

ClosedFormTerms atomic_inversion_terms(const PreparedSystem &sys) {
    const auto &p = sys.trap();
    const auto &c = sys.eigen_coeffs();
    const auto &s = sys.superposition();
    const double nu = p.nu;
    const double om = p.omega;
    const double eta = p.eta;
    const double w = om / nu;
    const double v = nu * eta / om;
    const double n0 = norm_psi0_plus(p);
    const double n1 = norm_psi1_minus(p, c);

    ClosedFormTerms terms{};
    terms.psi0_block = std::norm(s.c1 / n0) * (-1.0 + w * w + v * v);
    terms.psi1_block =
        std::norm(s.c2 / n1) * (std::norm(c.d0) * (1.0 - 0.25 * w * w) +
                                std::norm(c.d1) * (1.0 - w * w - 2.0 * v * v));
    terms.cross = cross_prefactor(p, c, s) *
                  (c.d0 * (0.5 * w + nu * eta * eta / om) - kI * eta * c.d1 * nu / om);
    terms.inv_norm_sq = 1.0 / (sys.norm_closed() * sys.norm_closed());
    terms.energy_gap = sys.psi0().energy - sys.psi1().energy;
    return terms;
}

ClosedFormTerms mean_phonon_terms(const PreparedSystem &sys) {
    const auto &p = sys.trap();
    const auto &c = sys.eigen_coeffs();
    const auto &s = sys.superposition();
    const double nu = p.nu;
    const double om = p.omega;
    const double eta = p.eta;
    const double w = om / nu;
    const double r = nu / om;
    const double n0 = norm_psi0_plus(p);
    const double n1 = norm_psi1_minus(p, c);

    ClosedFormTerms terms{};
    terms.psi0_block = std::norm(s.c1 / n0) * eta * eta * (1.0 + r * r);
    const Complex interference =
        kI * eta * (c.d0 * std::conj(c.d1) - std::conj(c.d0) * c.d1);
    terms.psi1_block =
        std::norm(s.c2 / n1) *
        (std::norm(c.d0) * eta * eta +
         std::norm(c.d1) * (1.0 + eta * eta + w * w + 4.0 * eta * eta * r * r) +
         interference.real());
    terms.cross = cross_prefactor(p, c, s) *
                  (c.d0 * r * eta * eta + kI * eta * c.d1 * (w - r + 3.0 * r * eta * eta));
    terms.inv_norm_sq = 1.0 / (sys.norm_closed() * sys.norm_closed());
    terms.energy_gap = sys.psi0().energy - sys.psi1().energy;
    return terms;
}

double atomic_inversion_closed(const PreparedSystem &sys, double t) {
    return atomic_inversion_terms(sys).value(t);
}

double mean_phonons_closed(const PreparedSystem &sys, double t) {
    return mean_phonon_terms(sys).value(t);
}

double atomic_inversion_numeric(const PreparedSystem &sys, double t) {
    return hermitian_expectation(sys.shared_->sigma_z, evolve_numeric(sys, t)).value;
}

double mean_phonons_numeric(const PreparedSystem &sys, double t) {
    return hermitian_expectation(sys.shared_->number, evolve_numeric(sys, t)).value;
}

TimeSeries time_series(const PreparedSystem &sys, double t_start, double t_end,
                       std::size_t steps) {
    if (steps < 2) {
        throw DomainError("time series needs at least 2 steps");
    }
    if (!(t_end > t_start)) {
        throw DomainError("time series needs t_end > t_start");
    }
    const auto sz = atomic_inversion_terms(sys);
    const auto nn = mean_phonon_terms(sys);

    TimeSeries ts;
    ts.times = GridAxis{t_start, t_end, steps}.values();
    ts.sigma_z_closed.resize(steps);
    ts.sigma_z_numeric.resize(steps);
    ts.n_closed.resize(steps);
    ts.n_numeric.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = ts.times[i];
        ts.sigma_z_closed[i] = sz.value(t);
        ts.n_closed[i] = nn.value(t);
        const StateVector psi = evolve_numeric(sys, t);
        ts.sigma_z_numeric[i] = hermitian_expectation(sys.shared_->sigma_z, psi).value;
        ts.n_numeric[i] = hermitian_expectation(sys.shared_->number, psi).value;
        ts.max_sigma_z_deviation = std::max(
            ts.max_sigma_z_deviation, std::abs(ts.sigma_z_closed[i] - ts.sigma_z_numeric[i]));
        ts.max_n_deviation =
            std::max(ts.max_n_deviation, std::abs(ts.n_closed[i] - ts.n_numeric[i]));
    }
    return ts;
}

FrequencyEstimate dominant_frequency(std::span<const double> values,
                                     std::span<const double> times) {
    if (values.size() != times.size()) {
        throw DimensionError("value and time arrays differ in length");
    }
    if (values.size() < 3) {
        throw DomainError("frequency extraction needs at least 3 samples");
    }
    const std::size_t n = values.size();
    double mean = 0.0;
    for (const double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(n);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*hi - *lo <= 1e-10 * std::max(1.0, std::abs(mean))) {
        throw NoOscillationError("signal is constant");
    }

    std::vector<double> centered(n);
    std::transform(values.begin(), values.end(), centered.begin(),
                   [mean](double v) { return v - mean; });

    std::vector<double> ups;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = centered[i];
        const double b = centered[i + 1];
        if (a < 0.0 && b >= 0.0) {
            ups.push_back(times[i] + (times[i + 1] - times[i]) * (-a) / (b - a));
        }
    }
    if (ups.size() < 3) {
        throw DomainError("fewer than two full oscillation periods in the window");
    }
    const double zc = kTwoPi * static_cast<double>(ups.size() - 1) / (ups.back() - ups.front());

    // Fourier cross-check on the Hann-windowed signal: coarse scan of the
    // transform magnitude, then a golden-section search around the best bin.
    const double span = times.back() - times.front();
    const double dt = span / static_cast<double>(n - 1);
    std::vector<double> windowed(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (times[i] - times.front()) / span;
        windowed[i] = centered[i] * 0.5 * (1.0 - std::cos(kTwoPi * x));
    }
    bool uniform = true;
    for (std::size_t i = 1; i < n && uniform; ++i) {
        uniform = std::abs(times[i] - times[i - 1] - dt) <= 1e-9 * dt;
    }
    auto power = [&](double w) {
        Complex acc{0.0};
        if (uniform) {
            const Complex step = std::exp(-kI * (w * dt));
            Complex phase = std::exp(-kI * (w * times.front()));
            for (std::size_t i = 0; i < n; ++i) {
                acc += windowed[i] * phase;
                phase *= step;
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                acc += windowed[i] * std::exp(-kI * (w * times[i]));
            }
        }
        return std::norm(acc);
    };
    const double coarse = kTwoPi / span / 8.0;
    const double nyquist = std::numbers::pi / dt;
    double best_w = coarse;
    double best_p = -1.0;
    for (double w = coarse; w < nyquist; w += coarse) {
        const double pw = power(w);
        if (pw > best_p) {
            best_p = pw;
            best_w = w;
        }
    }
    double a = std::max(best_w - coarse, 0.5 * coarse);
    double b = best_w + coarse;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - g * (b - a);
    double x2 = a + g * (b - a);
    double p1 = power(x1);
    double p2 = power(x2);
    while (b - a > 1e-10) {
        if (p1 < p2) {
            a = x1;
            x1 = x2;
            p1 = p2;
            x2 = a + g * (b - a);
            p2 = power(x2);
        } else {
            b = x2;
            x2 = x1;
            p2 = p1;
            x1 = b - g * (b - a);
            p1 = power(x1);
        }
    }
    return {zc, 0.5 * (a + b), ups.size()};
}

StateVector align_global_phase(const StateVector &x) {
    Eigen::Index idx = 0;
    x.amplitudes().cwiseAbs().maxCoeff(&idx);
    const Complex pivot = x.amplitudes()(idx);
    if (pivot == Complex{0.0}) {
        return x;
    }
    return x.scaled(std::conj(pivot) / std::abs(pivot));
}

double phase_aligned_distance(const StateVector &x, const StateVector &y) {
    if (x.amplitudes().size() != y.amplitudes().size()) {
        throw DimensionError("states live in different spaces");
    }
    Eigen::Index idx = 0;
    x.amplitudes().cwiseAbs().maxCoeff(&idx);
    auto unit_phase = [](Complex z) {
        return z == Complex{0.0} ? Complex{1.0} : std::conj(z) / std::abs(z);
    };
    const ComplexVector a = x.amplitudes() * unit_phase(x.amplitudes()(idx));
    const ComplexVector b = y.amplitudes() * unit_phase(y.amplitudes()(idx));
    return (a - b).norm();
}

} // namespace trapion
