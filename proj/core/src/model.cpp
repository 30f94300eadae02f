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
#include "trapion/model.hpp"

#include <cmath>
#include <sstream>

#include "trapion/errors.hpp"

namespace trapion {

namespace {

void require_coherent_fits(Complex alpha, const Truncation &trunc) {
    const double deficit = coherent_tail_weight(alpha, trunc);
    if (deficit > kDefaultMaxNormDeficit) {
        std::ostringstream msg;
        msg << "truncation of " << trunc.levels() << " levels loses weight " << deficit
            << " of the coherent state |" << alpha << ">";
        throw TruncationError(msg.str());
    }
}

ConditionReport make_report(EigenFamily family, std::vector<NamedResidual> residuals,
                            double tol) {
    bool ok = true;
    for (const auto &r : residuals) {
        ok = ok && std::abs(r.value) <= tol;
    }
    return {family, std::move(residuals), tol, ok};
}

} // namespace

void TrapParams::validate() const {
    if (!std::isfinite(nu) || !std::isfinite(omega) || !std::isfinite(delta) ||
        !std::isfinite(eta)) {
        throw DomainError("trap parameters must be finite");
    }
    if (nu <= 0.0) {
        throw DomainError("vibrational frequency nu must be positive");
    }
    if (omega == 0.0) {
        throw DomainError("Rabi frequency omega must be nonzero");
    }
    if (eta == 0.0) {
        throw DomainError("Lamb-Dicke parameter eta must be nonzero");
    }
}

std::string_view to_string(EigenFamily family) {
    switch (family) {
    case EigenFamily::Psi0Plus:
        return "psi0_plus";
    case EigenFamily::Psi1Minus:
        return "psi1_minus";
    }
    return "unknown";
}

double ConditionReport::max_abs_residual() const {
    double worst = 0.0;
    for (const auto &r : residuals) {
        worst = std::max(worst, std::abs(r.value));
    }
    return worst;
}

const NamedResidual *ConditionReport::first_failure() const {
    for (const auto &r : residuals) {
        if (std::abs(r.value) > tolerance) {
            return &r;
        }
    }
    return nullptr;
}

Hamiltonian build_hamiltonian(const TrapParams &p, const Truncation &trunc) {
    p.validate();
    return build_hamiltonian(p, trunc,
                             displacement_matrix(kI * p.eta, trunc, DisplacementMethod::Laguerre));
}

Hamiltonian build_hamiltonian(const TrapParams &p, const Truncation &trunc,
                              const ComplexMatrix &displacement) {
    const auto n = static_cast<Eigen::Index>(trunc.levels());
    if (displacement.rows() != n || displacement.cols() != n) {
        throw DimensionError("displacement operator does not match the truncation");
    }
    const auto ops = bosonic_alphabet(trunc);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);

    ComplexMatrix h = p.nu * qubit_kron(pauli::identity(), ops.n_op) +
                      (0.5 * p.delta) * qubit_kron(pauli::sigma_z(), id) +
                      p.omega * (qubit_kron(pauli::sigma_plus(), displacement) +
                                 qubit_kron(pauli::sigma_minus(), displacement.adjoint()));

    const double asymmetry = (h - h.adjoint()).cwiseAbs().maxCoeff();
    ComplexMatrix sym = 0.5 * (h + h.adjoint());
    return {std::move(sym), asymmetry};
}

double energy_psi0_plus(const TrapParams &p) { return p.nu + 0.5 * p.delta; }

double energy_psi1_minus(const TrapParams &p) { return 2.0 * p.nu - 0.5 * p.delta; }

double norm_psi0_plus(const TrapParams &p) {
    const double w = p.omega / p.nu;
    const double v = p.eta * p.nu / p.omega;
    return std::sqrt(1.0 + w * w + v * v);
}

double norm_psi1_minus(const TrapParams &p, const EigenCoeffs &c) {
    const double half = p.omega / (2.0 * p.nu);
    const double w = p.omega / p.nu;
    const double v = p.eta * p.nu / p.omega;
    return std::sqrt((1.0 + half * half) * std::norm(c.d0) +
                     (1.0 + w * w + 2.0 * v * v) * std::norm(c.d1));
}

EigenpairCandidate psi0_plus(const TrapParams &p, const Truncation &trunc) {
    p.validate();
    require_coherent_fits(-kI * p.eta, trunc);

    const auto n = static_cast<Eigen::Index>(trunc.levels());
    ComplexVector upper = ComplexVector::Zero(n);
    upper(0) = p.omega / p.nu;
    upper(1) = (p.nu / p.omega) * kI * p.eta;
    const ComplexVector lower = coherent_state(-kI * p.eta, trunc);

    const auto raw = StateVector::from_spinor(trunc, upper, lower);
    const double direct = raw.norm();
    return {EigenFamily::Psi0Plus, raw.scaled(1.0 / direct), energy_psi0_plus(p),
            norm_psi0_plus(p), direct};
}

EigenpairCandidate psi1_minus(const TrapParams &p, const EigenCoeffs &c,
                              const Truncation &trunc) {
    p.validate();
    if (c.d0 == Complex{0.0} && c.d1 == Complex{0.0}) {
        throw DomainError("eigen coefficients d0 and d1 cannot both vanish");
    }
    if (trunc.levels() < 3) {
        throw TruncationError("psi1_minus needs at least 3 Fock levels");
    }
    require_coherent_fits(kI * p.eta, trunc);

    const auto n = static_cast<Eigen::Index>(trunc.levels());
    const ComplexVector upper = c.d0 * coherent_state(kI * p.eta, trunc) +
                                c.d1 * displaced_number_state(kI * p.eta, 1, trunc);
    const double w = p.omega / p.nu;
    ComplexVector lower = ComplexVector::Zero(n);
    lower(0) = w * 0.5 * c.d0;
    lower(1) = w * c.d1;
    lower(2) = -w * kI * p.eta * (p.nu * p.nu) / (p.omega * p.omega) * std::sqrt(2.0) * c.d1;

    const auto raw = StateVector::from_spinor(trunc, upper, lower);
    const double direct = raw.norm();
    return {EigenFamily::Psi1Minus, raw.scaled(1.0 / direct), energy_psi1_minus(p),
            norm_psi1_minus(p, c), direct};
}

ConditionReport check_condition_psi0(const TrapParams &p, double tol) {
    const double w = p.omega / p.nu;
    const double r = w * w + p.eta * p.eta - p.delta / p.nu - 1.0;
    return make_report(EigenFamily::Psi0Plus, {{"psi0_condition", r}}, tol);
}

ConditionReport check_conditions_psi1(const TrapParams &p, Complex m, double tol) {
    if (m == Complex{0.0}) {
        throw InvalidRatioError("ratio m = d1/d0 must be nonzero");
    }
    if (std::abs(m.real()) > kImaginaryRatioTolerance) {
        std::ostringstream msg;
        msg << "ratio m = d1/d0 = " << m << " is not purely imaginary";
        throw InvalidRatioError(msg.str());
    }
    const double w2 = (p.omega / p.nu) * (p.omega / p.nu);
    const double e2 = p.eta * p.eta;
    const double dn = p.delta / p.nu;
    const Complex first = (2.0 - e2 - dn - 0.5 * w2) - (-kI * p.eta * m);
    const Complex second = (1.0 - e2 - dn - w2) - (kI * p.eta / m);
    return make_report(EigenFamily::Psi1Minus,
                       {{"psi1_condition_1", first}, {"psi1_condition_2", second}}, tol);
}

double eigen_residual(const ComplexMatrix &h, const EigenpairCandidate &cand) {
    const auto &x = cand.state.amplitudes();
    if (h.rows() != x.size() || h.cols() != x.size()) {
        throw DimensionError("Hamiltonian does not act on the candidate state");
    }
    return (h * x - cand.energy * x).norm();
}

} // namespace trapion
