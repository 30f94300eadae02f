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

// Test-only reference computations. Nothing here calls the library's
// eigensolver-based paths, so these stay independent of what they check.

#include <cmath>

#include <Eigen/Dense>

namespace trapion::oracle {

/// exp(A) by scaling and squaring with a degree-20 Taylor polynomial.
inline Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXcd &a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXcd scaled = a / std::pow(2.0, squarings);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 20; ++k) {
        term = (term * scaled / static_cast<double>(k)).eval();
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) {
        sum = (sum * sum).eval();
    }
    return sum;
}

/// Annihilation operator built directly, without bosonic_alphabet().
inline Eigen::MatrixXcd annihilation(Eigen::Index levels) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
    for (Eigen::Index k = 1; k < levels; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

/// D(alpha) by Taylor exponentiation of the truncated generator.
inline Eigen::MatrixXcd displacement_taylor(std::complex<double> alpha, Eigen::Index levels) {
    const Eigen::MatrixXcd a = annihilation(levels);
    return expm_taylor(alpha * a.adjoint() - std::conj(alpha) * a);
}

// Values below were computed outside this code base with scipy.linalg.expm
// on a 64-level truncation: H assembled from expm(i eta (a + a^dag)),
// |psi(t)> = expm(-i H t)|psi(0)>, expectation values taken directly.
// Parameters: nu=1, Omega=-0.5, delta=-0.1875, eta=-0.75, d0=1, d1=-2i,
// c1=c2=1/sqrt(2).
namespace reference {

inline constexpr double kSigmaZAt0 = -0.4377777386108536;
inline constexpr double kPhononsAt0 = 1.513314456135801;

struct Sample {
    double t;
    double sigma_z;
    double phonons;
};

inline constexpr Sample kSamples[] = {
    {0.0, -0.4377777386108536, 1.513314456135801},
    {1.0, -0.21250076505658422, 1.4264219091934414},
    {2.5, 0.27657168255711273, 1.2377796793995888},
    {7.3, 0.18389692071657016, 1.2735256589666624},
    {50.0, 0.2641983357706351, 1.2425522560173947},
};

// Period averages and half peak-to-peak over one period.
inline constexpr double kSigmaZConstant = -0.07792207792207789;
inline constexpr double kSigmaZAmplitude = 0.3598556606887766;
inline constexpr double kPhononConstant = 1.3745129870129875;
inline constexpr double kPhononAmplitude = 0.13880146912281288;

// c2 = 0: the state is psi0_plus alone.
inline constexpr double kSigmaZPsi0Only = 0.42857142857142866;
inline constexpr double kPhononsPsi0Only = 0.8035714285714288;

} // namespace reference

} // namespace trapion::oracle
