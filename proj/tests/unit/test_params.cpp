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
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "trapion/errors.hpp"
#include "trapion/params.hpp"

using namespace trapion;

namespace {

const double kSqrt3 = std::sqrt(3.0);

void expect_round_trip(const ParameterSolution &s, double tol = 1e-12) {
    const auto r0 = check_condition_psi0(s.trap, tol);
    const auto r1 = check_conditions_psi1(s.trap, s.m(), tol);
    EXPECT_TRUE(r0.satisfied) << to_string(s.label) << " psi0 residual " << r0.max_abs_residual();
    EXPECT_TRUE(r1.satisfied) << to_string(s.label) << " psi1 residual " << r1.max_abs_residual();
}

const ParameterSolution &find(const ParameterPoints &pts, SolutionLabel label) {
    for (const auto &p : pts.points) {
        if (p.label == label) {
            return p;
        }
    }
    throw std::runtime_error("label missing");
}

} // namespace

TEST(FamilyA, ReproducesOperatingPoint) {
    const auto sols = solve_family_a(1.0, -0.5);
    const auto &neg = sols[1];
    EXPECT_EQ(neg.label, SolutionLabel::AMinus);
    EXPECT_NEAR(neg.trap.eta, -0.75, 1e-12);
    EXPECT_NEAR(neg.trap.delta, -0.1875, 1e-12);
    EXPECT_NEAR(neg.M, -2.0, 1e-12);
    EXPECT_FALSE(neg.degenerate);
    EXPECT_NEAR(sols[0].trap.eta, 0.75, 1e-12);
    EXPECT_NEAR(sols[0].M, 2.0, 1e-12);
    for (const auto &s : sols) {
        expect_round_trip(s);
    }
}

TEST(FamilyA, LowIntensityLimit) {
    const auto sols = solve_family_a(1.0, 1e-9);
    EXPECT_NEAR(sols[0].trap.eta, kSqrt3 / 2.0, 1e-9);
    EXPECT_NEAR(sols[1].trap.eta, -kSqrt3 / 2.0, 1e-9);
    EXPECT_NEAR(sols[0].trap.delta, -0.25, 1e-9);
    EXPECT_NEAR(sols[0].M, kSqrt3, 1e-9);
    EXPECT_NEAR(sols[1].M, -kSqrt3, 1e-9);
    // Rabi frequency |delta - nu| -> 5/4 nu
    EXPECT_NEAR(std::abs(sols[0].e0_plus - sols[0].e1_minus), 1.25, 1e-9);
}

TEST(FamilyA, DomainErrors) {
    EXPECT_THROW(solve_family_a(1.0, 1.0), DomainError);
    EXPECT_THROW(solve_family_a(1.0, -1.0), DomainError);
    EXPECT_THROW(solve_family_a(1.0, 0.0), DomainError);
    EXPECT_THROW(solve_family_a(1.0, 1.5), DomainError);
    EXPECT_THROW(solve_family_a(-1.0, 0.5), DomainError);
}

TEST(FamilyB, Degenerate) {
    const auto sols = solve_family_b(1.0, -0.5);
    EXPECT_NEAR(sols[0].trap.eta, std::sqrt(1.75), 1e-14);
    EXPECT_NEAR(sols[0].trap.eta, 1.3228757, 1e-7);
    EXPECT_NEAR(sols[1].trap.eta, -1.3228757, 1e-7);
    // M = -eta/2 keeps d1/d0 = iM on the psi1 manifold.
    EXPECT_NEAR(sols[0].M, -0.6614379, 1e-7);
    EXPECT_NEAR(sols[1].M, 0.6614379, 1e-7);
    for (const auto &s : sols) {
        EXPECT_EQ(s.trap.delta, 1.0);
        EXPECT_TRUE(s.degenerate);
        EXPECT_EQ(s.e0_plus, 1.5);
        EXPECT_EQ(s.e1_minus, 1.5);
        expect_round_trip(s);
    }
}

TEST(FamilyB, MatchesP2AtUnitOmega) {
    const auto sols = solve_family_b(1.0, 1.0);
    EXPECT_NEAR(sols[0].trap.eta, 1.0, 1e-15);
    EXPECT_NEAR(sols[0].M, -0.5, 1e-15);
    EXPECT_NEAR(sols[1].trap.eta, -1.0, 1e-15);
    EXPECT_NEAR(sols[1].M, 0.5, 1e-15);

    const auto pts = parameter_points(1.0, 0.5);
    const auto &p2 = find(pts, SolutionLabel::P2Plus);
    EXPECT_NEAR(p2.trap.eta, sols[1].trap.eta, 1e-15);
    EXPECT_NEAR(p2.trap.delta, sols[1].trap.delta, 1e-15);
    EXPECT_NEAR(p2.M, sols[1].M, 1e-15);
}

TEST(FamilyB, DomainErrors) {
    EXPECT_THROW(solve_family_b(1.0, 2.0), DomainError);
    EXPECT_THROW(solve_family_b(1.0, std::sqrt(2.0)), DomainError);
    EXPECT_THROW(solve_family_b(1.0, 1.5), DomainError);
    EXPECT_THROW(solve_family_b(1.0, 0.0), DomainError);
}

TEST(ParameterPoints, P1AtMMinusTwo) {
    const auto pts = parameter_points(1.0, -2.0);
    ASSERT_EQ(pts.points.size(), 2U);
    const auto &plus = find(pts, SolutionLabel::P1Plus);
    const auto &minus = find(pts, SolutionLabel::P1Minus);
    EXPECT_NEAR(plus.trap.omega, 0.5, 1e-14);
    EXPECT_NEAR(minus.trap.omega, -0.5, 1e-14);
    for (const auto &p : pts.points) {
        EXPECT_NEAR(p.trap.delta, -0.1875, 1e-15);
        EXPECT_NEAR(p.trap.eta, -0.75, 1e-15);
        EXPECT_FALSE(p.degenerate);
        expect_round_trip(p);
    }
    ASSERT_EQ(pts.omitted.size(), 2U);
    EXPECT_EQ(pts.omitted[0].label, SolutionLabel::P2Plus);
    EXPECT_NE(pts.omitted[0].reason.find("M^2 < 1/2"), std::string::npos);
}

TEST(ParameterPoints, P2AtMHalf) {
    const auto pts = parameter_points(1.0, 0.5);
    ASSERT_EQ(pts.points.size(), 2U);
    EXPECT_NEAR(find(pts, SolutionLabel::P2Plus).trap.omega, 1.0, 1e-15);
    EXPECT_NEAR(find(pts, SolutionLabel::P2Minus).trap.omega, -1.0, 1e-15);
    for (const auto &p : pts.points) {
        EXPECT_EQ(p.trap.delta, 1.0);
        EXPECT_NEAR(p.trap.eta, -1.0, 1e-15);
        EXPECT_TRUE(p.degenerate);
        EXPECT_EQ(p.e0_plus, p.e1_minus);
        expect_round_trip(p);
    }
}

TEST(ParameterPoints, NoRealBranch) {
    const auto pts = parameter_points(1.0, 1.0);
    EXPECT_TRUE(pts.points.empty());
    EXPECT_EQ(pts.omitted.size(), 4U);
    EXPECT_EQ(parameter_points(1.0, 0.0).omitted.size(), 4U);
}

TEST(Intervals, OperatingPointPasses) {
    const auto r = validate_intervals(solve_family_a(1.0, -0.5)[1]);
    EXPECT_TRUE(r.all());
    EXPECT_TRUE(r.signs_consistent);
}

TEST(Intervals, NearUnitOmega) {
    for (const auto &s : solve_family_a(1.0, 0.999)) {
        EXPECT_NEAR(std::abs(s.trap.eta), 0.0387, 1e-4);
        EXPECT_NEAR(s.trap.delta, -0.0005, 1e-5);
        EXPECT_NEAR(std::abs(s.M), 38.7, 0.05);
        EXPECT_TRUE(validate_intervals(s).all());
    }
}

TEST(Intervals, Failures) {
    auto s = solve_family_a(1.0, -0.5)[1];
    s.trap.delta = -0.3;
    const auto r = validate_intervals(s);
    EXPECT_FALSE(r.delta_in_range);
    EXPECT_FALSE(r.all());

    auto wrong_sign = solve_family_a(1.0, -0.5)[0];
    wrong_sign.M = -wrong_sign.M;
    EXPECT_FALSE(validate_intervals(wrong_sign).signs_consistent);

    EXPECT_THROW(validate_intervals(solve_family_b(1.0, 0.5)[0]), DomainError);
}

TEST(Psi1Curve, Examples) {
    const std::vector<double> omegas{-0.5, 0.0};
    const auto curve = psi1_curve(1.0, -2.0, omegas);
    ASSERT_EQ(curve.size(), 2U);
    EXPECT_NEAR(curve[0].eta, -0.75, 1e-15);
    EXPECT_NEAR(curve[0].delta, -0.1875, 1e-15);
    EXPECT_NEAR(curve[1].eta, -2.0 / 3.0, 1e-15);
    EXPECT_NEAR(curve[1].delta, 2.0 / 9.0, 1e-15);
    for (const auto &c : curve) {
        const TrapParams p{1.0, c.omega, c.delta, c.eta};
        EXPECT_LT(check_conditions_psi1(p, Complex{0.0, -2.0}).max_abs_residual(), 1e-12);
    }
    EXPECT_THROW(psi1_curve(1.0, 1.0, omegas), DomainError);
    EXPECT_THROW(psi1_curve(1.0, -1.0, omegas), DomainError);
    EXPECT_THROW(psi1_curve(1.0, 0.0, omegas), DomainError);
}

TEST(Psi1Curve, DenseSamplesSatisfyConditions) {
    std::vector<double> omegas;
    for (int i = 0; i < 121; ++i) {
        omegas.push_back(-1.2 + 0.02 * i);
    }
    for (double M : {-2.0, 0.5, 3.7, -0.2}) {
        for (const auto &c : psi1_curve(1.3, M, omegas)) {
            const TrapParams p{1.3, c.omega, c.delta, c.eta};
            EXPECT_LT(check_conditions_psi1(p, Complex{0.0, M}).max_abs_residual(), 1e-12);
        }
    }
}

TEST(Psi0Surface, Examples) {
    const auto one = psi0_surface(1.0, {0.0, 1.0, 2}, {0.0, 1.0, 2});
    ASSERT_EQ(one.size(), 4U);
    // (Omega, eta) order: (0,0) (0,1) (1,0) (1,1)
    EXPECT_EQ(one[1].delta, 0.0);
    EXPECT_EQ(one[2].delta, 0.0);
    const auto corners = psi0_surface(1.0, {-0.5, 0.5, 3}, {-0.75, 0.75, 3});
    EXPECT_NEAR(corners[0].delta, -0.1875, 1e-15);
    EXPECT_EQ(psi0_surface(1.0, {-1.5, 1.5, 61}, {-1.5, 1.5, 61}).size(), 3721U);
    for (const auto &s : psi0_surface(2.0, {-1.5, 1.5, 21}, {-1.5, 1.5, 21})) {
        EXPECT_LT(std::abs(s.residual), 1e-14);
    }
    EXPECT_THROW(psi0_surface(1.0, {0.0, 1.0, 1}, {0.0, 1.0, 5}), DomainError);
}

TEST(GridAxis, Endpoints) {
    const auto v = GridAxis{-1.2, 1.2, 121}.values();
    EXPECT_EQ(v.front(), -1.2);
    EXPECT_EQ(v.back(), 1.2);
    EXPECT_NEAR(v[60], 0.0, 1e-15);
}

// Invariants over sweeps.

TEST(ParamsProperties, RoundTripSweeps) {
    for (int i = 1; i < 100; ++i) {
        const double omega = -1.0 + 2.0 * i / 100.0;
        if (std::abs(omega) < 1e-9) {
            continue;
        }
        for (const auto &s : solve_family_a(1.0, omega)) {
            expect_round_trip(s);
            EXPECT_NEAR(s.e0_plus - s.e1_minus, s.trap.delta - s.trap.nu, 1e-15);
        }
        for (const auto &s : solve_family_b(1.0, 1.4 * omega)) {
            expect_round_trip(s);
            EXPECT_EQ(s.e0_plus, 1.5);
            EXPECT_EQ(s.e1_minus, 1.5);
        }
    }
    for (int i = 0; i < 100; ++i) {
        const double M = -6.0 + 12.0 * i / 99.0;
        for (const auto &p : parameter_points(1.0, M).points) {
            expect_round_trip(p);
        }
    }
}

TEST(ParamsProperties, DegenerateEnergiesScaleWithNu) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> nu_dist(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double nu = nu_dist(rng);
        for (const auto &s : solve_family_b(nu, 0.7 * nu)) {
            EXPECT_EQ(s.e0_plus, s.e1_minus);
            EXPECT_DOUBLE_EQ(s.e0_plus, 1.5 * nu);
        }
        for (const auto &p : parameter_points(nu, 0.3).points) {
            EXPECT_EQ(p.e0_plus, p.e1_minus);
            EXPECT_DOUBLE_EQ(p.e0_plus, 1.5 * nu);
        }
    }
}

TEST(ParamsProperties, IntervalCoverage) {
    for (int i = 1; i < 2000; ++i) {
        const double omega = -1.0 + i / 1000.0;
        if (i == 1000) {
            continue;
        }
        for (const auto &s : solve_family_a(1.0, omega)) {
            EXPECT_TRUE(validate_intervals(s).all()) << omega;
        }
    }
}

TEST(ParamsProperties, AsymptotesApproachedNotAttained) {
    double prev_delta = 0.0;
    double prev_eta = 0.0;
    double prev_M = 1e300;
    for (int k = 1; k <= 7; ++k) {
        const auto s = solve_family_a(1.0, std::pow(10.0, -k))[0];
        EXPECT_LT(s.trap.delta, prev_delta);
        EXPECT_GT(s.trap.eta, prev_eta);
        EXPECT_LT(s.M, prev_M);
        EXPECT_GT(s.trap.delta, -0.25);
        EXPECT_LT(s.trap.eta, kSqrt3 / 2.0);
        EXPECT_GT(s.M, kSqrt3);
        prev_delta = s.trap.delta;
        prev_eta = s.trap.eta;
        prev_M = s.M;
    }
    EXPECT_NEAR(prev_delta, -0.25, 1e-13);
}

TEST(ParamsProperties, PointsMatchFamilyA) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> nu_dist(0.2, 5.0);
    std::uniform_real_distribution<double> m_dist(1.75, 30.0);
    std::bernoulli_distribution neg(0.5);
    for (int i = 0; i < 100; ++i) {
        const double nu = nu_dist(rng);
        const double M = (neg(rng) ? -1.0 : 1.0) * m_dist(rng);
        for (const auto &p : parameter_points(nu, M).points) {
            const auto sols = solve_family_a(nu, p.trap.omega);
            const auto &match = M > 0 ? sols[0] : sols[1];
            EXPECT_NEAR(match.trap.eta, p.trap.eta, 1e-12);
            EXPECT_NEAR(match.trap.delta, p.trap.delta, 1e-12);
            EXPECT_NEAR(match.M, p.M, 1e-12 * std::max(1.0, std::abs(M)));
        }
    }
}
