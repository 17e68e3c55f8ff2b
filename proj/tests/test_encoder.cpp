// Copyright 2026 The QPA-Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qpa/encoder.hpp"
#include "qpa/metrics.hpp"
#include "support/oracles.hpp"

namespace qpa {
namespace {

using testing::circuit_matrix;
using testing::diagonal_error_mod_phase;
using testing::dft_matrix;
using testing::kI;
using testing::max_abs;
using testing::target_diagonal;

std::vector<double> quadratic_half(int n, double c0, double c1, double c2) {
    std::vector<double> t(std::size_t{1} << (n - 1));
    for (std::size_t j = 0; j < t.size(); ++j) {
        const double x = static_cast<double>(j);
        t[j] = c0 + c1 * x + c2 * x * x;
    }
    return t;
}

int count_kind(const Circuit& c, GateKind kind) {
    return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(),
                                          [&](const Gate& g) { return g.kind == kind; }));
}

TEST(WrapAngleTest, ReducesIntoHalfOpenInterval) {
    EXPECT_DOUBLE_EQ(wrap_angle(0.5), 0.5);
    EXPECT_DOUBLE_EQ(wrap_angle(-std::numbers::pi), std::numbers::pi);
    EXPECT_DOUBLE_EQ(wrap_angle(std::numbers::pi), std::numbers::pi);
    EXPECT_NEAR(wrap_angle(7.0), 7.0 - 2 * std::numbers::pi, 1e-15);
    EXPECT_NEAR(wrap_angle(-100.0), -100.0 + 32 * std::numbers::pi, 1e-13);
}

TEST(ShellTest, LaddersAndReflection) {
    const auto shell = build_qpa_shell(4);
    ASSERT_EQ(shell.left.size(), 3u);
    for (int k = 1; k < 4; ++k) EXPECT_EQ(shell.left.gates()[k - 1], Gate::cnot(0, k));
    EXPECT_EQ(shell.left, shell.right);
    EXPECT_THROW(build_qpa_shell(1), Error);

    for (Amplitude a : extract_diagonal(wrap_in_shell(Circuit(2)))) EXPECT_EQ(a, Amplitude(1.0));

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Circuit payload(4);
    for (int k = 1; k < 4; ++k) payload.add(Gate::phase(k, angle(rng)));
    for (int k = 1; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) payload.add(Gate::cphase(k, l, angle(rng)));
    payload.add(Gate::rz(2, angle(rng)));
    const auto d = extract_diagonal(wrap_in_shell(payload));
    for (int i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(d[i] - d[15 - i]), 0.0, 1e-12);

    Circuit touches_zero(3);
    touches_zero.add(Gate::phase(0, 1.0));
    EXPECT_THROW(wrap_in_shell(touches_zero), Error);
}

TEST(ShellTest, LadderOrderDoesNotMatter) {
    // Ladder CNOTs share their control, so reversed-target ladders give the same operator.
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int n = 2; n <= 5; ++n) {
        Circuit payload(n);
        for (int k = 1; k < n; ++k) payload.add(Gate::phase(k, angle(rng)));
        Circuit reversed(n);
        for (int k = n - 1; k >= 1; --k) reversed.add(Gate::cnot(0, k));
        reversed.append(payload);
        for (int k = 1; k < n; ++k) reversed.add(Gate::cnot(0, k));
        EXPECT_LT(max_abs(extract_unitary(reversed) - extract_unitary(wrap_in_shell(payload))), 1e-12);
    }
}

TEST(QateTest, SolvesTheSmallQuadraticExample) {
    const auto c = solve_qate(PhaseProfile::half({0.0, 0.05, 0.2, 0.45}));
    EXPECT_EQ(c.n_qubits, 3);
    EXPECT_NEAR(c.global_phase, 0.0, 1e-15);
    ASSERT_EQ(c.alpha.size(), 2u);
    EXPECT_NEAR(c.alpha[0], 0.2, 1e-15);
    EXPECT_NEAR(c.alpha[1], 0.05, 1e-15);
    ASSERT_EQ(c.beta.size(), 1u);
    EXPECT_NEAR(c.beta_at(1, 2), 0.2, 1e-15);
    EXPECT_NEAR(c.global_phase + c.alpha[0] + c.alpha[1] + c.beta[0], 0.45, 1e-15);

    const auto d = extract_diagonal(build_qate_circuit(3, c));
    const auto want = target_diagonal({0, 0.05, 0.2, 0.45, 0.45, 0.2, 0.05, 0});
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(d[i] - want[i]), 0.0, 1e-12);
}

TEST(QateTest, ConstantProfileIsGlobalPhaseOnly) {
    const auto c = solve_qate(PhaseProfile::half({0.7, 0.7, 0.7, 0.7}));
    EXPECT_DOUBLE_EQ(c.global_phase, 0.7);
    for (double a : c.alpha) EXPECT_EQ(a, 0.0);
    for (double b : c.beta) EXPECT_EQ(b, 0.0);

    QateCoefficients zero{4, 0.0, std::vector<double>(3, 0.0), std::vector<double>(3, 0.0)};
    for (Amplitude a : extract_diagonal(build_qate_circuit(4, zero))) EXPECT_NEAR(std::abs(a - 1.0), 0.0, 1e-15);
}

TEST(QateTest, PairIndexOrder) {
    EXPECT_EQ(QateCoefficients::pair_index(5, 1, 2), 0u);
    EXPECT_EQ(QateCoefficients::pair_index(5, 1, 4), 2u);
    EXPECT_EQ(QateCoefficients::pair_index(5, 2, 3), 3u);
    EXPECT_EQ(QateCoefficients::pair_index(5, 3, 4), 5u);
    EXPECT_THROW(QateCoefficients::pair_index(5, 2, 2), Error);
    EXPECT_THROW(QateCoefficients::pair_index(5, 0, 2), Error);
}

TEST(QateTest, CompositeAngleRelation) {
    const auto c = solve_qate(PhaseProfile::half({0.3, 1.1, -0.4, 2.0}));
    EXPECT_NEAR(c.beta[0], 2.0 - (c.alpha[0] + c.alpha[1]) - 0.3, 1e-15);
}

TEST(QateTest, RejectsBadInput) {
    EXPECT_THROW(solve_qate(PhaseProfile::full({0, 1, 2, 3})), Error);
    EXPECT_THROW(solve_qate(PhaseProfile::half({0, 1, 2})), Error);
    EXPECT_THROW(solve_qate(PhaseProfile::half({0})), Error);
    const auto c = solve_qate(PhaseProfile::half({0, 1, 2, 3}));
    try {
        build_qate_circuit(4, c);
        FAIL() << "mismatched coefficients accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
    }
}

TEST(QateTest, ExactForRandomQuadraticsAndBisymmetric) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto half = PhaseProfile::half(quadratic_half(n, coef(rng), coef(rng), coef(rng)));
            const Circuit c = build_qate_circuit(n, solve_qate(half));
            const auto d = extract_diagonal(c);
            EXPECT_LT(diagonal_error_mod_phase(d, target_diagonal(half.mirrored().theta)), 1e-10) << n;
            for (std::size_t i = 0; i < d.size(); ++i) {
                EXPECT_NEAR(std::abs(d[i] - d[d.size() - 1 - i]), 0.0, 1e-12);
            }
        }
    }
}

TEST(QateTest, InterpolatesEveryLowPopcountIndex) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-5.0, 5.0);
    for (int n = 2; n <= 6; ++n) {
        std::vector<double> theta(std::size_t{1} << (n - 1));
        for (double& t : theta) t = angle(rng);
        const auto d = extract_diagonal(build_qate_circuit(n, solve_qate(PhaseProfile::half(theta))));
        for (std::size_t j = 0; j < theta.size(); ++j) {
            const double err = std::abs(d[j] - std::polar(1.0, -theta[j]));
            if (std::popcount(j) <= 2) {
                EXPECT_LT(err, 1e-12) << "n=" << n << " j=" << j;
            }
        }
    }
}

TEST(QateTest, GateCountsMatchClosedForm) {
    for (int n = 2; n <= 10; ++n) {
        const auto half = kinetic_phase_profile(Grid::make(10.0, n), 0.1).first_half();
        const auto m = count_gates(build_qate_circuit(n, solve_qate(half)));
        EXPECT_EQ(m.counts, qate_gate_count(n)) << n;
        EXPECT_EQ(m.counts.one_qubit, n - 1);
        EXPECT_EQ(m.counts.two_qubit, binomial(n - 1, 2) + 2 * (n - 1));
    }
}

TEST(QateTest, FiveQubitKineticProfileMatchesClassicalDiagonal) {
    const auto full = kinetic_phase_profile(Grid::make(10.0, 5), 0.1);
    const Circuit c = build_qate_circuit(5, solve_qate(full.first_half()));
    const auto d = extract_diagonal(c);
    const auto want = target_diagonal(full.theta);
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) worst = std::max(worst, std::abs(d[i] - want[i]));
    EXPECT_LT(worst, 1e-12);
    EXPECT_EQ(count_kind(c, GateKind::Phase), 4);
    EXPECT_EQ(count_kind(c, GateKind::ControlledPhase), 6);
}

TEST(QweTest, MidWindowUsesFourPhasesAndOneControlledPhase) {
    const auto half = kinetic_phase_profile(Grid::make(10.0, 5), 0.1).first_half();
    const Circuit c = build_qwe_circuit(5, half, WindowSpec::with_default_budget(5, {11, 12, 13, 14, 15}));
    EXPECT_EQ(count_kind(c, GateKind::Phase), 4);
    EXPECT_EQ(count_kind(c, GateKind::ControlledPhase), 1);
    EXPECT_EQ(count_kind(c, GateKind::ControlledNot), 8);
    const auto d = extract_diagonal(c);
    for (std::uint64_t j : {0, 11, 12, 13, 14, 15}) {
        EXPECT_NEAR(std::abs(d[j] - std::polar(1.0, -half.theta[j])), 0.0, 1e-12) << j;
        EXPECT_NEAR(std::abs(d[31 - j] - std::polar(1.0, -half.theta[j])), 0.0, 1e-12) << j;
    }
}

TEST(QweTest, MidWindowFollowsTheSubstitutionChain) {
    // a_15 = th15 - a0, a_11 = th11 - a15 - a0, a_12 = th12 - a11 - a0,
    // a_13 = th13 - a15 - a0, a_14 = th14 - a11 - a12 - a13 - a0, realized as phases.
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> angle(-1.0, 1.0);
    std::vector<double> th(16);
    for (double& t : th) t = angle(rng);
    const Circuit c = build_qwe_circuit(5, PhaseProfile::half(th), WindowSpec{{11, 12, 13, 14, 15}, 4});
    const auto d = extract_diagonal(c);
    for (std::uint64_t j : {0, 11, 12, 13, 14, 15}) {
        EXPECT_NEAR(std::abs(d[j] - std::polar(1.0, -th[j])), 0.0, 1e-12) << j;
    }
}

TEST(QweTest, SideWindowUsesThreePhasesAndOneControlledPhase) {
    const auto half = kinetic_phase_profile(Grid::make(10.0, 5), 0.1).first_half();
    const Circuit c = build_qwe_circuit(5, half, WindowSpec::with_default_budget(5, {1, 2, 3, 4}));
    EXPECT_EQ(count_kind(c, GateKind::Phase), 3);
    EXPECT_EQ(count_kind(c, GateKind::ControlledPhase), 1);
    const auto d = extract_diagonal(c);
    for (std::uint64_t j : {0, 1, 2, 3, 4}) {
        EXPECT_NEAR(std::abs(d[j] - std::polar(1.0, -half.theta[j])), 0.0, 1e-12) << j;
    }
}

TEST(QweTest, AnchorOnlyWindowIsGlobalPhase) {
    const auto half = PhaseProfile::half({0.4, 1.0, 2.0, 3.0});
    const Circuit c = build_qwe_circuit(3, half, WindowSpec{{0}, 2});
    EXPECT_TRUE(c.empty());
    EXPECT_DOUBLE_EQ(c.global_phase(), -0.4);
}

TEST(QweTest, InfeasibleAndInvalidWindows) {
    const auto half = kinetic_phase_profile(Grid::make(10.0, 5), 0.1).first_half();
    std::vector<std::uint64_t> all(16);
    std::iota(all.begin(), all.end(), 0);
    try {
        build_qwe_circuit(5, half, WindowSpec{all, 4});
        FAIL() << "window needing more pairs than the budget accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasibleWindow);
    }
    EXPECT_THROW(build_qwe_circuit(5, half, WindowSpec{{16}, 4}), Error);
    EXPECT_THROW(build_qwe_circuit(5, half, WindowSpec{{}, 4}), Error);
    EXPECT_THROW(build_qwe_circuit(4, half, WindowSpec{{1}, 4}), Error);
}

TEST(QweTest, RandomFeasibleWindowsAreExact) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    int built = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const std::uint64_t half_size = std::uint64_t{1} << (n - 1);
        std::vector<double> th(half_size);
        for (double& t : th) t = angle(rng);
        std::vector<std::uint64_t> window;
        for (int i = 0; i < 1 + static_cast<int>(rng() % n); ++i) window.push_back(rng() % half_size);
        try {
            const Circuit c = build_qwe_circuit(n, PhaseProfile::half(th), WindowSpec::with_default_budget(n, window));
            EXPECT_LE(count_kind(c, GateKind::Phase), n - 1);
            EXPECT_LE(count_kind(c, GateKind::ControlledPhase), n - 1);
            const auto d = extract_diagonal(c);
            for (auto j : window) EXPECT_NEAR(std::abs(d[j] - std::polar(1.0, -th[j])), 0.0, 1e-9);
            ++built;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InfeasibleWindow);
        }
    }
    EXPECT_GT(built, 100);
}

TEST(DirectDiagonalTest, ExactOnQuadraticFullProfiles) {
    const auto d = extract_diagonal(build_direct_diagonal(2, PhaseProfile::full({0, 0.1, 0.4, 0.9})));
    const auto want = target_diagonal({0, 0.1, 0.4, 0.9});
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(d[i] - want[i]), 0.0, 1e-14);

    const Circuit constant = build_direct_diagonal(2, PhaseProfile::full({1.5, 1.5, 1.5, 1.5}));
    for (const Gate& g : constant.gates()) EXPECT_NEAR(g.angle, 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(constant.global_phase(), -1.5);

    const auto full = kinetic_phase_profile(Grid::make(10.0, 3), 0.1);
    const auto k = extract_diagonal(build_direct_diagonal(3, full));
    const auto kw = target_diagonal(full.theta);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(k[i] - kw[i]), 0.0, 1e-12);

    EXPECT_THROW(build_direct_diagonal(3, PhaseProfile::full({0, 1})), Error);
}

TEST(PotentialCircuitTest, SingleStepOnQubitZero) {
    const Grid g = Grid::make(10.0, 2);
    const double eta = 0.6, dt = 0.25;
    for (int r : {1, 2}) {
        const auto spec = PotentialSpec::from_qubits(g, PotentialKind::SingleStep, eta);
        const auto d = extract_diagonal(build_potential_circuit(2, spec, dt, r));
        const Amplitude lo = std::exp(-kI * eta * dt / double(r));
        const Amplitude hi = std::exp(kI * eta * dt / double(r));
        EXPECT_NEAR(std::abs(d[0] - lo), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(d[1] - lo), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(d[2] - hi), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(d[3] - hi), 0.0, 1e-15);
    }
    const auto zero = PotentialSpec::from_qubits(g, PotentialKind::SingleStep, 0.0);
    for (Amplitude a : extract_diagonal(build_potential_circuit(2, zero, dt, 2))) {
        EXPECT_NEAR(std::abs(a - 1.0), 0.0, 1e-15);
    }
    EXPECT_TRUE(build_potential_circuit(2, PotentialSpec::none(), dt, 2).empty());
    EXPECT_THROW(build_potential_circuit(2, PotentialSpec::from_qubits(g, PotentialKind::SingleStep, 1.0), dt, 3),
                 Error);
    EXPECT_THROW(build_potential_circuit(2, PotentialSpec::steps(PotentialKind::SingleStep, {0.0}, {0, 1}), dt, 2),
                 Error);
}

TEST(QftTest, MatchesDirectDft) {
    for (int n = 1; n <= 6; ++n) {
        const auto dim = std::int64_t{1} << n;
        EXPECT_LT(max_abs(extract_unitary(build_qft(n, false)) - dft_matrix(dim, +1)), 1e-12) << n;
        EXPECT_LT(max_abs(extract_unitary(build_qft(n, true)) - dft_matrix(dim, -1)), 1e-12) << n;
    }
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    EXPECT_LT(max_abs(extract_unitary(build_qft(1, false)) - h / std::sqrt(2.0)), 1e-15);
    const auto f2 = extract_unitary(build_qft(2, false));
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(f2(j, k) - std::pow(kI, j * k) / 2.0), 0.0, 1e-15);
}

TEST(QftTest, InverseUndoesForward) {
    for (int n = 1; n <= 8; ++n) {
        Circuit c = build_qft(n, false);
        c.append(build_qft(n, true));
        const auto u = extract_unitary(c);
        EXPECT_LT(max_abs(u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())), 1e-10) << n;
    }
}

TEST(PhaseRampTest, LinearPhaseOverFullIndex) {
    const double slope = 0.37;
    const auto d = extract_diagonal(build_phase_ramp(4, slope));
    for (int k = 0; k < 16; ++k) EXPECT_NEAR(std::abs(d[k] - std::polar(1.0, slope * k)), 0.0, 1e-13);
    EXPECT_EQ(build_phase_ramp(4, slope).size(), 4u);
}

TEST(EncoderOracleTest, QateAgreesWithKroneckerProduct) {
    const auto half = PhaseProfile::half({0.1, -0.3, 0.8, 1.7, 2.0, -1.1, 0.0, 0.4});
    const Circuit c = build_qate_circuit(4, solve_qate(half));
    EXPECT_LT(max_abs(extract_unitary(c) - circuit_matrix(c)), 1e-12);
}

}  // namespace
}  // namespace qpa
