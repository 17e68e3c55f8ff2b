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

/**
 * @file encoder.hpp
 * @brief Diagonal-unitary encoders built on the pyramid (CNOT-ladder) shell,
 * plus the step-potential and QFT circuits used by the evolution driver.
 *
 * Pyramid shell: a ladder CX(0, k), k = 1..n-1, on each side of a diagonal
 * payload F acting on qubits 1..n-1. For q0 = 1 the ladder complements the
 * remaining bits, so the realized diagonal is [f(0..L-1), f(L-1..0)] with
 * L = 2^{n-1}: the payload only has to encode the first half of a
 * mirror-symmetric profile.
 *
 * Half-index j in [0, L) has bit b_k(j) for qubit k = 1..n-1 with weight
 * w_k = 2^{n-1-k} (qubit 1 is the most significant). Payloads realize the
 * degree-2 multilinear phase
 *
 *     phi(j) = g + sum_k b_k alpha_k + sum_{k<l} b_k b_l beta_kl
 *
 * and every builder emits diag(e^{-i phi}), i.e. gate angles are negated.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "qpa/circuit.hpp"
#include "qpa/grids.hpp"

namespace qpa {

/// Reduces an angle into (-pi, pi].
double wrap_angle(double angle);

struct QateCoefficients {
    int n_qubits = 0;
    double global_phase = 0.0;  // g = theta[0]
    std::vector<double> alpha;  // alpha[k - 1] for qubit k = 1..n-1
    std::vector<double> beta;   // pairs (1,2), (1,3), ..., (1,n-1), (2,3), ...

    /// Position of the pair (k, l), 1 <= k < l <= n-1, inside `beta`.
    static std::size_t pair_index(int n_qubits, int k, int l);
    double beta_at(int k, int l) const { return beta[pair_index(n_qubits, k, l)]; }
};

struct PyramidShell {
    Circuit left;
    Circuit right;
};

/// The two CNOT ladders; throws InvalidWidth for n < 2.
PyramidShell build_qpa_shell(int n);

/// Wraps a diagonal payload on qubits 1..n-1 in the pyramid ladders.
Circuit wrap_in_shell(const Circuit& payload);

/// Primary angles alpha_k = theta[w_k] - g and composite angles
/// beta_kl = theta[w_k + w_l] - alpha_k - alpha_l - g, with g = theta[0].
/// Exact for any half profile that is quadratic in the index. Throws
/// SizeMismatch unless the profile is a half profile of length 2^{n-1}, n >= 2.
QateCoefficients solve_qate(const PhaseProfile& half_profile);

/// ladder | Phase(k, -alpha_k) | ControlledPhase(k, l, -beta_kl) | ladder, global phase -g.
Circuit build_qate_circuit(int n, const QateCoefficients& coeffs);

struct WindowSpec {
    std::vector<std::uint64_t> indices;  // half-indices that must be reproduced
    int cp_budget = 0;                   // maximum number of ControlledPhase gates

    static WindowSpec with_default_budget(int n, std::vector<std::uint64_t> indices) {
        return WindowSpec{std::move(indices), n - 1};
    }
};

/// Windowed encoder: exact on window.indices (and on the anchor index 0,
/// which fixes the global phase), unconstrained elsewhere. Throws
/// InfeasibleWindow when n-1 phase gates plus cp_budget controlled-phase
/// gates cannot interpolate the window.
Circuit build_qwe_circuit(int n, const PhaseProfile& half_profile, const WindowSpec& window);

/// Degree-2 multilinear encoder over all n qubits without reflection:
/// n phase gates and C(n,2) controlled-phase gates. Exact when the full
/// profile is quadratic in the index.
Circuit build_direct_diagonal(int n, const PhaseProfile& full_profile);

/// exp(-i eta Z dt / r) on each of the potential's qubits, emitted as
/// RotationZ(2 eta dt / r). r must be 1 or 2.
Circuit build_potential_circuit(int n, const PotentialSpec& spec, double dt, int r);

/// Forward transform |j> -> 2^{-n/2} sum_k e^{2 pi i jk / 2^n} |k>; `inverse` gives its adjoint.
Circuit build_qft(int n, bool inverse);

/// diag(e^{i slope k}) over the full index k, as n Phase gates.
Circuit build_phase_ramp(int n, double slope);

}  // namespace qpa
