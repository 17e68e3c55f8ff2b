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
 * @file grids.hpp
 * @brief Position/momentum discretization, phase profiles, potentials and
 * the initial Gaussian packet.
 *
 * Position samples sit at cell centres x_k = -d + (k + 1/2) dx with
 * dx = 2d/N; momentum samples are p_j = (pi/d)(j + 1/2 - N/2). Both are
 * computed as (offset) * spacing so they are exactly antisymmetric.
 */
#pragma once

#include <vector>

#include "qpa/statevector.hpp"

namespace qpa {

struct Grid {
    double half_range = 10.0;  // d; samples span (-d, d)
    int n_qubits = 5;

    /// Throws InvalidArgument unless d > 0 and 1 <= n <= 30.
    static Grid make(double half_range, int n_qubits);

    std::size_t size() const { return std::size_t{1} << n_qubits; }
    double spacing() const { return 2.0 * half_range / static_cast<double>(size()); }
    double momentum_spacing() const;
};

enum class ProfileExtent { Full, Half };
enum class ProfileSource { Kinetic, Custom };

/// Angles theta (radians) targeted as diag(e^{-i theta}).
struct PhaseProfile {
    std::vector<double> theta;
    ProfileExtent extent = ProfileExtent::Full;
    ProfileSource source = ProfileSource::Custom;

    static PhaseProfile full(std::vector<double> theta, ProfileSource source = ProfileSource::Custom);
    static PhaseProfile half(std::vector<double> theta, ProfileSource source = ProfileSource::Custom);

    /// First half of a full profile; a half profile is returned unchanged.
    PhaseProfile first_half() const;
    /// Full profile whose second half is the mirror image of this half profile.
    PhaseProfile mirrored() const;
    bool is_palindromic(double tolerance) const;
};

enum class PotentialKind { None, SingleStep, DoubleStep, MultiStep };

/// A piecewise-constant potential with both of its realizations: the qubit
/// positions carrying e^{-i eta Z t} in a circuit, and the equivalent x-space
/// boundaries/values used by the classical oracle.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::None;
    double eta = 0.0;
    std::vector<int> qubits;
    std::vector<double> boundaries;  // strictly increasing, inside (-d, d)
    std::vector<double> values;      // boundaries.size() + 1 region values

    static PotentialSpec none() { return {}; }

    /// Explicit x-space steps; such a spec has no circuit realization.
    static PotentialSpec steps(PotentialKind kind, std::vector<double> boundaries, std::vector<double> values);

    /// Z rotations on `qubits` (default position per kind when empty: 0 for
    /// single, 1 for double). The matching x-space profile is
    /// V(x_k) = eta * sum_q (1 - 2 b_q(k)), so V = +eta where the qubit reads 0
    /// and -eta where it reads 1.
    static PotentialSpec from_qubits(const Grid& grid, PotentialKind kind, double eta, std::vector<int> qubits = {});
};

struct PacketSpec {
    double k0 = 1.0;
};

std::vector<double> position_samples(const Grid& grid);
std::vector<double> momentum_samples(const Grid& grid);

/// theta_j = p_j^2 dt / (2m), stored as non-negative magnitudes.
/// Throws InvalidArgument for m <= 0 or dt < 0.
PhaseProfile kinetic_phase_profile(const Grid& grid, double dt, double mass = 1.0);

/// Normalized samples of exp(-x^2/2) exp(i k0 x).
StateVector gaussian_packet(const Grid& grid, const PacketSpec& spec);

/// V(x_k) from the potential's x-space boundaries. Throws InvalidArgument for malformed boundaries.
std::vector<double> potential_profile(const Grid& grid, const PotentialSpec& spec);

}  // namespace qpa
