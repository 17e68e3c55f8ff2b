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
 * @file evolution.hpp
 * @brief Second-order Trotterized wave-packet evolution on the simulator and
 * the classical split-step reference it is checked against.
 *
 * One substep of length delta = dt / Nt is
 *
 *     U = V(delta/2) * QFT * K(delta) * IQFT * V(delta/2)
 *
 * read right to left, so the inverse transform takes the position register
 * to momentum. In centered mode a phase ramp D = diag(e^{i pi k (1 - 1/N)})
 * precedes the inverse transform and its conjugate follows the forward one,
 * which makes the transform pair agree with the half-integer offset grids.
 * Paper mode leaves the ramps out.
 */
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qpa/grids.hpp"
#include "qpa/swap_test.hpp"

namespace qpa {

enum class EvolutionMode { Paper, Centered };

std::string_view mode_name(EvolutionMode mode);
/// Throws InvalidArgument for anything but "paper" or "centered".
EvolutionMode parse_mode(std::string_view name);

struct EvolutionConfig {
    Grid grid;
    PacketSpec packet;
    PotentialSpec potential;
    double dt = 0.1;        // time per reported step
    int trotter_steps = 10;  // substeps per reported step
    int total_steps = 1;     // reported steps after t = 0
    EvolutionMode mode = EvolutionMode::Centered;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    double mass = 1.0;
};

/// Throws InvalidArgument on Nt < 1, dt < 0, total_steps < 0, shots < 1 or mass <= 0.
void validate(const EvolutionConfig& config);

/// Every vector has total_steps + 1 entries; entry 0 is t = 0.
struct EvolutionResult {
    std::vector<StateVector> quantum_states;
    std::vector<StateVector> oracle_states;
    std::vector<Histogram> histograms;
    std::vector<double> exact_fidelity;
    std::vector<FidelityReport> swap_fidelity;
    std::vector<double> norms;
};

/// Circuit for one Trotter substep.
Circuit trotter_step_circuit(const EvolutionConfig& config);

/// Quantum states at every reported step, without sampling.
std::vector<StateVector> evolve_states(const EvolutionConfig& config);

/// States plus the per-step histogram and swap test. One generator seeded
/// from config.seed is consumed in step order, histogram before swap test.
EvolutionResult evolve_quantum(const EvolutionConfig& config);

/// Same product formula on a plain array with a direct O(N^2) transform
/// between the centered position and momentum grids.
std::vector<StateVector> evolve_classical_oracle(const EvolutionConfig& config);

}  // namespace qpa
