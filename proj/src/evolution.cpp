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

#include "qpa/evolution.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpa/encoder.hpp"

namespace qpa {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Error(ErrorCode::InvalidArgument, what);
    }
}

double substep(const EvolutionConfig& config) { return config.dt / static_cast<double>(config.trotter_steps); }

/// Slope of the ramp that turns the plain transform pair into the centered one.
double ramp_slope(const Grid& grid) {
    return std::numbers::pi * (1.0 - 1.0 / static_cast<double>(grid.size()));
}

}  // namespace

std::string_view mode_name(EvolutionMode mode) {
    return mode == EvolutionMode::Paper ? "paper" : "centered";
}

EvolutionMode parse_mode(std::string_view name) {
    if (name == "paper") {
        return EvolutionMode::Paper;
    }
    if (name == "centered") {
        return EvolutionMode::Centered;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(name) + "' (expected paper or centered)");
}

void validate(const EvolutionConfig& config) {
    require(config.trotter_steps >= 1, "trotter steps must be at least 1");
    require(std::isfinite(config.dt) && config.dt >= 0.0, "dt must be non-negative");
    require(config.total_steps >= 0, "total steps must be non-negative");
    require(config.shots >= 1, "shots must be at least 1");
    require(std::isfinite(config.mass) && config.mass > 0.0, "mass must be positive");
    Grid::make(config.grid.half_range, config.grid.n_qubits);
}

Circuit trotter_step_circuit(const EvolutionConfig& config) {
    validate(config);
    const int n = config.grid.n_qubits;
    const double delta = substep(config);

    const Circuit half_potential = build_potential_circuit(n, config.potential, delta, 2);
    const PhaseProfile kinetic = kinetic_phase_profile(config.grid, delta, config.mass);
    const Circuit kinetic_circuit = build_qate_circuit(n, solve_qate(kinetic.first_half()));
    const bool centered = config.mode == EvolutionMode::Centered;

    Circuit step(n);
    step.append(half_potential);
    if (centered) {
        step.append(build_phase_ramp(n, ramp_slope(config.grid)));
    }
    step.append(build_qft(n, true));
    step.append(kinetic_circuit);
    step.append(build_qft(n, false));
    if (centered) {
        step.append(build_phase_ramp(n, -ramp_slope(config.grid)));
    }
    step.append(half_potential);
    return step;
}

std::vector<StateVector> evolve_states(const EvolutionConfig& config) {
    const Circuit step = trotter_step_circuit(config);
    StateVector state = gaussian_packet(config.grid, config.packet);
    std::vector<StateVector> states{state};
    states.reserve(static_cast<std::size_t>(config.total_steps) + 1);
    for (int s = 0; s < config.total_steps; ++s) {
        for (int r = 0; r < config.trotter_steps; ++r) {
            run_inplace(step, state);
        }
        states.push_back(state);
    }
    return states;
}

EvolutionResult evolve_quantum(const EvolutionConfig& config) {
    EvolutionResult result;
    result.quantum_states = evolve_states(config);
    result.oracle_states = evolve_classical_oracle(config);

    RandomSource rng(config.seed);
    for (std::size_t s = 0; s < result.quantum_states.size(); ++s) {
        const StateVector& q = result.quantum_states[s];
        const StateVector& o = result.oracle_states[s];
        result.histograms.push_back(sample(q, config.shots, rng));
        result.swap_fidelity.push_back(swap_test_estimate(q, o, config.shots, rng));
        result.exact_fidelity.push_back(fidelity_exact(q, o));
        result.norms.push_back(q.norm());
    }
    return result;
}

std::vector<StateVector> evolve_classical_oracle(const EvolutionConfig& config) {
    validate(config);
    const Grid& grid = config.grid;
    const std::size_t n = grid.size();
    const double delta = substep(config);
    const auto x = position_samples(grid);
    const auto p = momentum_samples(grid);
    const auto v = potential_profile(grid, config.potential);
    const auto theta = kinetic_phase_profile(grid, delta, config.mass).theta;

    std::vector<Amplitude> half_potential(n);
    std::vector<Amplitude> kinetic(n);
    for (std::size_t k = 0; k < n; ++k) {
        half_potential[k] = std::polar(1.0, -v[k] * delta / 2.0);
        kinetic[k] = std::polar(1.0, -theta[k]);
    }
    // forward[j][k] = e^{-i p_j x_k} / sqrt(N); its adjoint maps back.
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> forward(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            forward[j * n + k] = std::polar(scale, -p[j] * x[k]);
        }
    }

    const StateVector initial = gaussian_packet(grid, config.packet);
    std::vector<Amplitude> psi(initial.amplitudes().begin(), initial.amplitudes().end());
    std::vector<Amplitude> momentum(n);
    std::vector<StateVector> states{initial};
    for (int s = 0; s < config.total_steps; ++s) {
        for (int r = 0; r < config.trotter_steps; ++r) {
            for (std::size_t k = 0; k < n; ++k) psi[k] *= half_potential[k];
            for (std::size_t j = 0; j < n; ++j) {
                Amplitude acc{};
                for (std::size_t k = 0; k < n; ++k) acc += forward[j * n + k] * psi[k];
                momentum[j] = acc * kinetic[j];
            }
            for (std::size_t k = 0; k < n; ++k) {
                Amplitude acc{};
                for (std::size_t j = 0; j < n; ++j) acc += std::conj(forward[j * n + k]) * momentum[j];
                psi[k] = acc * half_potential[k];
            }
        }
        states.push_back(StateVector::from_amplitudes(psi));
    }
    return states;
}

}  // namespace qpa
