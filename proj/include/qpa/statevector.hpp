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
 * @file statevector.hpp
 * @brief Dense 2^n-amplitude simulator for the library's gate set.
 *
 * Index convention: qubit q corresponds to bit (n - 1 - q) of a basis index,
 * so qubit 0 is the most significant bit. Tensor products therefore read
 * left to right in qubit order, e.g. (P on q0) = P (x) I.
 *
 * Tolerances: a constructed state must have unit norm within 1e-10, and
 * extract_diagonal() rejects any off-diagonal magnitude of 1e-10 or more.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qpa/circuit.hpp"

namespace qpa {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kDiagonalTolerance = 1e-10;
inline constexpr int kMaxUnitaryWidth = 12;

class StateVector {
   public:
    /// Computational basis state |index> on n qubits.
    static StateVector basis(int n_qubits, std::uint64_t index = 0);

    /// Adopts amplitudes whose count is a power of two and whose norm is 1 within kNormTolerance.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static StateVector normalized(std::vector<Amplitude> amplitudes);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    double norm() const;
    std::vector<double> probabilities() const;

    bool operator==(const StateVector&) const = default;

   private:
    StateVector(int n_qubits, std::vector<Amplitude> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    friend void apply_gate_inplace(StateVector& state, const Gate& gate);
    friend void apply_global_phase_inplace(StateVector& state, double phase);

    int n_qubits_;
    std::vector<Amplitude> amps_;
};

/// Exact bit mask of qubit q in an n-qubit basis index.
inline std::uint64_t qubit_mask(int n_qubits, int q) { return std::uint64_t{1} << (n_qubits - 1 - q); }

void apply_gate_inplace(StateVector& state, const Gate& gate);
void apply_global_phase_inplace(StateVector& state, double phase);

/// Returns U_gate * state. Throws on a gate that does not fit the state.
StateVector apply_gate(StateVector state, const Gate& gate);

/// Applies every gate in order, then multiplies by e^{i global_phase}.
StateVector run(const Circuit& circuit, StateVector initial);
void run_inplace(const Circuit& circuit, StateVector& state);

/// Full 2^n x 2^n matrix; column j is run(circuit, |j>). Throws WidthTooLarge above 12 qubits.
Eigen::MatrixXcd extract_unitary(const Circuit& circuit);

/// Main diagonal of a diagonal circuit. Throws NotDiagonal if any column
/// leaks weight off the diagonal. Circuits made only of permutation and
/// phase gates are traced basis state by basis state without dense kernels.
std::vector<Amplitude> extract_diagonal(const Circuit& circuit);

/// Deterministic 64-bit generator (std::mt19937_64, whose output sequence is fixed by
/// the C++ standard). Uniform doubles take the top 53 bits, so streams are identical
/// on every conforming platform.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct Histogram {
    int n_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // basis index -> hits; absent means zero

    bool operator==(const Histogram&) const = default;
};

/// Multinomial draw of `shots` measurements of every qubit. Throws InvalidArgument for shots == 0.
Histogram sample(const StateVector& state, std::uint64_t shots, RandomSource& rng);

/// |<a|b>|^2. Throws WidthMismatch.
double fidelity_exact(const StateVector& a, const StateVector& b);

/// Largest |a_i - c b_i| over i after choosing the unit scalar c that best aligns b to a.
double phase_aligned_max_error(std::span<const Amplitude> a, std::span<const Amplitude> b);

}  // namespace qpa
