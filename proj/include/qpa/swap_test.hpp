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
 * @file swap_test.hpp
 * @brief Swap-test circuit and a sampled fidelity estimator.
 *
 * Layout on 2n+1 qubits: qubit 0 is the ancilla, register A occupies qubits
 * 1..n and register B qubits n+1..2n, each in its own big-endian order.
 */
#pragma once

#include <cstdint>

#include "qpa/statevector.hpp"

namespace qpa {

struct FidelityReport {
    double exact = 0.0;
    double estimated = 0.0;
    std::uint64_t shots = 0;
    /// Binomial standard error of the sampled Pr(ancilla = 0). The estimate
    /// 2 Pr(0) - 1 therefore carries twice this value.
    double std_error = 0.0;
};

/// H(0), ControlledSwap(0, 1+i, n+1+i) for i = 0..n-1, H(0). Throws InvalidWidth for n < 1.
Circuit swap_test_circuit(int n);

/// |0> (x) a (x) b as one 2n+1 qubit state. Throws WidthMismatch.
StateVector swap_test_input(const StateVector& a, const StateVector& b);

/// Pr(ancilla = 0) from the overlap, (1 + |<a|b>|^2) / 2. Noise-free; exact at the endpoints.
double swap_test_zero_probability(const StateVector& a, const StateVector& b);

/// Pr(ancilla = 0) after simulating the swap-test circuit on 2n+1 qubits.
double swap_test_circuit_zero_probability(const StateVector& a, const StateVector& b);

/// Draws `shots` ancilla outcomes from the simulated circuit. The estimate is
/// 2 Pr(0) - 1 clamped to [0, 1]. Throws WidthMismatch, or InvalidArgument for shots == 0.
FidelityReport swap_test_estimate(const StateVector& a, const StateVector& b, std::uint64_t shots,
                                  RandomSource& rng);

}  // namespace qpa
