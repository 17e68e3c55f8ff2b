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
 * @file metrics.hpp
 * @brief Structural circuit metrics and closed-form gate-count formulas.
 */
#pragma once

#include <cstdint>

#include "qpa/circuit.hpp"

namespace qpa {

struct GateCounts {
    int one_qubit = 0;
    int two_qubit = 0;
    int three_qubit = 0;
    int total = 0;

    bool operator==(const GateCounts&) const = default;
};

struct GateMetrics {
    GateCounts counts;
    /// Number of greedy ASAP layers; a layer holds gates on pairwise-disjoint qubits.
    int depth = 0;
};

/// Throws the circuit's validation error if it is malformed.
GateMetrics count_gates(const Circuit& circuit);

/// Predicted counts for a QATE encoder on n qubits:
/// n-1 phase gates, C(n-1,2) controlled-phase gates and 2(n-1) ladder CNOTs.
/// Throws InvalidWidth for n < 2.
GateCounts qate_gate_count(int n);

/// 3n + C(n,2), the reference count for a direct n-qubit kinetic encoder.
std::int64_t baseline_gate_count(int n);

std::int64_t binomial(int n, int k);

}  // namespace qpa
