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

#include "qpa/metrics.hpp"

#include <algorithm>
#include <vector>

namespace qpa {

GateMetrics count_gates(const Circuit& circuit) {
    require_valid(circuit);
    GateMetrics m;
    std::vector<int> frontier(static_cast<std::size_t>(circuit.n_qubits()), 0);
    for (const Gate& g : circuit.gates()) {
        switch (g.qubits.size()) {
            case 1: ++m.counts.one_qubit; break;
            case 2: ++m.counts.two_qubit; break;
            default: ++m.counts.three_qubit; break;
        }
        int layer = 0;
        for (int q : g.qubits) {
            layer = std::max(layer, frontier[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (int q : g.qubits) {
            frontier[static_cast<std::size_t>(q)] = layer;
        }
        m.depth = std::max(m.depth, layer);
    }
    m.counts.total = m.counts.one_qubit + m.counts.two_qubit + m.counts.three_qubit;
    return m;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

GateCounts qate_gate_count(int n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidWidth, "the pyramid encoder needs at least 2 qubits, got " + std::to_string(n));
    }
    GateCounts c;
    c.one_qubit = n - 1;
    c.two_qubit = static_cast<int>(binomial(n - 1, 2)) + 2 * (n - 1);
    c.total = c.one_qubit + c.two_qubit;
    return c;
}

std::int64_t baseline_gate_count(int n) { return 3 * static_cast<std::int64_t>(n) + binomial(n, 2); }

}  // namespace qpa
