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
 * @file circuit.hpp
 * @brief Gate-list circuit representation with validation and JSON I/O.
 *
 * Qubit 0 is the most significant bit of a basis index throughout the
 * library. A circuit carries its global phase as a field so that phase
 * offsets cost no gates.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpa/error.hpp"

namespace qpa {

enum class GateKind {
    PauliX,
    Hadamard,
    Phase,            // diag(1, e^{i angle})
    ControlledPhase,  // diag(1, 1, 1, e^{i angle}), symmetric in its qubits
    ControlledNot,    // qubits = {control, target}
    Swap,
    ControlledSwap,   // qubits = {control, a, b}
    RotationZ,        // diag(e^{-i angle/2}, e^{i angle/2})
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// Number of qubits a gate of this kind acts on.
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<int> qubits;  // controls first
    double angle = 0.0;

    static Gate x(int q) { return {GateKind::PauliX, {q}, 0.0}; }
    static Gate h(int q) { return {GateKind::Hadamard, {q}, 0.0}; }
    static Gate phase(int q, double angle) { return {GateKind::Phase, {q}, angle}; }
    static Gate cphase(int control, int target, double angle) {
        return {GateKind::ControlledPhase, {control, target}, angle};
    }
    static Gate cnot(int control, int target) { return {GateKind::ControlledNot, {control, target}, 0.0}; }
    static Gate swap(int a, int b) { return {GateKind::Swap, {a, b}, 0.0}; }
    static Gate cswap(int control, int a, int b) { return {GateKind::ControlledSwap, {control, a, b}, 0.0}; }
    static Gate rz(int q, double angle) { return {GateKind::RotationZ, {q}, angle}; }

    bool operator==(const Gate&) const = default;
};

class Circuit {
   public:
    /// Throws InvalidWidth when n_qubits < 1.
    explicit Circuit(int n_qubits, double global_phase = 0.0);

    int n_qubits() const noexcept { return n_qubits_; }
    double global_phase() const noexcept { return global_phase_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    Circuit& add(Gate gate);
    Circuit& add_global_phase(double phase);

    /// Appends every gate of `other` and adds its global phase. Widths must match.
    Circuit& append(const Circuit& other);

    bool operator==(const Circuit&) const = default;

   private:
    int n_qubits_;
    double global_phase_;
    std::vector<Gate> gates_;
};

/// Checks one gate against a circuit width. Never throws.
std::optional<Error> validate(const Gate& gate, int n_qubits);

/// Returns the first violated invariant, or nullopt for a well-formed circuit. Never throws.
std::optional<Error> validate(const Circuit& circuit);

/// Throws the error reported by validate(), if any.
void require_valid(const Circuit& circuit);

/// {"n_qubits": int, "global_phase": float, "gates": [{"kind", "qubits", "angle"?}]}
/// with 17 significant digits for every float.
std::string to_json(const Circuit& circuit);

/// Parses the format written by to_json(). Throws InvalidArgument on malformed
/// input and the usual validation errors on inconsistent gates.
Circuit circuit_from_json(std::string_view text);

}  // namespace qpa
