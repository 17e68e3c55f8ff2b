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

#include "qpa/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qpa/format.hpp"

namespace qpa {

namespace {

constexpr std::pair<GateKind, std::string_view> kGateNames[] = {
    {GateKind::PauliX, "PauliX"},
    {GateKind::Hadamard, "Hadamard"},
    {GateKind::Phase, "Phase"},
    {GateKind::ControlledPhase, "ControlledPhase"},
    {GateKind::ControlledNot, "ControlledNot"},
    {GateKind::Swap, "Swap"},
    {GateKind::ControlledSwap, "ControlledSwap"},
    {GateKind::RotationZ, "RotationZ"},
};

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto& [k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "Unknown";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (const auto& [k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::PauliX:
        case GateKind::Hadamard:
        case GateKind::Phase:
        case GateKind::RotationZ:
            return 1;
        case GateKind::ControlledPhase:
        case GateKind::ControlledNot:
        case GateKind::Swap:
            return 2;
        case GateKind::ControlledSwap:
            return 3;
    }
    return 0;
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::Phase || kind == GateKind::ControlledPhase || kind == GateKind::RotationZ;
}

Circuit::Circuit(int n_qubits, double global_phase) : n_qubits_(n_qubits), global_phase_(global_phase) {
    if (n_qubits < 1) {
        throw Error(ErrorCode::InvalidWidth, "circuit width must be positive, got " + std::to_string(n_qubits));
    }
}

Circuit& Circuit::add(Gate gate) {
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit& Circuit::add_global_phase(double phase) {
    global_phase_ += phase;
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw Error(ErrorCode::WidthMismatch, "cannot append a " + std::to_string(other.n_qubits_) +
                                                  "-qubit circuit to a " + std::to_string(n_qubits_) +
                                                  "-qubit circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    global_phase_ += other.global_phase_;
    return *this;
}

std::optional<Error> validate(const Gate& gate, int n_qubits) {
    const int arity = gate_arity(gate.kind);
    if (static_cast<int>(gate.qubits.size()) != arity) {
        return Error(ErrorCode::ArityMismatch, std::string(gate_name(gate.kind)) + " expects " +
                                                   std::to_string(arity) + " qubit(s), got " +
                                                   std::to_string(gate.qubits.size()));
    }
    for (int q : gate.qubits) {
        if (q < 0 || q >= n_qubits) {
            return Error(ErrorCode::IndexOutOfRange, std::string(gate_name(gate.kind)) + " on qubit " +
                                                         std::to_string(q) + " exceeds width " +
                                                         std::to_string(n_qubits));
        }
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
            if (gate.qubits[i] == gate.qubits[j]) {
                return Error(ErrorCode::DuplicateQubit, std::string(gate_name(gate.kind)) +
                                                            " repeats qubit " + std::to_string(gate.qubits[i]));
            }
        }
    }
    if (!std::isfinite(gate.angle)) {
        return Error(ErrorCode::InvalidArgument, std::string(gate_name(gate.kind)) + " has a non-finite angle");
    }
    return std::nullopt;
}

std::optional<Error> validate(const Circuit& circuit) {
    if (!std::isfinite(circuit.global_phase())) {
        return Error(ErrorCode::InvalidArgument, "global phase is not finite");
    }
    for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
        if (auto err = validate(circuit.gates()[i], circuit.n_qubits())) {
            return Error(err->code(), "gate " + std::to_string(i) + ": " + err->what());
        }
    }
    return std::nullopt;
}

void require_valid(const Circuit& circuit) {
    if (auto err = validate(circuit)) {
        throw *err;
    }
}

std::string to_json(const Circuit& circuit) {
    std::ostringstream out;
    out << "{\"n_qubits\": " << circuit.n_qubits() << ", \"global_phase\": " << format_double(circuit.global_phase())
        << ", \"gates\": [";
    for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
        const Gate& g = circuit.gates()[i];
        out << (i == 0 ? "\n  " : ",\n  ") << "{\"kind\": \"" << gate_name(g.kind) << "\", \"qubits\": [";
        for (std::size_t k = 0; k < g.qubits.size(); ++k) {
            out << (k == 0 ? "" : ", ") << g.qubits[k];
        }
        out << "]";
        if (gate_has_angle(g.kind)) {
            out << ", \"angle\": " << format_double(g.angle);
        }
        out << "}";
    }
    out << (circuit.gates().empty() ? "]}\n" : "\n]}\n");
    return out.str();
}

Circuit circuit_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed circuit JSON: ") + e.what());
    }
    try {
        Circuit circuit(doc.at("n_qubits").get<int>(), doc.value("global_phase", 0.0));
        for (const auto& item : doc.at("gates")) {
            const auto name = item.at("kind").get<std::string>();
            const auto kind = parse_gate_kind(name);
            if (!kind) {
                throw Error(ErrorCode::InvalidArgument, "unknown gate kind '" + name + "'");
            }
            Gate gate{*kind, item.at("qubits").get<std::vector<int>>(), 0.0};
            if (gate_has_angle(*kind)) {
                gate.angle = item.at("angle").get<double>();
            }
            circuit.add(std::move(gate));
        }
        require_valid(circuit);
        return circuit;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed circuit JSON: ") + e.what());
    }
}

}  // namespace qpa
