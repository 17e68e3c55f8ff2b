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

#include "qpa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace qpa {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int width_of(std::size_t size) { return std::countr_zero(size); }

void require_fits(const Gate& gate, int n_qubits) {
    if (auto err = validate(gate, n_qubits)) {
        throw Error(err->code() == ErrorCode::IndexOutOfRange ? ErrorCode::WidthMismatch : err->code(), err->what());
    }
}

}  // namespace

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1 || n_qubits > 40) {
        throw Error(ErrorCode::InvalidWidth, "unsupported state width " + std::to_string(n_qubits));
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index) + " outside dimension " +
                                                    std::to_string(dim));
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (!is_power_of_two(amplitudes.size()) || amplitudes.size() < 2) {
        throw Error(ErrorCode::SizeMismatch,
                    "amplitude count " + std::to_string(amplitudes.size()) + " is not a power of two >= 2");
    }
    double sq = 0.0;
    for (const auto& a : amplitudes) {
        sq += std::norm(a);
    }
    if (std::abs(std::sqrt(sq) - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::InvalidArgument, "state norm " + std::to_string(std::sqrt(sq)) + " is not 1");
    }
    const int n = width_of(amplitudes.size());
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(std::vector<Amplitude> amplitudes) {
    double sq = 0.0;
    for (const auto& a : amplitudes) {
        sq += std::norm(a);
    }
    if (!(sq > 0.0) || !std::isfinite(sq)) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& a : amplitudes) {
        a *= inv;
    }
    return from_amplitudes(std::move(amplitudes));
}

double StateVector::norm() const {
    double sq = 0.0;
    for (const auto& a : amps_) {
        sq += std::norm(a);
    }
    return std::sqrt(sq);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Amplitude& a) { return std::norm(a); });
    return p;
}

void apply_gate_inplace(StateVector& state, const Gate& gate) {
    require_fits(gate, state.n_qubits_);
    auto& a = state.amps_;
    const std::size_t dim = a.size();
    const int n = state.n_qubits_;
    const auto mask = [n](int q) { return static_cast<std::size_t>(qubit_mask(n, q)); };

    switch (gate.kind) {
        case GateKind::PauliX: {
            const std::size_t m = mask(gate.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & m)) {
                    std::swap(a[i], a[i | m]);
                }
            }
            break;
        }
        case GateKind::Hadamard: {
            const std::size_t m = mask(gate.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & m)) {
                    const Amplitude a0 = a[i];
                    const Amplitude a1 = a[i | m];
                    a[i] = (a0 + a1) * kInvSqrt2;
                    a[i | m] = (a0 - a1) * kInvSqrt2;
                }
            }
            break;
        }
        case GateKind::Phase: {
            const std::size_t m = mask(gate.qubits[0]);
            const Amplitude f = std::polar(1.0, gate.angle);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & m) {
                    a[i] *= f;
                }
            }
            break;
        }
        case GateKind::ControlledPhase: {
            const std::size_t m = mask(gate.qubits[0]) | mask(gate.qubits[1]);
            const Amplitude f = std::polar(1.0, gate.angle);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m) == m) {
                    a[i] *= f;
                }
            }
            break;
        }
        case GateKind::ControlledNot: {
            const std::size_t c = mask(gate.qubits[0]);
            const std::size_t t = mask(gate.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & c) && !(i & t)) {
                    std::swap(a[i], a[i | t]);
                }
            }
            break;
        }
        case GateKind::Swap:
        case GateKind::ControlledSwap: {
            const bool controlled = gate.kind == GateKind::ControlledSwap;
            const std::size_t c = controlled ? mask(gate.qubits[0]) : 0;
            const std::size_t x = mask(gate.qubits[controlled ? 1 : 0]);
            const std::size_t y = mask(gate.qubits[controlled ? 2 : 1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & c) == c && (i & x) && !(i & y)) {
                    std::swap(a[i], a[(i ^ x) | y]);
                }
            }
            break;
        }
        case GateKind::RotationZ: {
            const std::size_t m = mask(gate.qubits[0]);
            const Amplitude f0 = std::polar(1.0, -0.5 * gate.angle);
            const Amplitude f1 = std::polar(1.0, 0.5 * gate.angle);
            for (std::size_t i = 0; i < dim; ++i) {
                a[i] *= (i & m) ? f1 : f0;
            }
            break;
        }
    }
}

void apply_global_phase_inplace(StateVector& state, double phase) {
    if (phase == 0.0) {
        return;
    }
    const Amplitude f = std::polar(1.0, phase);
    for (auto& x : state.amps_) {
        x *= f;
    }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    apply_gate_inplace(state, gate);
    return state;
}

void run_inplace(const Circuit& circuit, StateVector& state) {
    if (circuit.n_qubits() != state.n_qubits()) {
        throw Error(ErrorCode::WidthMismatch, "circuit has " + std::to_string(circuit.n_qubits()) +
                                                  " qubits but state has " + std::to_string(state.n_qubits()));
    }
    require_valid(circuit);
    for (const Gate& g : circuit.gates()) {
        apply_gate_inplace(state, g);
    }
    apply_global_phase_inplace(state, circuit.global_phase());
}

StateVector run(const Circuit& circuit, StateVector initial) {
    run_inplace(circuit, initial);
    return initial;
}

Eigen::MatrixXcd extract_unitary(const Circuit& circuit) {
    const int n = circuit.n_qubits();
    if (n > kMaxUnitaryWidth) {
        throw Error(ErrorCode::WidthTooLarge, "refusing to build a dense unitary on " + std::to_string(n) + " qubits");
    }
    require_valid(circuit);
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        const StateVector col = run(circuit, StateVector::basis(n, j));
        for (std::size_t i = 0; i < dim; ++i) {
            u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
        }
    }
    return u;
}

namespace {

bool is_monomial_kind(GateKind kind) { return kind != GateKind::Hadamard; }

/// Follows one basis state through permutation/phase gates. Returns the
/// final index and accumulated phase.
std::pair<std::uint64_t, double> trace_basis_state(const Circuit& circuit, std::uint64_t index) {
    const int n = circuit.n_qubits();
    const auto bit = [&](int q) { return (index & qubit_mask(n, q)) != 0; };
    double phase = circuit.global_phase();
    for (const Gate& g : circuit.gates()) {
        const auto& q = g.qubits;
        switch (g.kind) {
            case GateKind::PauliX:
                index ^= qubit_mask(n, q[0]);
                break;
            case GateKind::Phase:
                if (bit(q[0])) phase += g.angle;
                break;
            case GateKind::ControlledPhase:
                if (bit(q[0]) && bit(q[1])) phase += g.angle;
                break;
            case GateKind::ControlledNot:
                if (bit(q[0])) index ^= qubit_mask(n, q[1]);
                break;
            case GateKind::Swap:
                if (bit(q[0]) != bit(q[1])) index ^= qubit_mask(n, q[0]) | qubit_mask(n, q[1]);
                break;
            case GateKind::ControlledSwap:
                if (bit(q[0]) && bit(q[1]) != bit(q[2])) index ^= qubit_mask(n, q[1]) | qubit_mask(n, q[2]);
                break;
            case GateKind::RotationZ:
                phase += bit(q[0]) ? 0.5 * g.angle : -0.5 * g.angle;
                break;
            case GateKind::Hadamard:
                break;
        }
    }
    return {index, phase};
}

}  // namespace

std::vector<Amplitude> extract_diagonal(const Circuit& circuit) {
    require_valid(circuit);
    const int n = circuit.n_qubits();
    if (n > 30) {
        throw Error(ErrorCode::WidthTooLarge, "diagonal extraction limited to 30 qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Amplitude> diag(dim);

    const bool monomial = std::all_of(circuit.gates().begin(), circuit.gates().end(),
                                      [](const Gate& g) { return is_monomial_kind(g.kind); });
    if (monomial) {
        for (std::size_t j = 0; j < dim; ++j) {
            const auto [row, phase] = trace_basis_state(circuit, j);
            if (row != j) {
                throw Error(ErrorCode::NotDiagonal, "basis state " + std::to_string(j) + " is mapped to " +
                                                        std::to_string(row));
            }
            diag[j] = std::polar(1.0, phase);
        }
        return diag;
    }

    for (std::size_t j = 0; j < dim; ++j) {
        const StateVector col = run(circuit, StateVector::basis(n, j));
        for (std::size_t i = 0; i < dim; ++i) {
            if (i != j && std::abs(col[i]) >= kDiagonalTolerance) {
                throw Error(ErrorCode::NotDiagonal, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                        ") has magnitude " + std::to_string(std::abs(col[i])));
            }
        }
        diag[j] = col[j];
    }
    return diag;
}

Histogram sample(const StateVector& state, std::uint64_t shots, RandomSource& rng) {
    if (shots == 0) {
        throw Error(ErrorCode::InvalidArgument, "shots must be positive");
    }
    std::vector<double> cdf = state.probabilities();
    std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
    const double total = cdf.back();

    Histogram h;
    h.n_qubits = state.n_qubits();
    h.shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        // upper_bound never lands on a zero-probability entry.
        ++h.counts[static_cast<std::uint64_t>(it - cdf.begin())];
    }
    return h;
}

double fidelity_exact(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::WidthMismatch, "fidelity of states with " + std::to_string(a.n_qubits()) + " and " +
                                                  std::to_string(b.n_qubits()) + " qubits");
    }
    // Dividing by both norms makes F(a, a) exactly 1: the overlap and norm sums round identically.
    Amplitude inner = 0.0;
    double norm_a = 0.0;
    double norm_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        inner += std::conj(a[i]) * b[i];
        norm_a += std::norm(a[i]);
        norm_b += std::norm(b[i]);
    }
    return std::clamp(std::norm(inner) / (norm_a * norm_b), 0.0, 1.0);
}

double phase_aligned_max_error(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::SizeMismatch, "vectors differ in length");
    }
    Amplitude overlap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(b[i]) * a[i];
    }
    const Amplitude c = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amplitude(1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - c * b[i]));
    }
    return worst;
}

}  // namespace qpa
