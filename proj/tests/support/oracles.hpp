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

// Independent reference constructions for tests: dense gate matrices from
// Kronecker products and projectors, a direct DFT, and random inputs.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qpa/circuit.hpp"
#include "qpa/statevector.hpp"

namespace qpa::testing {

using Matrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;

inline const std::complex<double> kI{0.0, 1.0};

inline Mat2 identity2() { return Mat2::Identity(); }
inline Mat2 pauli_x() { Mat2 m; m << 0, 1, 1, 0; return m; }
inline Mat2 hadamard() { Mat2 m; m << 1, 1, 1, -1; return m / std::sqrt(2.0); }
inline Mat2 proj0() { Mat2 m; m << 1, 0, 0, 0; return m; }
inline Mat2 proj1() { Mat2 m; m << 0, 0, 0, 1; return m; }
inline Mat2 phase_matrix(double a) { Mat2 m; m << 1, 0, 0, std::exp(kI * a); return m; }
inline Mat2 rz_matrix(double a) { Mat2 m; m << std::exp(-kI * a / 2.0), 0, 0, std::exp(kI * a / 2.0); return m; }

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Tensor product with `ops[q]` on qubit q and identity elsewhere; qubit 0 is leftmost.
inline Matrix embed(int n, const std::map<int, Mat2>& ops) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        auto it = ops.find(q);
        out = kron(out, it == ops.end() ? Matrix(identity2()) : Matrix(it->second));
    }
    return out;
}

inline Matrix gate_matrix(int n, const Gate& g) {
    const auto& q = g.qubits;
    switch (g.kind) {
        case GateKind::PauliX: return embed(n, {{q[0], pauli_x()}});
        case GateKind::Hadamard: return embed(n, {{q[0], hadamard()}});
        case GateKind::Phase: return embed(n, {{q[0], phase_matrix(g.angle)}});
        case GateKind::RotationZ: return embed(n, {{q[0], rz_matrix(g.angle)}});
        case GateKind::ControlledPhase:
            return embed(n, {{q[0], proj0()}}) + embed(n, {{q[0], proj1()}, {q[1], proj0()}}) +
                   std::exp(kI * g.angle) * embed(n, {{q[0], proj1()}, {q[1], proj1()}});
        case GateKind::ControlledNot:
            return embed(n, {{q[0], proj0()}}) + embed(n, {{q[0], proj1()}, {q[1], pauli_x()}});
        case GateKind::Swap: {
            // |ab><ba| summed over bit pairs.
            Matrix out = Matrix::Zero(std::int64_t{1} << n, std::int64_t{1} << n);
            Mat2 e[2][2];
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    e[r][c] = Mat2::Zero();
                    e[r][c](r, c) = 1.0;
                }
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) out += embed(n, {{q[0], e[a][b]}, {q[1], e[b][a]}});
            return out;
        }
        case GateKind::ControlledSwap: {
            const Matrix swap = gate_matrix(n, Gate::swap(q[1], q[2]));
            return embed(n, {{q[0], proj0()}}) + embed(n, {{q[0], proj1()}}) * swap;
        }
    }
    return {};
}

inline Matrix circuit_matrix(const Circuit& c) {
    const auto dim = std::int64_t{1} << c.n_qubits();
    Matrix u = Matrix::Identity(dim, dim);
    for (const Gate& g : c.gates()) {
        u = gate_matrix(c.n_qubits(), g) * u;
    }
    return std::exp(kI * c.global_phase()) * u;
}

/// Entry (j, k) = e^{sign 2 pi i jk / N} / sqrt(N).
inline Matrix dft_matrix(std::int64_t size, int sign) {
    Matrix f(size, size);
    for (std::int64_t j = 0; j < size; ++j) {
        for (std::int64_t k = 0; k < size; ++k) {
            const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % size) /
                                 static_cast<double>(size);
            f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(size)), angle);
        }
    }
    return f;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Max |a_i - c b_i| with c = e^{i arg(a_0 / b_0)}, for unit-modulus diagonals.
inline double diagonal_error_mod_phase(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
    const Amplitude c = std::polar(1.0, std::arg(a[0] / b[0]));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - c * b[i]));
    return worst;
}

inline std::vector<Amplitude> target_diagonal(const std::vector<double>& theta) {
    std::vector<Amplitude> out;
    for (double t : theta) out.push_back(std::polar(1.0, -t));
    return out;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) a = {normal(rng), normal(rng)};
    return StateVector::normalized(std::move(amps));
}

inline Eigen::VectorXcd to_vector(const StateVector& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

}  // namespace qpa::testing
