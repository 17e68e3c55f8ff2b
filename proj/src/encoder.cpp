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

#include "qpa/encoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include "qpa/metrics.hpp"

namespace qpa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRankTolerance = 1e-9;

int width_from_half_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length)) {
        throw Error(ErrorCode::SizeMismatch,
                    "half profile length " + std::to_string(length) + " is not 2^(n-1) for some n >= 2");
    }
    return std::countr_zero(length) + 1;
}

void require_half(const PhaseProfile& profile, int n) {
    if (profile.extent != ProfileExtent::Half) {
        throw Error(ErrorCode::SizeMismatch, "expected a half profile");
    }
    if (width_from_half_length(profile.theta.size()) != n) {
        throw Error(ErrorCode::SizeMismatch, "half profile of length " + std::to_string(profile.theta.size()) +
                                                 " does not fit " + std::to_string(n) + " qubits");
    }
}

/// Weight of qubit k within an index whose most significant qubit is `first`.
std::uint64_t weight(int n, int k) { return std::uint64_t{1} << (n - 1 - k); }

}  // namespace

double wrap_angle(double angle) {
    double r = std::remainder(angle, kTwoPi);
    if (r <= -std::numbers::pi) {
        r += kTwoPi;
    }
    return r;
}

std::size_t QateCoefficients::pair_index(int n_qubits, int k, int l) {
    const int m = n_qubits - 1;
    if (k < 1 || l <= k || l > m) {
        throw Error(ErrorCode::IndexOutOfRange, "invalid qubit pair (" + std::to_string(k) + ", " +
                                                    std::to_string(l) + ")");
    }
    std::size_t idx = 0;
    for (int a = 1; a < k; ++a) {
        idx += static_cast<std::size_t>(m - a);
    }
    return idx + static_cast<std::size_t>(l - k - 1);
}

PyramidShell build_qpa_shell(int n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidWidth, "the pyramid shell needs at least 2 qubits, got " + std::to_string(n));
    }
    Circuit ladder(n);
    for (int k = 1; k < n; ++k) {
        ladder.add(Gate::cnot(0, k));
    }
    return PyramidShell{ladder, ladder};
}

Circuit wrap_in_shell(const Circuit& payload) {
    const auto shell = build_qpa_shell(payload.n_qubits());
    for (const Gate& g : payload.gates()) {
        if (std::find(g.qubits.begin(), g.qubits.end(), 0) != g.qubits.end()) {
            throw Error(ErrorCode::InvalidArgument, "shell payload must not act on qubit 0");
        }
    }
    Circuit out = shell.left;
    out.append(payload);
    out.append(shell.right);
    return out;
}

QateCoefficients solve_qate(const PhaseProfile& half_profile) {
    if (half_profile.extent != ProfileExtent::Half) {
        throw Error(ErrorCode::SizeMismatch, "expected a half profile");
    }
    const int n = width_from_half_length(half_profile.theta.size());
    const auto& theta = half_profile.theta;

    QateCoefficients c;
    c.n_qubits = n;
    c.global_phase = theta[0];
    c.alpha.resize(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) {
        c.alpha[static_cast<std::size_t>(k - 1)] = theta[weight(n, k)] - c.global_phase;
    }
    c.beta.reserve(static_cast<std::size_t>(binomial(n - 1, 2)));
    for (int k = 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const double composite = theta[weight(n, k) + weight(n, l)];
            c.beta.push_back(composite - c.alpha[static_cast<std::size_t>(k - 1)] -
                             c.alpha[static_cast<std::size_t>(l - 1)] - c.global_phase);
        }
    }
    return c;
}

Circuit build_qate_circuit(int n, const QateCoefficients& coeffs) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidWidth, "QATE needs at least 2 qubits, got " + std::to_string(n));
    }
    if (coeffs.n_qubits != n || coeffs.alpha.size() != static_cast<std::size_t>(n - 1) ||
        coeffs.beta.size() != static_cast<std::size_t>(binomial(n - 1, 2))) {
        throw Error(ErrorCode::SizeMismatch, "coefficients were not solved for " + std::to_string(n) + " qubits");
    }
    Circuit payload(n, wrap_angle(-coeffs.global_phase));
    for (int k = 1; k < n; ++k) {
        payload.add(Gate::phase(k, wrap_angle(-coeffs.alpha[static_cast<std::size_t>(k - 1)])));
    }
    std::size_t p = 0;
    for (int k = 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            payload.add(Gate::cphase(k, l, wrap_angle(-coeffs.beta[p++])));
        }
    }
    return wrap_in_shell(payload);
}

namespace {

/// Monomial over half-index bits: empty mask is the constant term.
struct Monomial {
    std::uint64_t mask;
    int first;   // qubit of a singleton or the lower qubit of a pair, -1 for the constant
    int second;  // upper qubit of a pair, -1 otherwise
};

/// Solves the square system a x = b by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

}  // namespace

Circuit build_qwe_circuit(int n, const PhaseProfile& half_profile, const WindowSpec& window) {
    require_half(half_profile, n);
    if (window.indices.empty()) {
        throw Error(ErrorCode::InvalidArgument, "window must contain at least one index");
    }
    if (window.cp_budget < 0) {
        throw Error(ErrorCode::InvalidArgument, "controlled-phase budget must be non-negative");
    }
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    std::set<std::uint64_t> points{0};
    for (auto idx : window.indices) {
        if (idx >= half) {
            throw Error(ErrorCode::IndexOutOfRange, "window index " + std::to_string(idx) + " outside [0, " +
                                                        std::to_string(half) + ")");
        }
        points.insert(idx);
    }
    const std::vector<std::uint64_t> rows(points.begin(), points.end());
    const std::size_t m = rows.size();

    std::vector<Monomial> candidates{{0, -1, -1}};
    for (int k = 1; k < n; ++k) {
        candidates.push_back({weight(n, k), k, -1});
    }
    for (int k = 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            candidates.push_back({weight(n, k) | weight(n, l), k, l});
        }
    }

    // Greedy column selection in the order constant, singletons, pairs: a
    // column is kept when it enlarges the span over the window rows. This
    // uses the fewest pair terms any exact interpolant can have.
    std::vector<Monomial> chosen;
    std::vector<std::vector<double>> orthonormal;
    int pairs_used = 0;
    for (const Monomial& mono : candidates) {
        if (orthonormal.size() == m) {
            break;
        }
        const bool is_pair = mono.second >= 0;
        if (is_pair && pairs_used >= window.cp_budget) {
            break;
        }
        std::vector<double> v(m);
        for (std::size_t r = 0; r < m; ++r) {
            v[r] = (rows[r] & mono.mask) == mono.mask ? 1.0 : 0.0;
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : orthonormal) {
                double dot = 0.0;
                for (std::size_t r = 0; r < m; ++r) dot += q[r] * v[r];
                for (std::size_t r = 0; r < m; ++r) v[r] -= dot * q[r];
            }
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm <= kRankTolerance) {
            continue;
        }
        for (double& x : v) x /= norm;
        orthonormal.push_back(std::move(v));
        chosen.push_back(mono);
        pairs_used += is_pair ? 1 : 0;
    }
    if (orthonormal.size() != m) {
        throw Error(ErrorCode::InfeasibleWindow,
                    "window of " + std::to_string(m) + " points (anchor included) needs more than " +
                        std::to_string(window.cp_budget) + " controlled-phase gates");
    }

    std::vector<std::vector<double>> system(m, std::vector<double>(m));
    std::vector<double> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
        rhs[r] = half_profile.theta[rows[r]];
        for (std::size_t c = 0; c < m; ++c) {
            system[r][c] = (rows[r] & chosen[c].mask) == chosen[c].mask ? 1.0 : 0.0;
        }
    }
    const auto coeff = solve_dense(std::move(system), std::move(rhs));

    Circuit payload(n, wrap_angle(-coeff[0]));
    for (std::size_t c = 1; c < m; ++c) {
        if (chosen[c].second < 0) {
            payload.add(Gate::phase(chosen[c].first, wrap_angle(-coeff[c])));
        }
    }
    for (std::size_t c = 1; c < m; ++c) {
        if (chosen[c].second >= 0) {
            payload.add(Gate::cphase(chosen[c].first, chosen[c].second, wrap_angle(-coeff[c])));
        }
    }
    if (payload.empty()) {
        return payload;
    }
    return wrap_in_shell(payload);
}

Circuit build_direct_diagonal(int n, const PhaseProfile& full_profile) {
    if (n < 1 || full_profile.theta.size() != (std::size_t{1} << n)) {
        throw Error(ErrorCode::SizeMismatch, "full profile of length " + std::to_string(full_profile.theta.size()) +
                                                 " does not fit " + std::to_string(n) + " qubits");
    }
    const auto& theta = full_profile.theta;
    const double g = theta[0];
    std::vector<double> alpha(static_cast<std::size_t>(n));
    Circuit out(n, wrap_angle(-g));
    for (int k = 0; k < n; ++k) {
        alpha[static_cast<std::size_t>(k)] = theta[weight(n, k)] - g;
        out.add(Gate::phase(k, wrap_angle(-alpha[static_cast<std::size_t>(k)])));
    }
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const double beta = theta[weight(n, k) + weight(n, l)] - alpha[static_cast<std::size_t>(k)] -
                                alpha[static_cast<std::size_t>(l)] - g;
            out.add(Gate::cphase(k, l, wrap_angle(-beta)));
        }
    }
    return out;
}

Circuit build_potential_circuit(int n, const PotentialSpec& spec, double dt, int r) {
    if (r != 1 && r != 2) {
        throw Error(ErrorCode::InvalidArgument, "split factor must be 1 or 2, got " + std::to_string(r));
    }
    Circuit out(n);
    if (spec.kind == PotentialKind::None) {
        return out;
    }
    if (spec.qubits.empty()) {
        throw Error(ErrorCode::InvalidArgument, "potential has no qubit positions to realize it on");
    }
    for (int q : spec.qubits) {
        if (q < 0 || q >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "potential qubit " + std::to_string(q) + " outside width " +
                                                        std::to_string(n));
        }
        out.add(Gate::rz(q, 2.0 * spec.eta * dt / r));
    }
    return out;
}

Circuit build_qft(int n, bool inverse) {
    Circuit forward(n);
    for (int q = 0; q < n; ++q) {
        forward.add(Gate::h(q));
        for (int r = q + 1; r < n; ++r) {
            forward.add(Gate::cphase(r, q, std::numbers::pi / static_cast<double>(std::uint64_t{1} << (r - q))));
        }
    }
    for (int q = 0; q < n / 2; ++q) {
        forward.add(Gate::swap(q, n - 1 - q));
    }
    if (!inverse) {
        return forward;
    }
    Circuit adjoint(n);
    for (auto it = forward.gates().rbegin(); it != forward.gates().rend(); ++it) {
        Gate g = *it;
        g.angle = -g.angle;
        adjoint.add(std::move(g));
    }
    return adjoint;
}

Circuit build_phase_ramp(int n, double slope) {
    Circuit out(n);
    for (int q = 0; q < n; ++q) {
        out.add(Gate::phase(q, wrap_angle(slope * static_cast<double>(weight(n, q)))));
    }
    return out;
}

}  // namespace qpa
