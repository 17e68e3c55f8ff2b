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

#include "qpa/grids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qpa {

Grid Grid::make(double half_range, int n_qubits) {
    if (!(half_range > 0.0) || !std::isfinite(half_range)) {
        throw Error(ErrorCode::InvalidArgument, "grid half-range must be positive and finite");
    }
    if (n_qubits < 1 || n_qubits > 30) {
        throw Error(ErrorCode::InvalidWidth, "grid needs 1..30 qubits, got " + std::to_string(n_qubits));
    }
    return Grid{half_range, n_qubits};
}

double Grid::momentum_spacing() const { return std::numbers::pi / half_range; }

PhaseProfile PhaseProfile::full(std::vector<double> theta, ProfileSource source) {
    return PhaseProfile{std::move(theta), ProfileExtent::Full, source};
}

PhaseProfile PhaseProfile::half(std::vector<double> theta, ProfileSource source) {
    return PhaseProfile{std::move(theta), ProfileExtent::Half, source};
}

PhaseProfile PhaseProfile::first_half() const {
    if (extent == ProfileExtent::Half) {
        return *this;
    }
    return half(std::vector<double>(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(theta.size() / 2)),
                source);
}

PhaseProfile PhaseProfile::mirrored() const {
    if (extent == ProfileExtent::Full) {
        return *this;
    }
    std::vector<double> out(theta);
    out.insert(out.end(), theta.rbegin(), theta.rend());
    return full(std::move(out), source);
}

bool PhaseProfile::is_palindromic(double tolerance) const {
    const std::size_t n = theta.size();
    for (std::size_t j = 0; j < n / 2; ++j) {
        if (std::abs(theta[j] - theta[n - 1 - j]) > tolerance) {
            return false;
        }
    }
    return true;
}

PotentialSpec PotentialSpec::steps(PotentialKind kind, std::vector<double> boundaries, std::vector<double> values) {
    PotentialSpec spec;
    spec.kind = kind;
    spec.boundaries = std::move(boundaries);
    spec.values = std::move(values);
    return spec;
}

PotentialSpec PotentialSpec::from_qubits(const Grid& grid, PotentialKind kind, double eta, std::vector<int> qubits) {
    PotentialSpec spec;
    spec.kind = kind;
    if (kind == PotentialKind::None) {
        return spec;
    }
    if (qubits.empty()) {
        if (kind == PotentialKind::SingleStep) {
            qubits = {0};
        } else if (kind == PotentialKind::DoubleStep) {
            qubits = {1};
        } else {
            throw Error(ErrorCode::InvalidArgument, "a multi-step potential needs explicit qubit positions");
        }
    }
    for (int q : qubits) {
        if (q < 0 || q >= grid.n_qubits) {
            throw Error(ErrorCode::IndexOutOfRange, "potential qubit " + std::to_string(q) + " outside a " +
                                                        std::to_string(grid.n_qubits) + "-qubit grid");
        }
    }
    spec.eta = eta;
    spec.qubits = std::move(qubits);

    const std::size_t n_samples = grid.size();
    std::vector<double> per_sample(n_samples, 0.0);
    for (std::size_t k = 0; k < n_samples; ++k) {
        for (int q : spec.qubits) {
            per_sample[k] += (k & qubit_mask(grid.n_qubits, q)) ? -eta : eta;
        }
    }
    const double half_count = static_cast<double>(n_samples) / 2.0;
    spec.values.push_back(per_sample[0]);
    for (std::size_t k = 1; k < n_samples; ++k) {
        if (per_sample[k] != per_sample[k - 1]) {
            spec.boundaries.push_back(grid.spacing() * (static_cast<double>(k) - half_count));
            spec.values.push_back(per_sample[k]);
        }
    }
    return spec;
}

std::vector<double> position_samples(const Grid& grid) {
    const std::size_t n = grid.size();
    const double dx = grid.spacing();
    const double centre = static_cast<double>(n) / 2.0;
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = dx * (static_cast<double>(k) + 0.5 - centre);
    }
    return x;
}

std::vector<double> momentum_samples(const Grid& grid) {
    const std::size_t n = grid.size();
    const double dp = grid.momentum_spacing();
    const double centre = static_cast<double>(n) / 2.0;
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j) {
        p[j] = dp * (static_cast<double>(j) + 0.5 - centre);
    }
    return p;
}

PhaseProfile kinetic_phase_profile(const Grid& grid, double dt, double mass) {
    if (!(mass > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "mass must be positive");
    }
    if (!(dt >= 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::InvalidArgument, "time step must be non-negative and finite");
    }
    std::vector<double> theta = momentum_samples(grid);
    const double scale = dt / (2.0 * mass);
    for (double& t : theta) {
        t = t * t * scale;
    }
    return PhaseProfile::full(std::move(theta), ProfileSource::Kinetic);
}

StateVector gaussian_packet(const Grid& grid, const PacketSpec& spec) {
    if (!std::isfinite(spec.k0)) {
        throw Error(ErrorCode::InvalidArgument, "wave number must be finite");
    }
    const auto x = position_samples(grid);
    std::vector<Amplitude> amps(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        amps[k] = std::polar(std::exp(-0.5 * x[k] * x[k]), spec.k0 * x[k]);
    }
    return StateVector::normalized(std::move(amps));
}

std::vector<double> potential_profile(const Grid& grid, const PotentialSpec& spec) {
    std::vector<double> v(grid.size(), 0.0);
    if (spec.kind == PotentialKind::None) {
        return v;
    }
    if (spec.values.size() != spec.boundaries.size() + 1) {
        throw Error(ErrorCode::InvalidArgument, "a potential with " + std::to_string(spec.boundaries.size()) +
                                                    " boundaries needs " +
                                                    std::to_string(spec.boundaries.size() + 1) + " values");
    }
    for (std::size_t i = 0; i < spec.boundaries.size(); ++i) {
        const double b = spec.boundaries[i];
        if (!(b > -grid.half_range && b < grid.half_range)) {
            throw Error(ErrorCode::InvalidArgument, "potential boundary " + std::to_string(b) + " outside (-d, d)");
        }
        if (i > 0 && !(b > spec.boundaries[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "potential boundaries must be strictly increasing");
        }
    }
    const auto x = position_samples(grid);
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto region = std::upper_bound(spec.boundaries.begin(), spec.boundaries.end(), x[k]) -
                            spec.boundaries.begin();
        v[k] = spec.values[static_cast<std::size_t>(region)];
    }
    return v;
}

}  // namespace qpa
