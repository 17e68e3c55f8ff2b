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

#include "qpa/error_budget.hpp"

#include <cmath>
#include <string>

#include "qpa/error.hpp"

namespace qpa {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw Error(ErrorCode::InvalidArgument, what);
    }
}

}  // namespace

ErrorBudget error_budget(const ErrorBudgetParams& p) {
    require(std::isfinite(p.h) && p.h > 0.0, "h must be positive");
    require(std::isfinite(p.t1) && p.t1 > 0.0, "T1 must be positive");
    require(std::isfinite(p.t2) && p.t2 > 0.0, "T2 must be positive");
    require(std::isfinite(p.two_qubit_gates) && p.two_qubit_gates >= 0.0, "L2 must be non-negative");
    require(std::isfinite(p.gate_variance) && p.gate_variance >= 0.0, "gate variance must be non-negative");
    require(std::isfinite(p.readout_variance) && p.readout_variance >= 0.0, "readout variance must be non-negative");
    require(std::isfinite(p.dt) && p.dt >= 0.0, "dt must be non-negative");

    ErrorBudget b;
    b.discretization = p.h * p.h * p.h;
    b.gate = p.two_qubit_gates * p.gate_variance;
    b.decoherence = p.dt * (p.t1 + p.t2) / (p.t1 * p.t2);
    b.readout = p.readout_variance;
    b.total = b.discretization + b.gate + b.decoherence + b.readout;
    return b;
}

}  // namespace qpa
