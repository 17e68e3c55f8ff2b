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
 * @file error_budget.hpp
 * @brief Closed-form accumulated-error estimate for a simulated evolution.
 *
 * bound = h^3 + L2 sigma_g^2 + dt (T1 + T2) / (T1 T2) + sigma_cr^2
 *
 * Asymptotic constants are taken as 1. The result is a diagnostic, not a
 * certified error.
 */
#pragma once

namespace qpa {

struct ErrorBudgetParams {
    double h = 0.0;                  // grid step size
    double two_qubit_gates = 0.0;    // L2; every two-qubit gate counts
    double gate_variance = 0.0;      // per-gate error variance
    double t1 = 100.0;
    double t2 = 100.0;
    double dt = 0.0;                 // evolution time
    double readout_variance = 0.0;
};

struct ErrorBudget {
    double discretization = 0.0;
    double gate = 0.0;
    double decoherence = 0.0;
    double readout = 0.0;
    double total = 0.0;
};

/// Throws InvalidArgument for h, T1 or T2 <= 0, or a negative count, variance or time.
ErrorBudget error_budget(const ErrorBudgetParams& params);

}  // namespace qpa
