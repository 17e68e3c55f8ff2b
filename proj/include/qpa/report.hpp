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
 * @file report.hpp
 * @brief Tables for every emitted artifact and a writer that commits a whole
 * output set at once.
 *
 * Floats are written with 17 significant digits through std::to_chars, so
 * output is byte-identical across locales and runs. CSV rows end in '\n'.
 * JSON tables are arrays of objects with keys in column order.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpa/error_budget.hpp"
#include "qpa/evolution.hpp"
#include "qpa/metrics.hpp"

namespace qpa {

struct Cell {
    std::string text;  // empty text in a non-numeric cell is written as null in JSON
    bool numeric = false;

    static Cell number(double value);
    static Cell integer(std::int64_t value);
    static Cell string(std::string value) { return Cell{std::move(value), false}; }
    static Cell missing() { return Cell{}; }
};

class Table {
   public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    /// Throws SizeMismatch when the row width differs from the header.
    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

   private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

enum class ReportFormat { Csv, Json };

/// Throws InvalidArgument for anything but "csv" or "json".
ReportFormat parse_format(std::string_view name);
std::string_view format_extension(ReportFormat format);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, ReportFormat format);

/// n-bit big-endian label of a basis index.
std::string bitstring(std::uint64_t index, int n_qubits);

/// index, bitstring, real, imag, probability
Table statevector_table(const StateVector& state);
/// bitstring, count, frequency; only observed outcomes, in index order.
Table histogram_table(const Histogram& histogram);
/// index, bitstring, real, imag, phase
Table diagonal_table(std::span<const Amplitude> diagonal, int n_qubits);
/// index, bitstring, theta, real, imag, phase for the target diag(e^{-i theta}).
Table target_diagonal_table(const PhaseProfile& full_profile, int n_qubits);

/// Published circuit depths for the QATE encoder and for the existing encoder.
std::optional<int> reference_depth(int n);
std::optional<int> reference_depth_baseline(int n);

struct MetricsRow {
    int n = 0;
    GateCounts qate;
    std::int64_t baseline_total = 0;
    int depth = 0;
};

/// Builds the QATE circuit of the n-qubit kinetic profile and measures it.
MetricsRow metrics_row(int n, double half_range, double dt);

/// n, qate_1q, qate_2q, qate_total, baseline_total, depth_ours, depth_paper_ref,
/// depth_paper_ref_baseline. Reference columns are blank outside the published range.
Table metrics_table(std::span<const MetricsRow> rows);

struct FidelityRow {
    int n = 0;
    EvolutionMode mode = EvolutionMode::Centered;
    int trotter_steps = 0;
    FidelityReport report;
};

/// n, mode, Nt, exact, swap_estimate, std_error
Table fidelity_table(std::span<const FidelityRow> rows);

/// step, exact_fidelity, swap_fidelity, norm
Table evolution_summary_table(const EvolutionResult& result);

/// term, value with one row per term and a closing total.
Table error_budget_table(const ErrorBudget& budget);

/// Files collected in memory and written only by commit(), so a failed
/// command leaves no partial output behind.
class OutputSet {
   public:
    /// Throws InvalidArgument if the relative path was already added.
    void add(std::filesystem::path relative, std::string contents);

    const std::vector<std::pair<std::filesystem::path, std::string>>& files() const noexcept { return files_; }

    /// Creates `directory` and writes every file through a temporary name
    /// followed by a rename. Throws Io naming the failing path.
    void commit(const std::filesystem::path& directory) const;

   private:
    std::vector<std::pair<std::filesystem::path, std::string>> files_;
};

}  // namespace qpa
