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

#include "qpa/report.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "qpa/encoder.hpp"
#include "qpa/format.hpp"

namespace qpa {

namespace {

bool needs_quotes(const std::string& s) { return s.find_first_of(",\"\n\r") != std::string::npos; }

std::string csv_field(const Cell& cell) {
    if (cell.numeric || !needs_quotes(cell.text)) {
        return cell.text;
    }
    std::string out = "\"";
    for (char c : cell.text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_value(const Cell& cell) {
    if (cell.numeric) {
        return cell.text;
    }
    if (cell.text.empty()) {
        return "null";
    }
    return nlohmann::json(cell.text).dump();
}

// Published depths for n = 3..6.
constexpr int kFirstReferenceWidth = 3;
constexpr std::array<int, 4> kReferenceDepth{9, 18, 22, 36};
constexpr std::array<int, 4> kReferenceDepthBaseline{16, 24, 32, 40};

std::optional<int> lookup(const std::array<int, 4>& table, int n) {
    const int i = n - kFirstReferenceWidth;
    if (i < 0 || i >= static_cast<int>(table.size())) {
        return std::nullopt;
    }
    return table[static_cast<std::size_t>(i)];
}

Cell optional_cell(std::optional<int> v) { return v ? Cell::integer(*v) : Cell::missing(); }

std::vector<Cell> amplitude_cells(Amplitude a) {
    return {Cell::number(a.real()), Cell::number(a.imag()), Cell::number(std::arg(a))};
}

}  // namespace

Cell Cell::number(double value) { return Cell{format_double(value), true}; }

Cell Cell::integer(std::int64_t value) { return Cell{std::to_string(value), true}; }

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw Error(ErrorCode::SizeMismatch, "row has " + std::to_string(row.size()) + " cells for " +
                                                 std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(row));
}

ReportFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::string_view format_extension(ReportFormat format) { return format == ReportFormat::Csv ? ".csv" : ".json"; }

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns().size(); ++c) {
        out += (c ? "," : "") + csv_field(Cell::string(table.columns()[c]));
    }
    out += '\n';
    for (const auto& row : table.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? "," : "") + csv_field(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    std::string out = "[";
    for (std::size_t r = 0; r < table.rows().size(); ++r) {
        out += r ? ",\n  {" : "\n  {";
        const auto& row = table.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? ", " : "") + nlohmann::json(table.columns()[c]).dump() + ": " + json_value(row[c]);
        }
        out += "}";
    }
    out += table.rows().empty() ? "]\n" : "\n]\n";
    return out;
}

std::string render(const Table& table, ReportFormat format) {
    return format == ReportFormat::Csv ? to_csv(table) : to_json(table);
}

std::string bitstring(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index & qubit_mask(n_qubits, q)) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

Table statevector_table(const StateVector& state) {
    Table t({"index", "bitstring", "real", "imag", "probability"});
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Amplitude a = state[i];
        t.add_row({Cell::integer(static_cast<std::int64_t>(i)), Cell::string(bitstring(i, state.n_qubits())),
                   Cell::number(a.real()), Cell::number(a.imag()), Cell::number(std::norm(a))});
    }
    return t;
}

Table histogram_table(const Histogram& histogram) {
    Table t({"bitstring", "count", "frequency"});
    for (const auto& [index, count] : histogram.counts) {
        t.add_row({Cell::string(bitstring(index, histogram.n_qubits)), Cell::integer(static_cast<std::int64_t>(count)),
                   Cell::number(static_cast<double>(count) / static_cast<double>(histogram.shots))});
    }
    return t;
}

Table diagonal_table(std::span<const Amplitude> diagonal, int n_qubits) {
    Table t({"index", "bitstring", "real", "imag", "phase"});
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        std::vector<Cell> row{Cell::integer(static_cast<std::int64_t>(i)), Cell::string(bitstring(i, n_qubits))};
        for (auto& c : amplitude_cells(diagonal[i])) row.push_back(std::move(c));
        t.add_row(std::move(row));
    }
    return t;
}

Table target_diagonal_table(const PhaseProfile& full_profile, int n_qubits) {
    Table t({"index", "bitstring", "theta", "real", "imag", "phase"});
    for (std::size_t i = 0; i < full_profile.theta.size(); ++i) {
        const double theta = full_profile.theta[i];
        std::vector<Cell> row{Cell::integer(static_cast<std::int64_t>(i)), Cell::string(bitstring(i, n_qubits)),
                              Cell::number(theta)};
        for (auto& c : amplitude_cells(std::polar(1.0, -theta))) row.push_back(std::move(c));
        t.add_row(std::move(row));
    }
    return t;
}

std::optional<int> reference_depth(int n) { return lookup(kReferenceDepth, n); }

std::optional<int> reference_depth_baseline(int n) { return lookup(kReferenceDepthBaseline, n); }

MetricsRow metrics_row(int n, double half_range, double dt) {
    const Grid grid = Grid::make(half_range, n);
    const Circuit c = build_qate_circuit(n, solve_qate(kinetic_phase_profile(grid, dt).first_half()));
    const GateMetrics m = count_gates(c);
    return MetricsRow{n, m.counts, baseline_gate_count(n), m.depth};
}

Table metrics_table(std::span<const MetricsRow> rows) {
    Table t({"n", "qate_1q", "qate_2q", "qate_total", "baseline_total", "depth_ours", "depth_paper_ref",
             "depth_paper_ref_baseline"});
    for (const auto& r : rows) {
        t.add_row({Cell::integer(r.n), Cell::integer(r.qate.one_qubit), Cell::integer(r.qate.two_qubit),
                   Cell::integer(r.qate.total), Cell::integer(r.baseline_total), Cell::integer(r.depth),
                   optional_cell(reference_depth(r.n)), optional_cell(reference_depth_baseline(r.n))});
    }
    return t;
}

Table fidelity_table(std::span<const FidelityRow> rows) {
    Table t({"n", "mode", "Nt", "exact", "swap_estimate", "std_error"});
    for (const auto& r : rows) {
        t.add_row({Cell::integer(r.n), Cell::string(std::string(mode_name(r.mode))), Cell::integer(r.trotter_steps),
                   Cell::number(r.report.exact), Cell::number(r.report.estimated), Cell::number(r.report.std_error)});
    }
    return t;
}

Table evolution_summary_table(const EvolutionResult& result) {
    Table t({"step", "exact_fidelity", "swap_fidelity", "norm"});
    for (std::size_t s = 0; s < result.exact_fidelity.size(); ++s) {
        t.add_row({Cell::integer(static_cast<std::int64_t>(s)), Cell::number(result.exact_fidelity[s]),
                   Cell::number(result.swap_fidelity[s].estimated), Cell::number(result.norms[s])});
    }
    return t;
}

Table error_budget_table(const ErrorBudget& budget) {
    Table t({"term", "value"});
    t.add_row({Cell::string("discretization"), Cell::number(budget.discretization)});
    t.add_row({Cell::string("gate"), Cell::number(budget.gate)});
    t.add_row({Cell::string("decoherence"), Cell::number(budget.decoherence)});
    t.add_row({Cell::string("readout"), Cell::number(budget.readout)});
    t.add_row({Cell::string("total"), Cell::number(budget.total)});
    return t;
}

void OutputSet::add(std::filesystem::path relative, std::string contents) {
    for (const auto& [path, _] : files_) {
        if (path == relative) {
            throw Error(ErrorCode::InvalidArgument, "output file '" + relative.string() + "' added twice");
        }
    }
    files_.emplace_back(std::move(relative), std::move(contents));
}

void OutputSet::commit(const std::filesystem::path& directory) const {
    for (const auto& [relative, contents] : files_) {
        const auto target = directory / relative;
        std::error_code ec;
        std::filesystem::create_directories(target.parent_path(), ec);
        if (ec) {
            throw Error(ErrorCode::Io, "cannot create directory '" + target.parent_path().string() + "': " +
                                           ec.message());
        }
        auto temp = target;
        temp += ".partial";
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            if (!out) {
                std::filesystem::remove(temp, ec);
                throw Error(ErrorCode::Io, "cannot write '" + target.string() + "'");
            }
        }
        std::filesystem::rename(temp, target, ec);
        if (ec) {
            std::filesystem::remove(temp, ec);
            throw Error(ErrorCode::Io, "cannot write '" + target.string() + "': " + ec.message());
        }
    }
}

}  // namespace qpa
