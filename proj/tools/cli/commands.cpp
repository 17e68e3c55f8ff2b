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

#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "qpa/format.hpp"

namespace qpa::cli {

namespace {

std::string table_name(const std::string& stem, const RunConfig& c) {
    return stem + std::string(format_extension(parse_format(c.format)));
}

std::string render_as(const Table& t, const RunConfig& c) { return render(t, parse_format(c.format)); }

double max_error(std::span<const Amplitude> got, const std::vector<double>& theta, std::size_t limit) {
    double worst = 0.0;
    for (std::size_t i = 0; i < limit; ++i) {
        worst = std::max(worst, std::abs(got[i] - std::polar(1.0, -theta[i])));
    }
    return worst;
}

void log_counts(std::ostream& log, const Circuit& c) {
    const GateMetrics m = count_gates(c);
    log << "gates: 1q=" << m.counts.one_qubit << " 2q=" << m.counts.two_qubit << " 3q=" << m.counts.three_qubit
        << " total=" << m.counts.total << " depth=" << m.depth << "\n";
}

void encode_ke(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const int n = c.qubits;
    if (n < 2) {
        throw Error(ErrorCode::InvalidWidth, "the pyramid encoders need at least 2 qubits, got " + std::to_string(n));
    }
    const Grid grid = Grid::make(c.half_range, n);
    const PhaseProfile target = kinetic_phase_profile(grid, c.dt, c.mass);

    Circuit circuit(n);
    if (c.method == "qate") {
        circuit = build_qate_circuit(n, solve_qate(target.first_half()));
    } else if (c.method == "direct") {
        circuit = build_direct_diagonal(n, target);
    } else {
        if (c.window.empty()) {
            throw UsageError("--method qwe needs --window");
        }
        const int budget = c.cp_budget < 0 ? n - 1 : c.cp_budget;
        circuit = build_qwe_circuit(n, target.first_half(), WindowSpec{parse_window(c.window), budget});
    }
    const auto diagonal = extract_diagonal(circuit);

    log << "encode-ke: method=" << c.method << " n=" << n << "\n";
    log_counts(log, circuit);
    if (c.method == "qwe") {
        double worst = 0.0;
        for (auto j : parse_window(c.window)) {
            worst = std::max(worst, std::abs(diagonal[j] - std::polar(1.0, -target.theta[j])));
        }
        log << "max window error: " << format_double(worst) << "\n";
    } else {
        log << "max diagonal error: " << format_double(max_error(diagonal, target.theta, diagonal.size())) << "\n";
    }

    files.add("circuit.json", to_json(circuit));
    files.add(table_name("diagonal", c), render_as(diagonal_table(diagonal, n), c));
    files.add(table_name("target_diagonal", c), render_as(target_diagonal_table(target, n), c));
}

void evolve(const RunConfig& c, OutputSet& files, std::ostream& log) {
    const bool sweep = c.trotter_steps.size() > 1;
    for (int nt : c.trotter_steps) {
        const EvolutionConfig config = evolution_config(c, c.qubits, nt);
        const EvolutionResult result = evolve_quantum(config);
        const std::string dir = sweep ? "nt_" + std::to_string(nt) + "/" : "";

        files.add(dir + "step_circuit.json", to_json(trotter_step_circuit(config)));
        files.add(dir + table_name("summary", c), render_as(evolution_summary_table(result), c));
        for (std::size_t s = 0; s < result.quantum_states.size(); ++s) {
            const std::string stem = dir + "step_" + std::to_string(s);
            files.add(table_name(stem + "_statevector", c), render_as(statevector_table(result.quantum_states[s]), c));
            files.add(table_name(stem + "_oracle", c), render_as(statevector_table(result.oracle_states[s]), c));
            files.add(table_name(stem + "_histogram", c), render_as(histogram_table(result.histograms[s]), c));
        }
        log << "evolve: n=" << c.qubits << " Nt=" << nt << " mode=" << c.mode
            << " final exact fidelity=" << format_double(result.exact_fidelity.back())
            << " swap estimate=" << format_double(result.swap_fidelity.back().estimated) << "\n";
    }
}

void fidelity(const RunConfig& c, OutputSet& files, std::ostream& log) {
    std::vector<FidelityRow> rows;
    for (int n = c.n_min; n <= c.n_max; ++n) {
        for (int nt : c.trotter_steps) {
            const EvolutionConfig config = evolution_config(c, n, nt);
            const EvolutionResult result = evolve_quantum(config);
            FidelityRow row{n, config.mode, nt, result.swap_fidelity.back()};
            row.report.exact = result.exact_fidelity.back();
            rows.push_back(row);
            log << "fidelity: n=" << n << " Nt=" << nt << " exact=" << format_double(row.report.exact)
                << " swap=" << format_double(row.report.estimated) << "\n";
        }
    }
    files.add(table_name("fidelity", c), render_as(fidelity_table(rows), c));
}

void metrics(const RunConfig& c, OutputSet& files, std::ostream& log) {
    std::vector<MetricsRow> rows;
    for (int n = c.n_min; n <= c.n_max; ++n) {
        rows.push_back(metrics_row(n, c.half_range, c.dt));
        log << "metrics: n=" << n << " qate_total=" << rows.back().qate.total
            << " baseline_total=" << rows.back().baseline_total << " depth=" << rows.back().depth << "\n";
    }
    files.add(table_name("metrics", c), render_as(metrics_table(rows), c));

    // Per-component counts of one Trotter substep at --qubits.
    const EvolutionConfig config = evolution_config(c, c.qubits, c.trotter_steps.front());
    const int n = c.qubits;
    const double delta = config.dt / config.trotter_steps;
    const Circuit potential = build_potential_circuit(n, config.potential, delta, 2);
    const Circuit kinetic =
        build_qate_circuit(n, solve_qate(kinetic_phase_profile(config.grid, delta, config.mass).first_half()));
    const Circuit ramp = build_phase_ramp(n, 1.0);
    const Circuit qft = build_qft(n, false);
    const Circuit step = trotter_step_circuit(config);

    Table t({"component", "one_qubit", "two_qubit", "three_qubit", "total", "depth"});
    auto add = [&](const std::string& name, const Circuit& circuit) {
        const GateMetrics m = count_gates(circuit);
        t.add_row({Cell::string(name), Cell::integer(m.counts.one_qubit), Cell::integer(m.counts.two_qubit),
                   Cell::integer(m.counts.three_qubit), Cell::integer(m.counts.total), Cell::integer(m.depth)});
    };
    add("potential_half", potential);
    add("qft", qft);
    add("kinetic", kinetic);
    if (config.mode == EvolutionMode::Centered) {
        add("phase_ramp", ramp);
    }
    add("trotter_step", step);
    files.add(table_name("step_metrics", c), render_as(t, c));
}

void error_budget_cmd(const RunConfig& c, OutputSet& files, std::ostream& log) {
    ErrorBudgetParams p;
    p.h = c.h ? *c.h : std::ldexp(1.0, -c.qubits);
    p.two_qubit_gates = c.l2 ? *c.l2 : static_cast<double>(qate_gate_count(c.qubits).two_qubit);
    p.gate_variance = c.gate_variance;
    p.t1 = c.t1;
    p.t2 = c.t2;
    p.dt = c.dt;
    p.readout_variance = c.readout_variance;
    const ErrorBudget b = error_budget(p);
    const Table t = error_budget_table(b);
    for (const auto& row : t.rows()) {
        log << row[0].text << ": " << row[1].text << "\n";
    }
    files.add(table_name("error_budget", c), render_as(t, c));
}

}  // namespace

OutputSet run_command(const RunConfig& config, std::ostream& log) {
    OutputSet files;
    switch (config.command) {
        case Command::EncodeKe:
            encode_ke(config, files, log);
            break;
        case Command::Evolve:
            evolve(config, files, log);
            break;
        case Command::Fidelity:
            fidelity(config, files, log);
            break;
        case Command::Metrics:
            metrics(config, files, log);
            break;
        case Command::ErrorBudget:
            error_budget_cmd(config, files, log);
            break;
    }
    files.add("manifest.json", manifest_json(config));
    return files;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig config = parse_args(args);
        const OutputSet files = run_command(config, out);
        files.commit(config.out);
        out << "wrote " << files.files().size() << " files to " << config.out << "\n";
        return kSuccess;
    } catch (const UsageError& e) {
        if (e.help()) {
            out << e.what();
            return kSuccess;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Io ? kIo : kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
}

}  // namespace qpa::cli
