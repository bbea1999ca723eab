// Copyright 2026 The quditc authors
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

// quditc: transpile OpenQASM 2.0 circuits into trapped-ion qudit circuits,
// verify them against the exact simulator, and map measurement samples back
// to classical bits.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quditc/bench.hpp"
#include "quditc/iqc.hpp"
#include "quditc/pipeline.hpp"
#include "quditc/qasm.hpp"
#include "quditc/sim.hpp"
#include "quditc/unmap.hpp"

namespace {

using namespace quditc;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

struct RegimeFlags {
    std::string regime;
    int levels = 0;
    int qubits_per_qudit = 0;

    qd::QuditParams params() const {
        qd::QuditParams p{2, 1};
        if (regime == "qutrit") {
            p = {3, 1};
        } else if (regime == "ququart") {
            p = {4, 2};
        } else if (regime == "qubit" || regime.empty()) {
            p = {2, 1};
        } else {
            throw Error("unknown regime '" + regime + "' (qubit, qutrit, ququart)");
        }
        if (levels) p.d = levels;
        if (qubits_per_qudit) p.b = qubits_per_qudit;
        p.validate();
        if (p.d > 4) throw Error("the ion device supports at most 4 levels");
        return p;
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--regime", regime, "qubit (d=2,b=1), qutrit (3,1), or ququart (4,2)");
        cmd->add_option("--levels", levels, "levels per qudit d (overrides --regime)");
        cmd->add_option("--qubits-per-qudit", qubits_per_qudit,
                        "qubits stored per qudit b (overrides --regime)");
    }
};

struct CommonFlags {
    RegimeFlags regime;
    bool optimize = false;
    bool strip = false;
    std::string mapping_file;
    std::string gate_lib;

    void add_to(CLI::App* cmd, bool with_mapping = true) {
        regime.add_to(cmd);
        cmd->add_flag("-O,--optimize", optimize, "enable the rewrite-rule optimizers");
        cmd->add_flag("--strip-trailing-phases", strip,
                      "drop phases after the last pulse on each qudit (Z statistics only)");
        if (with_mapping) {
            cmd->add_option("--mapping", mapping_file, "qubit-to-qudit mapping JSON file");
        }
        cmd->add_option("--gate-lib", gate_lib, "override the bundled qelib1.inc");
    }

    pipeline::Options options() const {
        pipeline::Options opt;
        opt.params = regime.params();
        opt.optimize = optimize;
        opt.strip_trailing = strip;
        if (!mapping_file.empty()) opt.mapping_json = read_file(mapping_file);
        if (!gate_lib.empty()) opt.gate_lib_path = gate_lib;
        opt.warn = [](const std::string& message) {
            std::cerr << "warning: " << message << "\n";
        };
        return opt;
    }
};

std::string output_stem(const std::string& first_input, const std::string& explicit_output) {
    if (!explicit_output.empty()) {
        std::string stem = explicit_output;
        const std::string suffix = ".iqc.json";
        if (stem.size() > suffix.size() &&
            stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
            stem.resize(stem.size() - suffix.size());
        }
        return stem;
    }
    std::filesystem::path p(first_input);
    p.replace_extension();
    return p.string();
}

int cmd_transpile(const std::vector<std::string>& inputs, const CommonFlags& flags,
                  const std::string& runtime_name, int repetitions,
                  const std::string& output) {
    if (!runtime_name.empty()) {
        // qubit-only transpilation onto a named runtime; prints QASM
        for (const auto& input : inputs) {
            const auto result = pipeline::transpile_qubit(read_file(input), input, runtime_name,
                                                          flags.optimize, flags.options());
            const std::string text = qasm::print_qasm(result.circuit, result.natives);
            if (output == "-" || (output.empty() && inputs.size() == 1)) {
                std::cout << text;
            } else {
                std::filesystem::path p(output.empty() ? input : output);
                if (output.empty()) p.replace_extension(".native.qasm");
                write_file(p.string(), text);
                std::cerr << "wrote " << p.string() << "\n";
            }
        }
        return kExitOk;
    }

    const auto options = flags.options();
    std::vector<std::pair<qd::Circuit, int>> circuits;
    nlohmann::ordered_json sidecar = nlohmann::ordered_json::array();
    for (const auto& input : inputs) {
        const auto t = pipeline::transpile(read_file(input), input, options);
        circuits.emplace_back(t.qudit, repetitions);
        sidecar.push_back(
            nlohmann::ordered_json::parse(pipeline::sidecar_json(t, input, options.params)));
    }
    const auto device = rt::load_runtime(rt::kIon).device->restricted(options.params.d);
    const std::string stem = output_stem(inputs.front(), output);
    write_file(stem + ".iqc.json", iqc::emit(circuits, device));
    write_file(stem + ".map.json", sidecar.dump(2) + "\n");
    std::cerr << "wrote " << stem << ".iqc.json and " << stem << ".map.json\n";
    return kExitOk;
}

int cmd_unmap(const std::string& samples_path, const std::string& sidecar_path,
              std::size_t index, const std::string& mode_name, const std::string& output) {
    const auto data = pipeline::parse_sidecar(read_file(sidecar_path), index);
    const auto samples = um::parse_samples_json(read_file(samples_path), data.params.d);
    um::Mode mode;
    if (mode_name == "strict") {
        mode = um::Mode::Strict;
    } else if (mode_name == "nonstrict") {
        mode = um::Mode::NonStrict;
    } else {
        throw Error("unknown mode '" + mode_name + "' (strict or nonstrict)");
    }
    const auto bits = um::unmap(samples, data.mapping, data.params, data.measures, mode);
    const std::string text = um::counts_to_json(bits, data.measures.clbits);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        write_file(output, text);
        std::cerr << "wrote " << output << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const CommonFlags& flags, std::size_t dim_cap) {
    const auto options = flags.options();
    const auto t = pipeline::transpile(read_file(input), input, options);
    ir::Circuit ref = t.reference;
    std::erase_if(ref.ops,
                  [](const ir::Op& op) { return std::holds_alternative<ir::Measure>(op); });

    sim::Matrix v, w;
    try {
        v = sim::circuit_unitary(ref, dim_cap);
        w = sim::circuit_unitary(t.qudit, dim_cap);
    } catch (const Error& e) {
        std::cout << "NOT VERIFIABLE at desk scale: " << e.what() << "\n";
        return kExitOk;
    }
    const auto e = sim::embedding_isometry(t.mapping, options.params);
    const auto diag = sim::check_equivalence(w, v, e, sim::EquivMode::DiagonalPhase);
    std::cout << "DIAGONAL_PHASE: " << (diag.ok ? "PASS" : "FAIL")
              << "  max deviation " << std::scientific << std::setprecision(3)
              << diag.max_deviation << "\n";
    bool ok = diag.ok;
    if (!flags.strip) {
        const auto global = sim::check_equivalence(w, v, e, sim::EquivMode::GlobalPhase);
        std::cout << "GLOBAL_PHASE:   " << (global.ok ? "PASS" : "FAIL")
                  << "  max deviation " << std::scientific << std::setprecision(3)
                  << global.max_deviation << "\n";
        ok = ok && global.ok;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

struct GateCounts {
    int rz = 0;  // virtual phases
    int r = 0;
    int xx = 0;
};

GateCounts count_gates(const qd::Circuit& c) {
    return {c.count_ph(), c.count_r(), c.count_xx()};
}

int cmd_stats(const std::vector<std::string>& inputs, bool use_bench,
              const std::string& rates_csv, const RegimeFlags& regime_flags) {
    std::vector<double> rates;
    if (!rates_csv.empty()) {
        std::stringstream ss(rates_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) rates.push_back(std::stod(tok));
        if (rates.size() != 4) {
            throw Error("--rates expects four values: e1b,e2b,e1d,e2d");
        }
    }

    struct Job {
        std::string name;
        std::string qasm;
        std::optional<std::string> ququart_mapping;
    };
    std::vector<Job> jobs;
    if (use_bench) {
        for (const auto& b : bench::corpus()) jobs.push_back({b.name, b.qasm, b.ququart_mapping});
    } else {
        if (inputs.empty()) throw Error("stats: pass QASM files or --bench");
        for (const auto& input : inputs) jobs.push_back({input, read_file(input), std::nullopt});
    }

    std::vector<qd::QuditParams> regimes;
    std::vector<std::string> regime_names;
    if (regime_flags.regime.empty() && !regime_flags.levels) {
        regimes = {{2, 1}, {3, 1}, {4, 2}};
        regime_names = {"qubit", "qutrit", "ququart"};
    } else {
        regimes = {regime_flags.params()};
        regime_names = {regime_flags.regime.empty() ? "custom" : regime_flags.regime};
    }

    std::cout << std::left << std::setw(14) << "name" << std::setw(9) << "regime"
              << "| " << std::setw(7) << "rz" << std::setw(7) << "r" << std::setw(7) << "xx"
              << "| " << std::setw(7) << "rz(-O)" << std::setw(7) << "r(-O)" << std::setw(7)
              << "xx(-O)";
    if (!rates.empty()) std::cout << "| " << std::setw(12) << "E" << std::setw(12) << "E(-O)";
    std::cout << "\n";

    for (const auto& job : jobs) {
        for (std::size_t k = 0; k < regimes.size(); ++k) {
            pipeline::Options opt;
            opt.params = regimes[k];
            if (opt.params.b == 2 && job.ququart_mapping) {
                opt.mapping_json = job.ququart_mapping;
            }
            opt.optimize = false;
            const auto plain = count_gates(pipeline::transpile(job.qasm, job.name, opt).qudit);
            opt.optimize = true;
            const auto tuned = count_gates(pipeline::transpile(job.qasm, job.name, opt).qudit);
            std::cout << std::left << std::setw(14) << job.name << std::setw(9)
                      << regime_names[k] << "| " << std::setw(7) << plain.rz << std::setw(7)
                      << plain.r << std::setw(7) << plain.xx << "| " << std::setw(7) << tuned.rz
                      << std::setw(7) << tuned.r << std::setw(7) << tuned.xx;
            if (!rates.empty()) {
                const bool is_qubit = regimes[k].d == 2 && regimes[k].b == 1;
                const double e1 = is_qubit ? rates[0] : rates[2];
                const double e2 = is_qubit ? rates[1] : rates[3];
                // single-qudit count excludes the virtual phases
                const double e_plain = e1 * plain.r + e2 * plain.xx;
                const double e_tuned = e1 * tuned.r + e2 * tuned.xx;
                std::cout << "| " << std::setw(12) << e_plain << std::setw(12) << e_tuned;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_bench(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& b : bench::corpus()) {
        const auto base = std::filesystem::path(dir) / b.name;
        write_file(base.string() + ".qasm", b.qasm);
        if (b.ququart_mapping) {
            write_file(base.string() + ".ququart-mapping.json", *b.ququart_mapping);
        }
    }
    std::cerr << "wrote benchmark corpus to " << dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit-to-qudit transpiler for trapped-ion hardware"};
    app.require_subcommand(1);

    // transpile
    auto* transpile = app.add_subcommand("transpile", "QASM -> ion qudit circuit (.iqc.json)");
    std::vector<std::string> inputs;
    CommonFlags flags;
    std::string runtime_name, output;
    int repetitions = 1024;
    transpile->add_option("inputs", inputs, "OpenQASM 2.0 files")->required();
    flags.add_to(transpile);
    transpile->add_option("--runtime", runtime_name,
                          "qubit-only transpilation onto this runtime (emulator, ion, ion-ir); "
                          "prints QASM instead of emitting an ion circuit");
    transpile->add_option("--repetitions", repetitions, "shots per circuit in the output file");
    transpile->add_option("-o,--output", output, "output path ('-' for stdout in runtime mode)");

    // unmap
    auto* unmap = app.add_subcommand("unmap", "qudit samples -> classical bit counts");
    std::string samples_path, sidecar_path, mode_name = "nonstrict", unmap_output;
    std::size_t circuit_index = 0;
    unmap->add_option("samples", samples_path, "samples JSON from the device")->required();
    unmap->add_option("sidecar", sidecar_path, "the .map.json written by transpile")->required();
    unmap->add_option("--index", circuit_index, "circuit index within the sidecar");
    unmap->add_option("--mode", mode_name, "strict (drop leakage) or nonstrict (clamp)");
    unmap->add_option("-o,--output", unmap_output, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check the transpilation against the simulator");
    std::string verify_input;
    CommonFlags verify_flags;
    std::size_t dim_cap = sim::kDefaultDimCap;
    verify->add_option("input", verify_input, "OpenQASM 2.0 file")->required();
    verify_flags.add_to(verify);
    verify->add_option("--dim-cap", dim_cap, "largest simulable dimension");

    // stats
    auto* stats = app.add_subcommand("stats", "gate-count table per regime");
    std::vector<std::string> stats_inputs;
    bool stats_bench = false;
    std::string rates_csv;
    RegimeFlags stats_regime;
    stats->add_option("inputs", stats_inputs, "OpenQASM 2.0 files");
    stats->add_flag("--bench", stats_bench, "run the bundled benchmark corpus");
    stats->add_option("--rates", rates_csv,
                      "e1b,e2b,e1d,e2d gate error rates for the E = e1*N1 + e2*N2 estimate");
    stats_regime.add_to(stats);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "write the benchmark corpus as QASM files");
    std::string bench_dir = ".";
    bench_cmd->add_option("dir", bench_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transpile->parsed()) {
            return cmd_transpile(inputs, flags, runtime_name, repetitions, output);
        }
        if (unmap->parsed()) {
            return cmd_unmap(samples_path, sidecar_path, circuit_index, mode_name, unmap_output);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_input, verify_flags, dim_cap);
        }
        if (stats->parsed()) {
            return cmd_stats(stats_inputs, stats_bench, rates_csv, stats_regime);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench_dir);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUserError;
}
