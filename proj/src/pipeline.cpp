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

#include "quditc/pipeline.hpp"

#include <json.hpp>

#include "quditc/lowering.hpp"
#include "quditc/qudit_opt.hpp"

namespace quditc::pipeline {

namespace {

um::MeasureMap measure_map(const ir::Circuit& circuit) {
    um::MeasureMap map;
    map.clbits = circuit.clbits;
    for (const auto& op : circuit.ops) {
        if (const auto* m = std::get_if<ir::Measure>(&op)) {
            map.qubit_to_clbit.emplace_back(m->qubit, m->clbit);
        }
    }
    map.validate(circuit.qubits);
    return map;
}

void warn_cap(const Options& options, const rw::OptimizeStats& stats, const char* stage) {
    if (stats.cap_exceeded && options.warn) {
        options.warn(std::string(stage) + ": rewrite cap exceeded (" +
                     std::to_string(stats.rewrites) + " rewrites); returning the current circuit");
    }
}

}  // namespace

Transpiled transpile(const std::string& source, const std::string& filename,
                     const Options& options) {
    options.params.validate();
    const rt::Runtime runtime = rt::load_runtime(rt::kIonIr);
    const rt::Runtime ion = rt::load_runtime(rt::kIon);
    if (!ion.device) throw InternalError("ion runtime lost its device spec");

    const auto program =
        qasm::parse_qasm(source, filename, runtime.include_resolver(options.gate_lib_path));
    qasm::reject_ion_unsupported(program);
    auto expanded = qasm::expand(program, runtime.natives);
    qasm::check_measurement_suffix(expanded);

    Transpiled out;
    out.reference = expanded.circuit;
    out.measures = measure_map(expanded.circuit);
    out.device = ion.device->restricted(options.params.d);

    out.optimized = out.reference;
    if (options.optimize) {
        rw::OptimizeStats stats;
        out.optimized = rw::optimize(out.reference, runtime.rules, rw::kDefaultRewriteCap,
                                     &stats);
        warn_cap(options, stats, "qubit optimizer");
    }
    // Without ancillary levels the mcz family lowers through its qubit-level
    // phase network; expanding here lets the qubit rules at it first.
    if (options.params.d < 3 || options.params.b > 1) {
        out.optimized = lower::expand_mcz_networks(out.optimized);
        if (options.optimize) {
            rw::OptimizeStats stats;
            out.optimized = rw::optimize(out.optimized, runtime.rules, rw::kDefaultRewriteCap,
                                         &stats);
            warn_cap(options, stats, "qubit optimizer");
        }
    }

    out.mapping = options.mapping_json
                      ? qd::parse_mapping_json(*options.mapping_json, options.params)
                      : qd::default_mapping(out.reference.qubits, options.params.b);
    if (out.mapping.qubits() < out.reference.qubits) {
        throw Error("mapping covers fewer qubits than the circuit uses");
    }

    out.qudit = lower::lower(out.optimized, options.params, out.mapping);
    out.qudit = route::route(out.qudit, out.device);
    if (options.optimize) {
        rw::OptimizeStats stats;
        out.qudit = qopt::optimize_qudit(out.qudit, rw::kDefaultRewriteCap, &stats);
        warn_cap(options, stats, "qudit optimizer");
    }
    if (options.strip_trailing) {
        out.qudit = qopt::strip_trailing_phases(out.qudit);
    }
    return out;
}

QubitTranspiled transpile_qubit(const std::string& source, const std::string& filename,
                                const std::string& runtime_name, bool optimize,
                                const Options& options) {
    const rt::Runtime runtime = rt::load_runtime(runtime_name);
    const auto program =
        qasm::parse_qasm(source, filename, runtime.include_resolver(options.gate_lib_path));
    if (runtime.kind != rt::TargetKind::Emulator) {
        qasm::reject_ion_unsupported(program);
    }
    auto expanded = qasm::expand(program, runtime.natives);
    if (runtime.kind != rt::TargetKind::Emulator) {
        qasm::check_measurement_suffix(expanded);
    }
    QubitTranspiled out;
    out.circuit = expanded.circuit;
    out.natives = runtime.natives;
    if (optimize) {
        rw::OptimizeStats stats;
        out.circuit = rw::optimize(out.circuit, runtime.rules, rw::kDefaultRewriteCap, &stats);
        warn_cap(options, stats, "qubit optimizer");
    }
    return out;
}

std::string sidecar_json(const Transpiled& t, const std::string& source_name,
                         const qd::QuditParams& params) {
    nlohmann::ordered_json j;
    j["source"] = source_name;
    j["levels"] = params.d;
    j["qubits_per_qudit"] = params.b;
    j["qudit_count"] = t.mapping.qudit_count;
    auto qubits = nlohmann::ordered_json::array();
    for (int n = 0; n < t.mapping.qubits(); ++n) {
        qubits.push_back({{"qudit", t.mapping.qudit_of[n]}, {"slot", t.mapping.slot_of[n]}});
    }
    j["qubits"] = std::move(qubits);
    auto measures = nlohmann::ordered_json::array();
    for (const auto& [q, c] : t.measures.qubit_to_clbit) {
        measures.push_back({{"qubit", q}, {"clbit", c}});
    }
    j["measures"] = std::move(measures);
    j["creg_size"] = t.measures.clbits;
    return j.dump(2);
}

SidecarData parse_sidecar(const std::string& text, std::size_t index) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("sidecar file: ") + e.what());
    }
    if (!root.is_array()) throw Error("sidecar file: expected an array of circuit records");
    if (index >= root.size()) {
        throw Error("sidecar file has " + std::to_string(root.size()) +
                    " record(s); index " + std::to_string(index) + " is out of range");
    }
    const auto& j = root[index];
    SidecarData data;
    data.params.d = j.at("levels").get<int>();
    data.params.b = j.at("qubits_per_qudit").get<int>();
    data.params.validate();
    data.mapping.qudit_count = j.at("qudit_count").get<int>();
    for (const auto& entry : j.at("qubits")) {
        data.mapping.qudit_of.push_back(entry.at("qudit").get<int>());
        data.mapping.slot_of.push_back(entry.at("slot").get<int>());
    }
    data.mapping.validate(data.params);
    data.measures.clbits = j.at("creg_size").get<int>();
    for (const auto& entry : j.at("measures")) {
        data.measures.qubit_to_clbit.emplace_back(entry.at("qubit").get<int>(),
                                                  entry.at("clbit").get<int>());
    }
    data.measures.validate(data.mapping.qubits());
    return data;
}

}  // namespace quditc::pipeline
