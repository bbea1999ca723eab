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

#include "quditc/runtime.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quditc/runtime_data.hpp"

namespace quditc::rt {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

route::TransitionGraph ion_star_graph(int levels) {
    auto g = route::TransitionGraph::star(levels);
    g.validate();
    return g;
}

Runtime assemble(std::string name, TargetKind kind, std::string qelib, std::string matcher,
                 std::optional<IonDeviceSpec> device) {
    Runtime rt;
    rt.name = std::move(name);
    rt.kind = kind;
    rt.qelib_source = std::move(qelib);
    rt.matcher_source = std::move(matcher);
    // Parse the library as an include so no OPENQASM header is required.
    rt.gate_library = qasm::parse_qasm(
        "OPENQASM 2.0; include \"qelib1.inc\";", "<runtime>",
        [&](const std::string& inc, const SourceSpan& span) -> std::string {
            if (inc == "qelib1.inc") return rt.qelib_source;
            throw Error("cannot resolve include \"" + inc + "\"", span);
        });
    for (const auto& def : rt.gate_library.gatedefs) {
        if (def.opaque) {
            rt.natives[def.name] = {def.name, static_cast<int>(def.params.size()),
                                    static_cast<int>(def.qargs.size())};
        }
    }
    if (rt.natives.empty()) {
        throw Error("runtime '" + rt.name + "': gate library declares no opaque gates");
    }
    rt.rules = rw::parse_rules(rt.matcher_source, rt.name + "/matcher.script");
    rw::GateTable table;
    for (const auto& [gname, native] : rt.natives) {
        table[gname] = {native.params, native.arity};
    }
    rw::validate_rules(rt.rules, table);
    rt.device = std::move(device);
    if (kind == TargetKind::Ion && !rt.device) {
        throw Error("runtime '" + rt.name + "': ion target requires a device spec");
    }
    return rt;
}

TargetKind parse_kind(const std::string& s) {
    if (s == "EMULATOR") return TargetKind::Emulator;
    if (s == "ION") return TargetKind::Ion;
    if (s == "ION_IR") return TargetKind::IonIr;
    throw Error("unknown target kind '" + s + "' (expected EMULATOR, ION, or ION_IR)");
}

}  // namespace

route::TransitionGraph IonDeviceSpec::restricted(int d) const {
    if (d > levels) {
        throw Error("requested " + std::to_string(d) + " levels but the device has " +
                    std::to_string(levels));
    }
    route::TransitionGraph g;
    g.d = d;
    for (const auto& [a, b] : transitions.r_pairs) {
        if (a < d && b < d) g.r_pairs.insert({a, b});
    }
    for (const auto& t : transitions.xx_pairs) {
        if (t[1] < d && t[3] < d) g.xx_pairs.insert(t);
    }
    g.validate();
    return g;
}

qasm::IncludeResolver Runtime::include_resolver(
    const std::optional<std::string>& override_path) const {
    const std::string lib = override_path ? read_file(*override_path) : qelib_source;
    return [lib](const std::string& name, const SourceSpan& span) -> std::string {
        if (name == "qelib1.inc") return lib;
        throw Error("cannot resolve include \"" + name +
                        "\" (only the runtime's qelib1.inc is available)",
                    span);
    };
}

Runtime load_runtime_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path base(dir);
    const std::string qelib = read_file((base / "qelib1.inc").string());
    const std::string matcher = read_file((base / "matcher.script").string());
    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(read_file((base / "runtime.json").string()));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("runtime.json: " + std::string(e.what()));
    }
    if (!meta.is_object() || !meta.contains("name") || !meta.contains("target")) {
        throw Error("runtime.json: expected {\"name\", \"target\", ...}");
    }
    const TargetKind kind = parse_kind(meta["target"].get<std::string>());
    std::optional<IonDeviceSpec> device;
    if (meta.contains("ion_device")) {
        const auto& jd = meta["ion_device"];
        IonDeviceSpec spec;
        spec.levels = jd.value("levels", 4);
        spec.transitions.d = spec.levels;
        if (jd.contains("single_qudit_transitions")) {
            for (const auto& pair : jd["single_qudit_transitions"]) {
                int a = pair[0].get<int>(), b = pair[1].get<int>();
                if (a > b) std::swap(a, b);
                spec.transitions.r_pairs.insert({a, b});
            }
        }
        if (jd.contains("xx_transitions")) {
            for (const auto& t : jd["xx_transitions"]) {
                spec.transitions.xx_pairs.insert({t[0][0].get<int>(), t[0][1].get<int>(),
                                                  t[1][0].get<int>(), t[1][1].get<int>()});
            }
        }
        spec.transitions.validate();
        device = std::move(spec);
    }
    return assemble(meta["name"].get<std::string>(), kind, qelib, matcher, std::move(device));
}

Runtime load_runtime(const std::string& name) {
    if (const char* env = std::getenv("QUDITC_RUNTIME_DIR")) {
        const std::filesystem::path candidate = std::filesystem::path(env) / name;
        if (std::filesystem::exists(candidate / "runtime.json")) {
            return load_runtime_dir(candidate.string());
        }
    }
    if (name == kEmulator) {
        return assemble(kEmulator, TargetKind::Emulator, data::kEmulatorQelib,
                        data::kEmulatorMatcher, std::nullopt);
    }
    if (name == kIon) {
        IonDeviceSpec spec;
        spec.levels = 4;
        spec.transitions = ion_star_graph(4);
        return assemble(kIon, TargetKind::Ion, data::kIonQelib, data::kIonMatcher,
                        std::move(spec));
    }
    if (name == kIonIr) {
        return assemble(kIonIr, TargetKind::IonIr, data::kIonIrQelib, data::kIonIrMatcher,
                        std::nullopt);
    }
    throw Error("unknown runtime '" + name + "' (bundled: emulator, ion, ion-ir)");
}

}  // namespace quditc::rt
