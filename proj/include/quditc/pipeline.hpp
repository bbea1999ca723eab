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

#pragma once

#include <optional>
#include <string>

#include "quditc/ir.hpp"
#include "quditc/qudit.hpp"
#include "quditc/runtime.hpp"
#include "quditc/unmap.hpp"

// The full transpilation pipeline: frontend -> expand(ion-IR) -> [optimize]
// -> lower(d, b, mapping) -> route -> [optimize_qudit] -> [strip phases].

namespace quditc::pipeline {

struct Options {
    qd::QuditParams params{2, 1};
    bool optimize = false;
    bool strip_trailing = false;
    std::optional<std::string> mapping_json;    // inline JSON text
    std::optional<std::string> gate_lib_path;   // qelib1.inc override
    std::function<void(const std::string&)> warn;  // rewrite-cap warnings etc.
};

struct Transpiled {
    ir::Circuit reference;   // expanded, unoptimized (the verification baseline)
    ir::Circuit optimized;   // after qubit rules (== reference without -O)
    qd::Circuit qudit;       // lowered, routed, optionally optimized/stripped
    qd::Mapping mapping;
    um::MeasureMap measures;
    route::TransitionGraph device;
};

/// Runs the qudit pipeline on one QASM source using the bundled ion-IR
/// runtime (or the QUDITC_RUNTIME_DIR override).
Transpiled transpile(const std::string& source, const std::string& filename,
                     const Options& options);

/// Qubit-only transpilation onto a named runtime's native set; returns the
/// expanded (and optionally optimized) circuit for QASM printing.
struct QubitTranspiled {
    ir::Circuit circuit;
    qasm::NativeSet natives;
};
QubitTranspiled transpile_qubit(const std::string& source, const std::string& filename,
                                const std::string& runtime_name, bool optimize,
                                const Options& options = {});

/// The sidecar payload ({mapping, params, measures}) for one circuit.
std::string sidecar_json(const Transpiled& t, const std::string& source_name,
                         const qd::QuditParams& params);

struct SidecarData {
    qd::QuditParams params;
    qd::Mapping mapping;
    um::MeasureMap measures;
};
SidecarData parse_sidecar(const std::string& text, std::size_t index);

}  // namespace quditc::pipeline
