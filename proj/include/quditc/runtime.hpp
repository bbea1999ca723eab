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

#include "quditc/qasm.hpp"
#include "quditc/rewrite.hpp"
#include "quditc/route.hpp"

// A runtime bundles the target device description: gate library
// (qelib1.inc), rewrite rules (matcher.script), the native gate set derived
// from the opaque declarations, and the target kind.

namespace quditc::rt {

enum class TargetKind { Emulator, Ion, IonIr };

struct IonDeviceSpec {
    int levels = 4;
    route::TransitionGraph transitions;  // full device graph (levels = d_max)

    /// Graph restricted to the first `d` levels.
    route::TransitionGraph restricted(int d) const;
};

struct Runtime {
    std::string name;
    TargetKind kind = TargetKind::Emulator;
    std::string qelib_source;
    std::string matcher_source;
    qasm::Program gate_library;  // parsed qelib1.inc (definitions only)
    qasm::NativeSet natives;     // exactly the opaque declarations
    rw::RuleScript rules;
    std::optional<IonDeviceSpec> device;  // present when kind == Ion

    /// Resolves `include "qelib1.inc"` to the bundled library; any other
    /// name is an error (hermetic transpilation). `override_path`, when
    /// set, reads that file instead.
    qasm::IncludeResolver include_resolver(
        const std::optional<std::string>& override_path = std::nullopt) const;
};

inline constexpr const char* kEmulator = "emulator";
inline constexpr const char* kIon = "ion";
inline constexpr const char* kIonIr = "ion-ir";

/// Bundled runtime by name, or a directory runtime when $QUDITC_RUNTIME_DIR
/// contains `<name>/qelib1.inc`, `<name>/matcher.script`, `<name>/runtime.json`.
Runtime load_runtime(const std::string& name);

/// Loads the three-file layout from an explicit directory.
Runtime load_runtime_dir(const std::string& dir);

}  // namespace quditc::rt
