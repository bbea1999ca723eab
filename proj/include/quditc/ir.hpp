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

#include <string>
#include <variant>
#include <vector>

#include "quditc/diag.hpp"

namespace quditc::ir {

/// Application of a native gate to flat qubit indices.
struct Gate {
    std::string name;
    std::vector<double> params;
    std::vector<int> qubits;

    bool operator==(const Gate&) const = default;
};

struct Barrier {
    std::vector<int> qubits;
    bool operator==(const Barrier&) const = default;
};

struct Measure {
    int qubit = 0;
    int clbit = 0;
    bool operator==(const Measure&) const = default;
};

/// Carried through the IR so backends can reject (ion) or print (emulator).
struct Reset {
    int qubit = 0;
    bool operator==(const Reset&) const = default;
};

/// `if (creg == value) op;` — single-comparison conditional of OpenQASM 2.0.
struct Conditional {
    int creg = 0;  // index into Circuit::cregs
    long value = 0;
    std::variant<Gate, Measure, Reset> body;
    bool operator==(const Conditional&) const = default;
};

using Op = std::variant<Gate, Barrier, Measure, Reset, Conditional>;

struct CregInfo {
    std::string name;
    int size = 0;
    int offset = 0;  // first flat clbit
    bool operator==(const CregInfo&) const = default;
};

/// Native-gate circuit over a flat qubit register: the inter-stage IR.
struct Circuit {
    int qubits = 0;
    int clbits = 0;
    std::vector<CregInfo> cregs;
    std::vector<Op> ops;

    bool operator==(const Circuit&) const = default;
};

/// Qubits an op acts on (for commutation checks). Conditionals also
/// depend on classical state, so callers must treat them as blocking.
std::vector<int> touched_qubits(const Op& op);

inline bool is_gate(const Op& op) { return std::holds_alternative<Gate>(op); }

}  // namespace quditc::ir
