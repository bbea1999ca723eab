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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quditc/diag.hpp"
#include "quditc/ir.hpp"

// OpenQASM 2.0 frontend: parse, semantic checks, expansion of gate calls
// down to the active runtime's opaque (native) set.

namespace quditc::qasm {

// ---- expressions (retained unevaluated in the AST) ------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Pi, Ident, Unary, Binary, Call };
    Kind kind = Kind::Number;
    double number = 0.0;
    std::string name;  // Ident / Call
    char op = 0;       // Binary: one of + - * / ^   Unary: -
    std::vector<ExprPtr> args;
    SourceSpan span;
};

/// Evaluates with `pi` bound and identifiers looked up in `env`.
double eval_expr(const ExprPtr& e, const std::map<std::string, double>& env);

// ---- statements ------------------------------------------------------------

struct Argument {
    std::string reg;
    std::optional<int> index;  // nullopt = whole register
    SourceSpan span;
};

struct GateCall {
    std::string name;
    std::vector<ExprPtr> params;
    std::vector<Argument> args;
    SourceSpan span;
};

struct MeasureStmt {
    Argument src;
    Argument dst;
    SourceSpan span;
};

struct BarrierStmt {
    std::vector<Argument> args;
    SourceSpan span;
};

struct ResetStmt {
    Argument target;
    SourceSpan span;
};

struct CondStmt {
    std::string creg;
    long value = 0;
    std::variant<GateCall, MeasureStmt, ResetStmt> body;
    SourceSpan span;
};

using Statement = std::variant<GateCall, MeasureStmt, BarrierStmt, ResetStmt, CondStmt>;

// ---- gate definitions -------------------------------------------------------

struct GateDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> qargs;
    bool opaque = false;
    std::vector<std::variant<GateCall, BarrierStmt>> body;
    SourceSpan span;
};

struct Program {
    std::string version = "2.0";
    std::vector<std::string> includes;
    std::vector<std::pair<std::string, int>> qregs;  // declaration order
    std::vector<std::pair<std::string, int>> cregs;
    std::vector<GateDef> gatedefs;  // definition order
    std::map<std::string, std::size_t> gate_index;
    std::vector<Statement> body;

    const GateDef* find_gate(const std::string& name) const;
};

/// Maps an include name ("qelib1.inc") to its source text; throws Error on
/// unknown names. Transpilation is hermetic: the runtime provides this.
using IncludeResolver = std::function<std::string(const std::string& name, const SourceSpan&)>;

IncludeResolver no_includes();

Program parse_qasm(const std::string& text, const std::string& filename,
                   const IncludeResolver& resolver = no_includes());

// ---- expansion --------------------------------------------------------------

struct NativeGate {
    std::string name;
    int params = 0;
    int arity = 0;
};

using NativeSet = std::map<std::string, NativeGate>;

struct ExpandResult {
    ir::Circuit circuit;
    std::vector<SourceSpan> spans;  // aligned with circuit.ops
};

/// Recursively expands every gate call until only natives remain.
/// Parameter expressions are evaluated in double precision with pi bound.
ExpandResult expand(const Program& program, const NativeSet& natives);

/// AST-level check for constructs the ion targets cannot execute
/// (reset, conditionals); throws with the construct's span.
void reject_ion_unsupported(const Program& program);

/// After any measurement of a qubit, nothing else may touch it.
void check_measurement_suffix(const ExpandResult& expanded);

// ---- printing ---------------------------------------------------------------

/// Renders the IR as a self-contained OpenQASM 2.0 program (opaque
/// declarations for the natives, one flat qreg). parse+expand of the
/// output reproduces the IR gate-for-gate.
std::string print_qasm(const ir::Circuit& c, const NativeSet& natives);

/// Shortest round-trip formatting of a double (also used by the emitter).
std::string format_double(double v);

}  // namespace quditc::qasm
