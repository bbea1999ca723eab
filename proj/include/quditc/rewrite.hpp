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

// The matcher-script rewrite DSL: pattern -> block rules applied to gate
// sequences until fixpoint. The engine is generic over an op alphabet
// (name, real params, entity indices), so the same machinery optimizes
// qubit circuits and, with levels encoded as parameters, qudit circuits.

namespace quditc::rw {

// ---- script AST -------------------------------------------------------------

struct RExpr;
using RExprPtr = std::shared_ptr<const RExpr>;

struct RExpr {
    enum class Kind { Number, Pi, Var, Unary, Binary, Call };
    Kind kind = Kind::Number;
    double number = 0.0;
    std::string name;  // Var / Call
    std::string op;    // Binary: + - * / == != < > <= >= && ||
    std::vector<RExprPtr> args;
    SourceSpan span;
};

struct PatternTerm {
    std::string gate;
    std::vector<std::string> param_vars;
    std::vector<std::string> qubit_vars;  // empty = implicit shared tuple
    SourceSpan span;
};

struct CallTerm {
    std::string gate;
    std::vector<RExprPtr> params;
    std::vector<std::string> qubit_vars;  // empty = implicit shared tuple
    SourceSpan span;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
    enum class Kind { Assign, If, Return };
    Kind kind = Kind::Assign;
    // Assign
    std::string name;
    RExprPtr value;
    // If
    RExprPtr cond;
    std::vector<StmtPtr> then_body;
    std::vector<StmtPtr> else_body;
    // Return ("id" = empty composition)
    std::vector<CallTerm> composition;
    SourceSpan span;
};

struct RewriteRule {
    std::vector<PatternTerm> pattern;
    std::vector<StmtPtr> block;
    std::string display;  // pattern as written, for diagnostics
    SourceSpan span;
};

struct RuleScript {
    std::vector<RewriteRule> rules;
};

RuleScript parse_rules(const std::string& text, const std::string& filename = "matcher.script");

/// Gate arities/param counts the script may reference.
struct GateShape {
    int params = 0;
    int arity = 0;
};
using GateTable = std::map<std::string, GateShape>;

/// Checks every pattern and return against the table (unknown gate, wrong
/// parameter count, implicit-tuple arity agreement).
void validate_rules(const RuleScript& script, const GateTable& gates);

// ---- generic circuit items --------------------------------------------------

struct Term {
    std::string name;
    std::vector<double> params;
    std::vector<int> entities;
    /// Resources used for commutation checks; empty = the entities
    /// themselves. The qudit adapter puts (qudit, level) pairs here so ops
    /// on disjoint levels of one qudit commute past each other.
    std::vector<int> conflicts;

    bool operator==(const Term& rhs) const {
        return name == rhs.name && params == rhs.params && entities == rhs.entities;
    }
};

/// A rewrite slot: either a matchable term or an opaque blocker (barrier,
/// measure, ...). Blockers with `all = true` fence every entity.
struct Item {
    std::optional<Term> term;
    std::vector<int> blocked;
    bool all = false;
    std::size_t orig = 0;  // adapter bookkeeping for non-term ops
};

struct MatchBinding {
    std::map<std::string, double> params;
    std::map<std::string, int> qubits;
    std::vector<int> implicit_tuple;
    bool implicit_bound = false;
    std::vector<std::size_t> positions;
};

/// Binds `rule`'s pattern starting at item `start` (which must be a term).
/// Later terms match the first later op with the same semantics such that no
/// intervening op acts on the union of entities bound so far or of the
/// candidate.
std::optional<MatchBinding> find_match(const std::vector<Item>& items, std::size_t start,
                                       const RewriteRule& rule);

/// Runs the block; nullopt = fell off the end (rule not applicable).
/// Division by zero or any other non-finite result aborts with Error.
std::optional<std::vector<Term>> eval_block(const RewriteRule& rule, const MatchBinding& binding);

inline constexpr long kDefaultRewriteCap = 100000;

struct OptimizeStats {
    long rewrites = 0;
    bool cap_exceeded = false;
};

/// Recomputes Term::conflicts for terms a rule produced (adapters with
/// finer-than-entity conflict resources install one).
using TermAnnotator = std::function<void(Term&)>;

/// First applicable rule (file order) at the earliest position, repeated to
/// fixpoint or until the cap.
std::vector<Item> optimize_items(std::vector<Item> items, const RuleScript& script,
                                 long cap = kDefaultRewriteCap, OptimizeStats* stats = nullptr,
                                 const TermAnnotator& annotate = {});

// ---- qubit-circuit adapter ----------------------------------------------------

ir::Circuit optimize(const ir::Circuit& circuit, const RuleScript& script,
                     long cap = kDefaultRewriteCap, OptimizeStats* stats = nullptr);

}  // namespace quditc::rw
