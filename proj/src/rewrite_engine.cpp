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

#include <algorithm>
#include <cmath>
#include <set>

#include "quditc/rewrite.hpp"

namespace quditc::rw {

namespace {

constexpr double kEqTol = 1e-12;

const std::vector<int>& conflicts_of(const Term& term) {
    return term.conflicts.empty() ? term.entities : term.conflicts;
}

bool items_share(const Item& item, const std::set<int>& resources) {
    if (item.all) return true;
    const auto& list = item.term ? conflicts_of(*item.term) : item.blocked;
    return std::any_of(list.begin(), list.end(),
                       [&](int e) { return resources.count(e) != 0; });
}

/// Tries to extend `binding` with `term` matched against `op`.
bool bind_term(const PatternTerm& term, const Term& op, MatchBinding& binding) {
    if (term.gate != op.name) return false;
    if (term.param_vars.size() != op.params.size()) return false;
    if (term.qubit_vars.empty()) {
        if (binding.implicit_bound) {
            if (binding.implicit_tuple != op.entities) return false;
        }
    } else {
        if (term.qubit_vars.size() != op.entities.size()) return false;
        // injective: distinct variables to distinct entities
        auto trial = binding.qubits;
        for (std::size_t k = 0; k < term.qubit_vars.size(); ++k) {
            const auto& var = term.qubit_vars[k];
            const int ent = op.entities[k];
            auto it = trial.find(var);
            if (it != trial.end()) {
                if (it->second != ent) return false;
            } else {
                for (const auto& [v, e] : trial) {
                    if (e == ent) return false;
                }
                trial[var] = ent;
            }
        }
        binding.qubits = std::move(trial);
    }
    for (std::size_t k = 0; k < term.param_vars.size(); ++k) {
        binding.params[term.param_vars[k]] = op.params[k];
    }
    if (term.qubit_vars.empty() && !binding.implicit_bound) {
        binding.implicit_tuple = op.entities;
        binding.implicit_bound = true;
    }
    return true;
}

struct EvalContext {
    const RewriteRule& rule;
    std::map<std::string, double> env;

    [[noreturn]] void fail(const std::string& what, const SourceSpan& span) const {
        throw Error("rule '" + rule.display + "': " + what, span);
    }

    double check(double v, const SourceSpan& span) const {
        if (!std::isfinite(v)) fail("expression evaluates to a non-finite value", span);
        return v;
    }

    double eval(const RExprPtr& e) const {
        switch (e->kind) {
            case RExpr::Kind::Number: return e->number;
            case RExpr::Kind::Pi: return M_PI;
            case RExpr::Kind::Var: {
                auto it = env.find(e->name);
                if (it == env.end()) fail("unbound variable '" + e->name + "'", e->span);
                return it->second;
            }
            case RExpr::Kind::Unary: return -eval(e->args[0]);
            case RExpr::Kind::Binary: {
                const std::string& op = e->op;
                if (op == "&&") return truthy(e->args[0]) && truthy(e->args[1]) ? 1.0 : 0.0;
                if (op == "||") return truthy(e->args[0]) || truthy(e->args[1]) ? 1.0 : 0.0;
                const double a = eval(e->args[0]);
                const double b = eval(e->args[1]);
                if (op == "+") return check(a + b, e->span);
                if (op == "-") return check(a - b, e->span);
                if (op == "*") return check(a * b, e->span);
                if (op == "/") return check(a / b, e->span);
                if (op == "==") return std::abs(a - b) <= kEqTol ? 1.0 : 0.0;
                if (op == "!=") return std::abs(a - b) > kEqTol ? 1.0 : 0.0;
                if (op == "<") return a < b ? 1.0 : 0.0;
                if (op == ">") return a > b ? 1.0 : 0.0;
                if (op == "<=") return a <= b ? 1.0 : 0.0;
                if (op == ">=") return a >= b ? 1.0 : 0.0;
                throw InternalError("unknown operator " + op);
            }
            case RExpr::Kind::Call: {
                const double a = eval(e->args[0]);
                if (e->name == "sin") return check(std::sin(a), e->span);
                if (e->name == "cos") return check(std::cos(a), e->span);
                if (e->name == "tan") return check(std::tan(a), e->span);
                if (e->name == "sqrt") return check(std::sqrt(a), e->span);
                if (e->name == "abs") return std::abs(a);
                if (e->name == "floor") return std::floor(a);
                const double b = eval(e->args[1]);
                if (e->name == "atan2") return std::atan2(a, b);
                if (e->name == "mod") return check(std::fmod(a, b), e->span);
                throw InternalError("unknown function " + e->name);
            }
        }
        throw InternalError("unreachable expression kind");
    }

    bool truthy(const RExprPtr& e) const { return eval(e) != 0.0; }
};

enum class Flow { Next, Returned };

Flow run_stmts(const std::vector<StmtPtr>& stmts, EvalContext& ctx, const MatchBinding& binding,
               std::vector<Term>& out) {
    for (const auto& s : stmts) {
        switch (s->kind) {
            case Stmt::Kind::Assign: ctx.env[s->name] = ctx.eval(s->value); break;
            case Stmt::Kind::If: {
                const auto& branch = ctx.truthy(s->cond) ? s->then_body : s->else_body;
                if (run_stmts(branch, ctx, binding, out) == Flow::Returned) {
                    return Flow::Returned;
                }
                break;
            }
            case Stmt::Kind::Return: {
                for (const auto& call : s->composition) {
                    Term t;
                    t.name = call.gate;
                    for (const auto& p : call.params) t.params.push_back(ctx.eval(p));
                    if (call.qubit_vars.empty()) {
                        if (!binding.implicit_bound) {
                            ctx.fail("no implicit qubit tuple bound", call.span);
                        }
                        t.entities = binding.implicit_tuple;
                    } else {
                        for (const auto& qv : call.qubit_vars) {
                            auto it = binding.qubits.find(qv);
                            if (it == binding.qubits.end()) {
                                ctx.fail("unbound qubit variable '" + qv + "'", call.span);
                            }
                            t.entities.push_back(it->second);
                        }
                    }
                    out.push_back(std::move(t));
                }
                return Flow::Returned;
            }
        }
    }
    return Flow::Next;
}

}  // namespace

namespace {

/// Enumerates commuting-adjacent chains for rule at `start` in scan order
/// and hands each complete binding to `sink`; returns the first binding the
/// sink accepts. A candidate that touches already-bound resources fences
/// the scan (nothing later can commute past it), so alternatives exist only
/// among resource-disjoint ops - backtracking stays deterministic and cheap.
template <typename Sink>
bool enumerate_chains(const std::vector<Item>& items, const RewriteRule& rule, std::size_t t,
                      std::size_t prev, MatchBinding& binding, std::set<int>& bound,
                      Sink&& sink) {
    if (t == rule.pattern.size()) return sink(binding);
    // Resources touched by the ops the scan stepped over. Anything that
    // shares a bound resource fences the chain (returns below), so by the
    // time j is a candidate every skipped op is bound-disjoint and the
    // corridor condition reduces to overlap with this set.
    std::set<int> skipped;
    for (std::size_t j = prev + 1; j < items.size(); ++j) {
        const Item& cand = items[j];
        if (!cand.term) {
            if (items_share(cand, bound)) return false;  // fences the chain
            const auto& res = cand.blocked;
            skipped.insert(res.begin(), res.end());
            continue;
        }
        const auto& cand_conf = conflicts_of(*cand.term);
        const bool blocked = std::any_of(cand_conf.begin(), cand_conf.end(),
                                         [&](int e) { return skipped.count(e) != 0; });
        const bool shares_bound = items_share(cand, bound);
        if (!blocked) {
            MatchBinding trial = binding;
            if (bind_term(rule.pattern[t], *cand.term, trial)) {
                trial.positions.push_back(j);
                std::set<int> extended = bound;
                extended.insert(cand_conf.begin(), cand_conf.end());
                if (enumerate_chains(items, rule, t + 1, j, trial, extended,
                                     std::forward<Sink>(sink))) {
                    binding = std::move(trial);
                    bound = std::move(extended);
                    return true;
                }
            }
        }
        // An op acting on bound resources that did not extend the chain
        // blocks every later candidate's corridor.
        if (shares_bound) return false;
        skipped.insert(cand_conf.begin(), cand_conf.end());
    }
    return false;
}

template <typename Sink>
std::optional<MatchBinding> match_with_sink(const std::vector<Item>& items, std::size_t start,
                                            const RewriteRule& rule, Sink&& sink) {
    if (start >= items.size() || !items[start].term) return std::nullopt;
    MatchBinding binding;
    if (!bind_term(rule.pattern[0], *items[start].term, binding)) return std::nullopt;
    binding.positions.push_back(start);
    const auto& first_conf = conflicts_of(*items[start].term);
    std::set<int> bound(first_conf.begin(), first_conf.end());
    if (enumerate_chains(items, rule, 1, start, binding, bound, std::forward<Sink>(sink))) {
        return binding;
    }
    return std::nullopt;
}

}  // namespace

std::optional<MatchBinding> find_match(const std::vector<Item>& items, std::size_t start,
                                       const RewriteRule& rule) {
    return match_with_sink(items, start, rule, [](const MatchBinding&) { return true; });
}

std::optional<std::vector<Term>> eval_block(const RewriteRule& rule,
                                            const MatchBinding& binding) {
    EvalContext ctx{rule, binding.params};
    std::vector<Term> out;
    if (run_stmts(rule.block, ctx, binding, out) == Flow::Returned) return out;
    return std::nullopt;  // fell off the end: not applicable
}

std::vector<Item> optimize_items(std::vector<Item> items, const RuleScript& script, long cap,
                                 OptimizeStats* stats, const TermAnnotator& annotate) {
    OptimizeStats local;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t pos = 0; pos < items.size() && !progress; ++pos) {
            if (!items[pos].term) continue;
            for (const auto& rule : script.rules) {
                std::optional<std::vector<Term>> replacement;
                auto binding = match_with_sink(items, pos, rule, [&](const MatchBinding& b) {
                    replacement = eval_block(rule, b);
                    return replacement.has_value();
                });
                if (!binding || !replacement) continue;
                // Splice: drop the matched ops, insert the returned
                // composition at the first matched position. Intervening ops
                // are disjoint from every matched qubit, so the block
                // placement preserves semantics.
                for (auto it = binding->positions.rbegin(); it != binding->positions.rend();
                     ++it) {
                    items.erase(items.begin() + *it);
                }
                std::vector<Item> inserted;
                inserted.reserve(replacement->size());
                for (auto& term : *replacement) {
                    if (annotate) annotate(term);
                    Item item;
                    item.term = std::move(term);
                    inserted.push_back(std::move(item));
                }
                items.insert(items.begin() + binding->positions.front(),
                             std::make_move_iterator(inserted.begin()),
                             std::make_move_iterator(inserted.end()));
                ++local.rewrites;
                progress = true;
                break;
            }
        }
        if (local.rewrites >= cap && progress) {
            local.cap_exceeded = true;
            break;
        }
    }
    if (stats) *stats = local;
    return items;
}

ir::Circuit optimize(const ir::Circuit& circuit, const RuleScript& script, long cap,
                     OptimizeStats* stats) {
    std::vector<Item> items;
    items.reserve(circuit.ops.size());
    for (std::size_t k = 0; k < circuit.ops.size(); ++k) {
        Item item;
        item.orig = k;
        if (const auto* g = std::get_if<ir::Gate>(&circuit.ops[k])) {
            item.term = Term{g->name, g->params, g->qubits, {}};
        } else if (std::holds_alternative<ir::Conditional>(circuit.ops[k])) {
            item.all = true;  // classical dependence: fence everything
        } else {
            item.blocked = ir::touched_qubits(circuit.ops[k]);
        }
        items.push_back(std::move(item));
    }
    items = optimize_items(std::move(items), script, cap, stats);
    ir::Circuit out;
    out.qubits = circuit.qubits;
    out.clbits = circuit.clbits;
    out.cregs = circuit.cregs;
    out.ops.reserve(items.size());
    for (const auto& item : items) {
        if (item.term) {
            out.ops.push_back(ir::Gate{item.term->name, item.term->params, item.term->entities});
        } else {
            out.ops.push_back(circuit.ops[item.orig]);
        }
    }
    return out;
}

}  // namespace quditc::rw
