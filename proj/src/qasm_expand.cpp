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

#include <charconv>
#include <cmath>
#include <set>

#include "quditc/qasm.hpp"

namespace quditc::qasm {

namespace {

struct RegisterLayout {
    std::map<std::string, std::pair<int, int>> qregs;  // name -> (offset, size)
    std::map<std::string, std::pair<int, int>> cregs;
    int qubits = 0;
    int clbits = 0;
};

RegisterLayout flatten_registers(const Program& p) {
    RegisterLayout layout;
    for (const auto& [name, size] : p.qregs) {
        layout.qregs[name] = {layout.qubits, size};
        layout.qubits += size;
    }
    for (const auto& [name, size] : p.cregs) {
        layout.cregs[name] = {layout.clbits, size};
        layout.clbits += size;
    }
    return layout;
}

class Expander {
  public:
    Expander(const Program& program, const NativeSet& natives)
        : program_(program), natives_(natives), layout_(flatten_registers(program)) {
        result_.circuit.qubits = layout_.qubits;
        result_.circuit.clbits = layout_.clbits;
        int index = 0;
        for (const auto& [name, size] : program.cregs) {
            result_.circuit.cregs.push_back({name, size, layout_.cregs.at(name).first});
            (void)index;
        }
    }

    ExpandResult run() {
        for (const auto& stmt : program_.body) expand_statement(stmt);
        return std::move(result_);
    }

  private:
    void push(ir::Op op, const SourceSpan& span) {
        result_.circuit.ops.push_back(std::move(op));
        result_.spans.push_back(span);
    }

    // Whole-register arguments broadcast; all of them must agree on size.
    int broadcast_size(const std::vector<Argument>& args, bool quantum,
                       const SourceSpan& span) const {
        int size = -1;
        const auto& regs = quantum ? layout_.qregs : layout_.cregs;
        for (const auto& a : args) {
            if (a.index) continue;
            const int rsize = regs.at(a.reg).second;
            if (size == -1) {
                size = rsize;
            } else if (size != rsize) {
                throw Error("mismatched register sizes in broadcast", span);
            }
        }
        return size == -1 ? 1 : size;
    }

    int flat_index(const Argument& a, bool quantum, int broadcast_k) const {
        const auto& regs = quantum ? layout_.qregs : layout_.cregs;
        const auto& [offset, size] = regs.at(a.reg);
        const int idx = a.index ? *a.index : broadcast_k;
        if (idx >= size) throw Error("index out of range", a.span);
        return offset + idx;
    }

    void expand_statement(const Statement& stmt) {
        if (const auto* call = std::get_if<GateCall>(&stmt)) {
            expand_toplevel_call(*call, std::nullopt);
        } else if (const auto* m = std::get_if<MeasureStmt>(&stmt)) {
            expand_measure(*m, std::nullopt);
        } else if (const auto* b = std::get_if<BarrierStmt>(&stmt)) {
            std::vector<int> qs;
            const int n = broadcast_size(b->args, true, b->span);
            for (const auto& a : b->args) {
                if (a.index) {
                    qs.push_back(flat_index(a, true, 0));
                } else {
                    for (int k = 0; k < n; ++k) qs.push_back(flat_index(a, true, k));
                }
            }
            push(ir::Barrier{std::move(qs)}, b->span);
        } else if (const auto* r = std::get_if<ResetStmt>(&stmt)) {
            expand_reset(*r, std::nullopt);
        } else if (const auto* c = std::get_if<CondStmt>(&stmt)) {
            const int creg_idx = creg_index(c->creg);
            const auto cond = std::make_pair(creg_idx, c->value);
            if (const auto* g = std::get_if<GateCall>(&c->body)) {
                expand_toplevel_call(*g, cond);
            } else if (const auto* m = std::get_if<MeasureStmt>(&c->body)) {
                expand_measure(*m, cond);
            } else {
                expand_reset(std::get<ResetStmt>(c->body), cond);
            }
        }
    }

    int creg_index(const std::string& name) const {
        for (std::size_t k = 0; k < result_.circuit.cregs.size(); ++k) {
            if (result_.circuit.cregs[k].name == name) return static_cast<int>(k);
        }
        throw InternalError("creg lookup after validation");
    }

    void expand_measure(const MeasureStmt& m, std::optional<std::pair<int, long>> cond) {
        std::vector<Argument> all = {m.src, m.dst};
        const bool src_whole = !m.src.index;
        const bool dst_whole = !m.dst.index;
        if (src_whole != dst_whole) {
            throw Error("measure must map register to register or bit to bit", m.span);
        }
        int n = 1;
        if (src_whole) {
            const int qs = layout_.qregs.at(m.src.reg).second;
            const int cs = layout_.cregs.at(m.dst.reg).second;
            if (qs != cs) throw Error("mismatched register sizes in measure", m.span);
            n = qs;
        }
        for (int k = 0; k < n; ++k) {
            ir::Measure meas{flat_index(m.src, true, k), flat_index(m.dst, false, k)};
            if (cond) {
                push(ir::Conditional{cond->first, cond->second, meas}, m.span);
            } else {
                push(meas, m.span);
            }
        }
    }

    void expand_reset(const ResetStmt& r, std::optional<std::pair<int, long>> cond) {
        const int n = r.target.index ? 1 : layout_.qregs.at(r.target.reg).second;
        for (int k = 0; k < n; ++k) {
            ir::Reset reset{flat_index(r.target, true, k)};
            if (cond) {
                push(ir::Conditional{cond->first, cond->second, reset}, r.span);
            } else {
                push(reset, r.span);
            }
        }
    }

    void expand_toplevel_call(const GateCall& call, std::optional<std::pair<int, long>> cond) {
        const int n = broadcast_size(call.args, true, call.span);
        for (int k = 0; k < n; ++k) {
            std::vector<int> qubits;
            qubits.reserve(call.args.size());
            for (const auto& a : call.args) qubits.push_back(flat_index(a, true, k));
            check_distinct(qubits, call.span);
            std::vector<double> params;
            params.reserve(call.params.size());
            for (const auto& e : call.params) params.push_back(eval_checked(e, {}, call.span));
            emit_call(call.name, params, qubits, call.span, cond);
        }
    }

    static void check_distinct(const std::vector<int>& qubits, const SourceSpan& span) {
        std::set<int> s(qubits.begin(), qubits.end());
        if (s.size() != qubits.size()) {
            throw Error("qubit arguments must be pairwise distinct", span);
        }
    }

    double eval_checked(const ExprPtr& e, const std::map<std::string, double>& env,
                        const SourceSpan& span) const {
        const double v = eval_expr(e, env);
        if (!std::isfinite(v)) throw Error("non-numeric parameter (evaluates to non-finite)", span);
        return v;
    }

    void emit_call(const std::string& name, const std::vector<double>& params,
                   const std::vector<int>& qubits, const SourceSpan& span,
                   std::optional<std::pair<int, long>> cond) {
        if (natives_.count(name)) {
            ir::Gate g{name, params, qubits};
            if (cond) {
                push(ir::Conditional{cond->first, cond->second, std::move(g)}, span);
            } else {
                push(std::move(g), span);
            }
            return;
        }
        const GateDef* def = program_.find_gate(name);
        if (!def) throw Error("unknown gate '" + name + "'", span);
        if (def->opaque) {
            throw Error("gate '" + name + "' is opaque but not native to the active runtime",
                        span);
        }
        if (in_progress_.count(name)) {
            throw Error("recursion detected in gate definitions at '" + name + "'", span);
        }
        in_progress_.insert(name);
        std::map<std::string, double> env;
        for (std::size_t i = 0; i < def->params.size(); ++i) env[def->params[i]] = params[i];
        std::map<std::string, int> qmap;
        for (std::size_t i = 0; i < def->qargs.size(); ++i) qmap[def->qargs[i]] = qubits[i];
        for (const auto& item : def->body) {
            if (const auto* b = std::get_if<BarrierStmt>(&item)) {
                std::vector<int> qs;
                for (const auto& a : b->args) qs.push_back(qmap.at(a.reg));
                if (cond) throw Error("barrier cannot be conditional", b->span);
                push(ir::Barrier{std::move(qs)}, b->span);
                continue;
            }
            const auto& inner = std::get<GateCall>(item);
            std::vector<double> inner_params;
            inner_params.reserve(inner.params.size());
            for (const auto& e : inner.params) {
                inner_params.push_back(eval_checked(e, env, inner.span));
            }
            std::vector<int> inner_qubits;
            inner_qubits.reserve(inner.args.size());
            for (const auto& a : inner.args) inner_qubits.push_back(qmap.at(a.reg));
            emit_call(inner.name, inner_params, inner_qubits, inner.span, cond);
        }
        in_progress_.erase(name);
    }

    const Program& program_;
    const NativeSet& natives_;
    RegisterLayout layout_;
    ExpandResult result_;
    std::set<std::string> in_progress_;
};

}  // namespace

ExpandResult expand(const Program& program, const NativeSet& natives) {
    return Expander(program, natives).run();
}

void reject_ion_unsupported(const Program& program) {
    for (const auto& stmt : program.body) {
        if (const auto* r = std::get_if<ResetStmt>(&stmt)) {
            throw Error("'reset' is not executable on the ion target", r->span);
        }
        if (const auto* c = std::get_if<CondStmt>(&stmt)) {
            throw Error("conditional 'if' is not executable on the ion target", c->span);
        }
    }
}

void check_measurement_suffix(const ExpandResult& expanded) {
    std::set<int> measured;
    for (std::size_t k = 0; k < expanded.circuit.ops.size(); ++k) {
        const auto& op = expanded.circuit.ops[k];
        if (const auto* m = std::get_if<ir::Measure>(&op)) {
            measured.insert(m->qubit);
            continue;
        }
        for (int q : ir::touched_qubits(op)) {
            if (measured.count(q)) {
                throw Error("qubit " + std::to_string(q) +
                                " is used after measurement; the ion target supports final "
                                "measurement only",
                            expanded.spans[k]);
            }
        }
    }
}

// ---- printer ----------------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    // Keep gate parameters parseable as reals or integers either way.
    return s;
}

namespace {

std::pair<std::string, int> clbit_location(const ir::Circuit& c, int clbit) {
    for (const auto& creg : c.cregs) {
        if (clbit >= creg.offset && clbit < creg.offset + creg.size) {
            return {creg.name, clbit - creg.offset};
        }
    }
    throw InternalError("clbit outside every creg");
}

void print_gate(std::string& out, const ir::Circuit& c, const ir::Gate& g) {
    out += g.name;
    if (!g.params.empty()) {
        out += '(';
        for (std::size_t i = 0; i < g.params.size(); ++i) {
            if (i) out += ", ";
            out += format_double(g.params[i]);
        }
        out += ')';
    }
    out += ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        if (i) out += ", ";
        out += "q[" + std::to_string(g.qubits[i]) + "]";
    }
    (void)c;
}

void print_op(std::string& out, const ir::Circuit& c, const ir::Op& op) {
    if (const auto* g = std::get_if<ir::Gate>(&op)) {
        print_gate(out, c, *g);
    } else if (const auto* b = std::get_if<ir::Barrier>(&op)) {
        out += "barrier ";
        for (std::size_t i = 0; i < b->qubits.size(); ++i) {
            if (i) out += ", ";
            out += "q[" + std::to_string(b->qubits[i]) + "]";
        }
    } else if (const auto* m = std::get_if<ir::Measure>(&op)) {
        const auto [name, idx] = clbit_location(c, m->clbit);
        out += "measure q[" + std::to_string(m->qubit) + "] -> " + name + "[" +
               std::to_string(idx) + "]";
    } else if (const auto* r = std::get_if<ir::Reset>(&op)) {
        out += "reset q[" + std::to_string(r->qubit) + "]";
    } else {
        const auto& cond = std::get<ir::Conditional>(op);
        out += "if (" + c.cregs[cond.creg].name + " == " + std::to_string(cond.value) + ") ";
        if (const auto* g = std::get_if<ir::Gate>(&cond.body)) {
            print_gate(out, c, *g);
        } else if (const auto* m = std::get_if<ir::Measure>(&cond.body)) {
            const auto [name, idx] = clbit_location(c, m->clbit);
            out += "measure q[" + std::to_string(m->qubit) + "] -> " + name + "[" +
                   std::to_string(idx) + "]";
        } else {
            out += "reset q[" + std::to_string(std::get<ir::Reset>(cond.body).qubit) + "]";
        }
    }
    out += ";\n";
}

}  // namespace

std::string print_qasm(const ir::Circuit& c, const NativeSet& natives) {
    std::string out = "OPENQASM 2.0;\n";
    std::set<std::string> used;
    for (const auto& op : c.ops) {
        if (const auto* g = std::get_if<ir::Gate>(&op)) used.insert(g->name);
        if (const auto* cond = std::get_if<ir::Conditional>(&op)) {
            if (const auto* g = std::get_if<ir::Gate>(&cond->body)) used.insert(g->name);
        }
    }
    for (const auto& name : used) {
        auto it = natives.find(name);
        if (it == natives.end()) throw Error("cannot print non-native gate '" + name + "'");
        out += "opaque " + name;
        if (it->second.params > 0) {
            out += '(';
            for (int i = 0; i < it->second.params; ++i) {
                if (i) out += ", ";
                out += "p" + std::to_string(i);
            }
            out += ')';
        }
        out += ' ';
        for (int i = 0; i < it->second.arity; ++i) {
            if (i) out += ", ";
            out += "a" + std::to_string(i);
        }
        out += ";\n";
    }
    if (c.qubits > 0) out += "qreg q[" + std::to_string(c.qubits) + "];\n";
    for (const auto& creg : c.cregs) {
        out += "creg " + creg.name + "[" + std::to_string(creg.size) + "];\n";
    }
    for (const auto& op : c.ops) print_op(out, c, op);
    return out;
}

}  // namespace quditc::qasm
