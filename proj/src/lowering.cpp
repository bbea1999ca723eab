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

#include "quditc/lowering.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace quditc::lower {

namespace {

constexpr double kPi = M_PI;
constexpr double kHalfPi = M_PI / 2;

using qd::Op;
using qd::PhOp;
using qd::ROp;
using qd::XXOp;

void append(std::vector<Op>& ops, std::vector<Op> tail) {
    for (auto& op : tail) ops.push_back(std::move(op));
}

// ---- single-XX controlled-level templates ---------------------------------
//
// The building block is exp(-i*(pi/2) * P_A (x) sigma_x^{12}_B) followed by a
// level-swap pulse on B. With P_A a sigma_z-like observable that is zero on
// the trigger level u, the composite is a monomial matrix whose permutation
// part swaps B's levels 1<->2 exactly when A sits on u; the residual +/-i
// phases on the other branches cancel against the mirrored inverse ladder.
//
// Conjugations used (verified by the oracle tests):
//   R^{01}(-pi/2, pi/2):  sigma_x^{01} -> sigma_z^{01}
//   swap pulse R^{ab}(pi, pi/2):  |a> -> |b>, |b> -> -|a>

std::vector<Op> ladder_cx(int ctrl, int tgt, bool ctrl_on_level_1) {
    std::vector<Op> ops;
    // pre-conjugation: bring sigma_x^{01} of each side onto P_A / sigma_x^{12}
    if (ctrl_on_level_1) ops.push_back(ROp{ctrl, 1, 2, -kPi, kHalfPi});
    ops.push_back(ROp{ctrl, 0, 1, kHalfPi, kHalfPi});
    ops.push_back(ROp{tgt, 0, 2, -kPi, kHalfPi});
    ops.push_back(qd::make_xx(ctrl, tgt, 0, 1, 0, 1, kHalfPi));
    ops.push_back(ROp{ctrl, 0, 1, -kHalfPi, kHalfPi});
    if (ctrl_on_level_1) ops.push_back(ROp{ctrl, 1, 2, kPi, kHalfPi});
    ops.push_back(ROp{tgt, 0, 2, kPi, kHalfPi});
    // flag pulse
    ops.push_back(ROp{tgt, 1, 2, kPi, kHalfPi});
    return ops;
}

// CZ^{2|1}: -1 exactly on |2>_A |1>_B, identity on every other level pair
// with B in {0,1}. One XX pulse; only diagonal junk on B = 2, which the
// ladder never populates on the target side.
std::vector<Op> ladder_central_cz(int ctrl, int tgt) {
    std::vector<Op> ops;
    ops.push_back(ROp{ctrl, 0, 1, kHalfPi, kHalfPi});
    ops.push_back(ROp{tgt, 0, 1, kHalfPi, kHalfPi});
    ops.push_back(qd::make_xx(ctrl, tgt, 0, 1, 0, 1, -kHalfPi));
    ops.push_back(ROp{ctrl, 0, 1, -kHalfPi, kHalfPi});
    ops.push_back(ROp{tgt, 0, 1, -kHalfPi, kHalfPi});
    ops.push_back(PhOp{ctrl, 0, -kHalfPi});
    ops.push_back(PhOp{ctrl, 1, kHalfPi});
    ops.push_back(PhOp{tgt, 1, kPi});
    return ops;
}

}  // namespace

std::vector<Op> cz_template(int qudit_a, int qudit_b) {
    std::vector<Op> ops;
    ops.push_back(ROp{qudit_a, 0, 1, -kHalfPi, kHalfPi});
    ops.push_back(ROp{qudit_b, 0, 1, -kHalfPi, kHalfPi});
    ops.push_back(qd::make_xx(qudit_a, qudit_b, 0, 1, 0, 1, kPi / 4));
    ops.push_back(ROp{qudit_a, 0, 1, kHalfPi, kHalfPi});
    ops.push_back(ROp{qudit_b, 0, 1, kHalfPi, kHalfPi});
    ops.push_back(PhOp{qudit_a, 1, -kHalfPi});
    ops.push_back(PhOp{qudit_b, 1, -kHalfPi});
    return ops;
}

std::vector<Op> inverted(const std::vector<Op>& ops) {
    std::vector<Op> out;
    out.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        Op op = *it;
        if (auto* ph = std::get_if<PhOp>(&op)) {
            ph->theta = -ph->theta;
        } else if (auto* r = std::get_if<ROp>(&op)) {
            r->theta = -r->theta;
        } else if (auto* xx = std::get_if<XXOp>(&op)) {
            xx->theta = -xx->theta;
        }
        out.push_back(std::move(op));
    }
    return out;
}

std::vector<Op> mcz_ladder(const std::vector<int>& controls, int target, int d, double theta) {
    if (d < 3) throw Error("mcz ladder requires d >= 3");
    if (controls.empty()) throw Error("mcz ladder requires at least one control");
    // The single-XX central gate realizes the controlled phase only at pi
    // (mod 2pi); any other angle needs two entanglers per level pair.
    if (std::abs(std::remainder(theta - kPi, 2 * kPi)) > 1e-12) {
        throw Error("mcz ladder supports theta = pi only");
    }
    {
        std::set<int> distinct(controls.begin(), controls.end());
        distinct.insert(target);
        if (distinct.size() != controls.size() + 1) {
            throw Error("mcz ladder requires pairwise distinct qudits");
        }
    }

    std::vector<Op> ops;
    if (controls.size() == 1) {
        return cz_template(controls[0], target);
    }
    // down: flag "all ones so far" onto level 2 of the next control
    std::vector<Op> down;
    append(down, ladder_cx(controls[0], controls[1], /*ctrl_on_level_1=*/true));
    for (std::size_t k = 1; k + 1 < controls.size(); ++k) {
        append(down, ladder_cx(controls[k], controls[k + 1], /*ctrl_on_level_1=*/false));
    }
    append(ops, down);
    append(ops, ladder_central_cz(controls.back(), target));
    append(ops, inverted(down));
    return ops;
}

std::vector<ir::Gate> phase_network(const std::vector<int>& qubits, double theta) {
    std::vector<ir::Gate> out;
    auto rz = [&](int q, double a) { out.push_back({"rz", {a}, {q}}); };
    auto h = [&](int q) {
        out.push_back({"r", {kHalfPi, -kHalfPi}, {q}});
        rz(q, kPi);
    };
    auto cx = [&](int c, int t) {
        h(t);
        out.push_back({"cz", {}, {c, t}});
        h(t);
    };

    const bool is_pi = std::abs(theta - kPi) < 1e-15;
    if (qubits.size() == 1) {
        rz(qubits[0], theta);
        return out;
    }
    if (qubits.size() == 2) {
        if (is_pi) {
            out.push_back({"cz", {}, {qubits[0], qubits[1]}});
            return out;
        }
        const auto [a, b] = std::pair{qubits[0], qubits[1]};
        rz(a, theta / 2);
        rz(b, theta / 2);
        cx(a, b);
        rz(b, -theta / 2);
        cx(a, b);
        return out;
    }
    if (qubits.size() == 3 && is_pi) {
        // Toffoli-equivalent 6-cz network with T-phase staircase.
        const auto [a, b, c] = std::tuple{qubits[0], qubits[1], qubits[2]};
        const double t = kPi / 4;
        cx(b, c);
        rz(c, -t);
        cx(a, c);
        rz(c, t);
        cx(b, c);
        rz(c, -t);
        cx(a, c);
        rz(b, t);
        rz(c, t);
        cx(a, b);
        rz(a, t);
        rz(b, -t);
        cx(a, b);
        return out;
    }
    // x_{k-1} * x_k = (x_{k-1} + x_k - (x_{k-1} XOR x_k)) / 2
    std::vector<int> head(qubits.begin(), qubits.end() - 1);
    std::vector<int> mixed(qubits.begin(), qubits.end() - 2);
    mixed.push_back(qubits.back());
    const int xk1 = qubits[qubits.size() - 2];
    const int xk = qubits.back();

    auto part = phase_network(head, theta / 2);
    out.insert(out.end(), part.begin(), part.end());
    part = phase_network(mixed, theta / 2);
    out.insert(out.end(), part.begin(), part.end());
    cx(xk1, xk);
    part = phase_network(mixed, -theta / 2);
    out.insert(out.end(), part.begin(), part.end());
    cx(xk1, xk);
    return out;
}

namespace {

class Lowerer {
  public:
    Lowerer(const qd::QuditParams& params, const qd::Mapping& mapping)
        : params_(params), mapping_(mapping) {
        params_.validate();
        if (params_.b > 2) {
            throw Error("lowering is defined for b = 1 or b = 2 (got b=" +
                        std::to_string(params_.b) + ")");
        }
        mapping_.validate(params_);
    }

    qd::Circuit run(const ir::Circuit& circuit) {
        if (circuit.qubits > mapping_.qubits()) {
            throw Error("mapping covers " + std::to_string(mapping_.qubits()) +
                        " qubits but the circuit uses " + std::to_string(circuit.qubits));
        }
        out_.qudits = mapping_.qudit_count;
        out_.levels = params_.d;
        for (const auto& op : circuit.ops) lower_op(op);
        out_.validate();
        return std::move(out_);
    }

  private:
    void lower_op(const ir::Op& op) {
        if (const auto* g = std::get_if<ir::Gate>(&op)) {
            lower_gate(*g);
        } else if (const auto* b = std::get_if<ir::Barrier>(&op)) {
            std::set<int> qudits;
            for (int q : b->qubits) qudits.insert(mapping_.qudit_of[q]);
            out_.ops.push_back(qd::BarrierOp{{qudits.begin(), qudits.end()}});
        } else if (std::holds_alternative<ir::Measure>(op)) {
            // measurement mapping lives in the sidecar
        } else {
            throw Error("reset/conditional cannot be lowered to the ion target");
        }
    }

    void lower_gate(const ir::Gate& g) {
        if (g.name == "r" && g.params.size() == 2 && g.qubits.size() == 1) {
            lower_r(g.qubits[0], g.params[0], g.params[1]);
        } else if (g.name == "rz" && g.params.size() == 1 && g.qubits.size() == 1) {
            lower_rz(g.qubits[0], g.params[0]);
        } else if (g.name == "cz" && g.qubits.size() == 2) {
            lower_cz(g.qubits[0], g.qubits[1]);
        } else if (is_mcz_gate(g)) {
            lower_mcz(g.qubits);
        } else {
            throw Error("cannot lower gate '" + g.name +
                        "'; expected the ion-IR native set {rz, r, cz, mcz}");
        }
    }

    void lower_r(int qubit, double theta, double phi) {
        const int qd = mapping_.qudit_of[qubit];
        if (params_.b == 1) {
            out_.ops.push_back(ROp{qd, 0, 1, theta, phi});
            return;
        }
        if (mapping_.slot_of[qubit] == 0) {
            out_.ops.push_back(ROp{qd, 0, 1, theta, phi});
            out_.ops.push_back(ROp{qd, 2, 3, theta, phi});
        } else {
            out_.ops.push_back(ROp{qd, 0, 2, theta, phi});
            out_.ops.push_back(ROp{qd, 1, 3, theta, phi});
        }
    }

    void lower_rz(int qubit, double theta) {
        const int qd = mapping_.qudit_of[qubit];
        if (params_.b == 1) {
            out_.ops.push_back(PhOp{qd, 1, theta});
            return;
        }
        if (mapping_.slot_of[qubit] == 0) {
            out_.ops.push_back(PhOp{qd, 1, theta});
            out_.ops.push_back(PhOp{qd, 3, theta});
        } else {
            out_.ops.push_back(PhOp{qd, 2, theta});
            out_.ops.push_back(PhOp{qd, 3, theta});
        }
    }

    void lower_cz(int qn, int qm) {
        const int a = mapping_.qudit_of[qn];
        const int b = mapping_.qudit_of[qm];
        if (params_.b == 1) {
            append(out_.ops, cz_template(a, b));
            return;
        }
        if (a == b) {
            out_.ops.push_back(PhOp{a, 3, kPi});
            return;
        }
        const int i = 1 << mapping_.slot_of[qn];
        const int j = 1 << mapping_.slot_of[qm];
        out_.ops.push_back(qd::make_xx(a, b, i, 3, j, 3, kPi));
    }

    void lower_mcz(const std::vector<int>& qubits) {
        if (static_cast<int>(qubits.size()) > kMaxMczArity) {
            throw Error("unsupported mcz arity " + std::to_string(qubits.size()) +
                        " (network table covers up to " + std::to_string(kMaxMczArity) + ")");
        }
        if (params_.b == 1 && params_.d >= 3) {
            std::vector<int> qudits;
            qudits.reserve(qubits.size());
            for (int q : qubits) qudits.push_back(mapping_.qudit_of[q]);
            std::vector<int> controls(qudits.begin(), qudits.end() - 1);
            append(out_.ops, mcz_ladder(controls, qudits.back(), params_.d));
            return;
        }
        // d = 2^b: no ancillary levels; fall back to the qubit network and
        // lower each emitted gate (same-qudit cz pairs become plain phases).
        for (const auto& g : phase_network(qubits, kPi)) lower_gate(g);
    }

    qd::QuditParams params_;
    qd::Mapping mapping_;
    qd::Circuit out_;
};

}  // namespace

qd::Circuit lower(const ir::Circuit& circuit, const qd::QuditParams& params,
                  const qd::Mapping& mapping) {
    return Lowerer(params, mapping).run(circuit);
}

bool is_mcz_gate(const ir::Gate& g) {
    if (g.qubits.size() < 3 || !g.params.empty()) return false;
    const std::string& n = g.name;
    if (n == "ccz" || n == "cccz") return true;
    return n.size() >= 3 && n[0] == 'c' && n.back() == 'z' &&
           std::all_of(n.begin() + 1, n.end() - 1,
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

ir::Circuit expand_mcz_networks(const ir::Circuit& circuit) {
    ir::Circuit out;
    out.qubits = circuit.qubits;
    out.clbits = circuit.clbits;
    out.cregs = circuit.cregs;
    for (const auto& op : circuit.ops) {
        const auto* g = std::get_if<ir::Gate>(&op);
        if (!g || !is_mcz_gate(*g)) {
            out.ops.push_back(op);
            continue;
        }
        for (auto& gate : phase_network(g->qubits, kPi)) out.ops.push_back(std::move(gate));
    }
    return out;
}

}  // namespace quditc::lower
