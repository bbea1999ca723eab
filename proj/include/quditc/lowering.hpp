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

#include <cmath>
#include <vector>

#include "quditc/ir.hpp"
#include "quditc/qudit.hpp"

// Step 2 of the pipeline: map qubits onto (qudit, slot) pairs and lower the
// ion-IR gate set {rz, r, cz, mcz} into qudit operations {Ph, R, XX}.

namespace quditc::lower {

/// Lowers a measurement-suffix ion-IR circuit. Measures are skipped (the
/// measure map travels in the sidecar); reset/conditional must have been
/// rejected earlier.
qd::Circuit lower(const ir::Circuit& circuit, const qd::QuditParams& params,
                  const qd::Mapping& mapping);

/// Multicontrolled-Z over distinct qudits (b = 1, d >= 3) as the
/// ancilla-level ladder: 2N-3 XX pulses for N = controls+1 qubits.
/// Only theta = pi is realizable in this form.
std::vector<qd::Op> mcz_ladder(const std::vector<int>& controls, int target, int d,
                               double theta = M_PI);

/// CZ between two qudits on their {0,1} levels: one XX(pi/4) pulse plus
/// single-qudit corrections; equals diag(1,1,1,-1) up to a global phase on
/// the qubit block and is the identity whenever either qudit sits on an
/// ancillary level.
std::vector<qd::Op> cz_template(int qudit_a, int qudit_b);

/// Controlled-phase exp(i*theta*x1*...*xk) over qubit wires in ion-IR
/// natives {rz, r, cz}; mcz(qs) = phase_network(qs, pi). Exact.
std::vector<ir::Gate> phase_network(const std::vector<int>& qubits, double theta);

/// Replaces every mcz-family gate with its phase network, leaving the rest
/// of the circuit untouched. The pipeline runs this before lowering when
/// the target has no ancillary levels (d = 2 or b > 1), so the qubit
/// optimizer sees the network internals.
ir::Circuit expand_mcz_networks(const ir::Circuit& circuit);

/// True for ccz/cccz/c4z..c8z applications.
bool is_mcz_gate(const ir::Gate& gate);

/// Inverse of a template op sequence: reversed order, negated angles.
std::vector<qd::Op> inverted(const std::vector<qd::Op>& ops);

inline constexpr int kMaxMczArity = 9;  // cz..c8z

}  // namespace quditc::lower
