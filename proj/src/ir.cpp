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

#include "quditc/ir.hpp"

namespace quditc::ir {

std::vector<int> touched_qubits(const Op& op) {
    if (const auto* g = std::get_if<Gate>(&op)) return g->qubits;
    if (const auto* b = std::get_if<Barrier>(&op)) return b->qubits;
    if (const auto* m = std::get_if<Measure>(&op)) return {m->qubit};
    if (const auto* r = std::get_if<Reset>(&op)) return {r->qubit};
    const auto& c = std::get<Conditional>(op);
    if (const auto* g = std::get_if<Gate>(&c.body)) return g->qubits;
    if (const auto* m = std::get_if<Measure>(&c.body)) return {m->qubit};
    return {std::get<Reset>(c.body).qubit};
}

}  // namespace quditc::ir
