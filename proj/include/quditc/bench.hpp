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
#include <vector>

// The benchmark corpus: QASM generators for the Bernstein-Vazirani, Grover,
// and SWAP-test circuits, plus the ququart mappings that co-locate the
// interacting qubit pairs.

namespace quditc::bench {

/// Data qubits carry the string (q0 = leftmost bit), one |-> ancilla at the
/// end; cx from every 1-bit onto the ancilla.
std::string bernstein_vazirani(const std::string& bits);

/// n data qubits + one |-> ancilla; oracle marks `target` via a
/// multicontrolled X, diffuser reflects about the mean.
std::string grover(const std::string& target);

/// q0 ancilla; two `state_qubits`-sized registers prepared orthogonally
/// (|0..0> vs |1..1>), compared with controlled swaps.
std::string swap_test(int state_qubits);

struct Benchmark {
    std::string name;
    std::string qasm;
    /// Ququart mapping (b=2) pairing the heavily-interacting qubits, when
    /// the default placement is not the intended Table-style layout.
    std::optional<std::string> ququart_mapping;
};

const std::vector<Benchmark>& corpus();

}  // namespace quditc::bench
