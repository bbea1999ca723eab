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

#include "quditc/bench.hpp"

#include <cmath>
#include <sstream>

#include "quditc/diag.hpp"

namespace quditc::bench {

namespace {

std::string header(int qubits, int clbits) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << qubits << "];\n";
    if (clbits > 0) out << "creg c[" << clbits << "];\n";
    return out.str();
}

void check_bits(const std::string& bits) {
    if (bits.empty()) throw Error("bit string must be non-empty");
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error("bit string must be over {0,1}");
    }
}

const char* mcx_name(int controls) {
    switch (controls) {
        case 1: return "cx";
        case 2: return "ccx";
        case 3: return "c3x";
        case 4: return "c4x";
        default: throw Error("no bundled mcx for " + std::to_string(controls) + " controls");
    }
}

const char* mcz_name(int controls) {
    switch (controls) {
        case 1: return "cz";
        case 2: return "ccz";
        case 3: return "cccz";
        case 4: return "c4z";
        default: throw Error("no bundled mcz for " + std::to_string(controls) + " controls");
    }
}

void gate_over(std::ostringstream& out, const char* name, int first, int count) {
    out << name << " ";
    for (int k = 0; k < count; ++k) out << (k ? ", " : "") << "q[" << first + k << "]";
    out << ";\n";
}

}  // namespace

std::string bernstein_vazirani(const std::string& bits) {
    check_bits(bits);
    const int n = static_cast<int>(bits.size());
    std::ostringstream out;
    out << header(n + 1, n);
    out << "x q[" << n << "];\n";
    for (int k = 0; k <= n; ++k) out << "h q[" << k << "];\n";
    for (int k = 0; k < n; ++k) {
        if (bits[k] == '1') out << "cx q[" << k << "], q[" << n << "];\n";
    }
    for (int k = 0; k < n; ++k) out << "h q[" << k << "];\n";
    for (int k = 0; k < n; ++k) out << "measure q[" << k << "] -> c[" << k << "];\n";
    return out.str();
}

std::string grover(const std::string& target) {
    check_bits(target);
    const int n = static_cast<int>(target.size());
    const int anc = n;
    const int iterations =
        std::max(1, static_cast<int>(std::floor(M_PI / 4 * std::sqrt(std::pow(2.0, n)))));
    std::ostringstream out;
    out << header(n + 1, n);
    out << "x q[" << anc << "];\n";
    for (int k = 0; k <= n; ++k) out << "h q[" << k << "];\n";
    for (int it = 0; it < iterations; ++it) {
        // oracle: flip the ancilla when the register holds `target`
        for (int k = 0; k < n; ++k) {
            if (target[k] == '0') out << "x q[" << k << "];\n";
        }
        gate_over(out, mcx_name(n), 0, n + 1);
        for (int k = 0; k < n; ++k) {
            if (target[k] == '0') out << "x q[" << k << "];\n";
        }
        // diffuser
        for (int k = 0; k < n; ++k) out << "h q[" << k << "];\n";
        for (int k = 0; k < n; ++k) out << "x q[" << k << "];\n";
        gate_over(out, mcz_name(n - 1), 0, n);
        for (int k = 0; k < n; ++k) out << "x q[" << k << "];\n";
        for (int k = 0; k < n; ++k) out << "h q[" << k << "];\n";
    }
    for (int k = 0; k < n; ++k) out << "measure q[" << k << "] -> c[" << k << "];\n";
    return out.str();
}

std::string swap_test(int state_qubits) {
    if (state_qubits < 1) throw Error("swap test needs at least one state qubit");
    const int n = state_qubits;
    std::ostringstream out;
    out << header(1 + 2 * n, 1);
    // orthogonal states |0...0> and |1...1>
    for (int k = 0; k < n; ++k) out << "x q[" << 1 + n + k << "];\n";
    out << "h q[0];\n";
    for (int k = 0; k < n; ++k) {
        out << "cswap q[0], q[" << 1 + k << "], q[" << 1 + n + k << "];\n";
    }
    out << "h q[0];\n";
    out << "measure q[0] -> c[0];\n";
    return out.str();
}

const std::vector<Benchmark>& corpus() {
    static const std::vector<Benchmark> list = [] {
        std::vector<Benchmark> v;
        v.push_back({"bv101", bernstein_vazirani("101"), std::nullopt});
        v.push_back({"bv10101", bernstein_vazirani("10101"), std::nullopt});
        v.push_back({"grover000", grover("000"), std::nullopt});
        v.push_back({"grover0000", grover("0000"), std::nullopt});
        v.push_back({"swaptest1", swap_test(1),
                     std::string("{\"qubits\": [{\"qudit\": 0, \"slot\": 0}, "
                                 "{\"qudit\": 1, \"slot\": 0}, {\"qudit\": 1, \"slot\": 1}]}\n")});
        v.push_back({"swaptest2", swap_test(2),
                     std::string("{\"qubits\": [{\"qudit\": 0, \"slot\": 0}, "
                                 "{\"qudit\": 1, \"slot\": 0}, {\"qudit\": 2, \"slot\": 0}, "
                                 "{\"qudit\": 1, \"slot\": 1}, {\"qudit\": 2, \"slot\": 1}]}\n")});
        return v;
    }();
    return list;
}

}  // namespace quditc::bench
