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

#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "quditc/qasm.hpp"
#include "quditc/runtime.hpp"

using namespace quditc;
using test::kPi;

namespace {

const qasm::NativeSet kIonIrNatives = {
    {"rz", {"rz", 1, 1}}, {"r", {"r", 2, 1}},     {"cz", {"cz", 0, 2}},
    {"ccz", {"ccz", 0, 3}}, {"cccz", {"cccz", 0, 4}},
};

std::string wrap(const std::string& body) { return "OPENQASM 2.0;\n" + body; }

}  // namespace

TEST_CASE("parse_qasm: minimal programs and spans") {
    SUBCASE("registers and gate calls") {
        auto p = qasm::parse_qasm(wrap("qreg q[2];\nopaque h a;\nh q[0];\n"), "t.qasm");
        CHECK(p.qregs.size() == 1);
        CHECK(p.qregs[0].second == 2);
        CHECK(p.body.size() == 1);
    }
    SUBCASE("index out of range is a semantic error with a span") {
        try {
            qasm::parse_qasm(wrap("qreg q[2];\nopaque x a;\nx q[5];\n"), "t.qasm");
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("out of range") != std::string::npos);
            REQUIRE(e.span().has_value());
            CHECK(e.span()->line == 4);
        }
    }
    SUBCASE("gate definition over the ion natives parses with two body calls") {
        auto p = qasm::parse_qasm(wrap("opaque r(the, phi) q0;\nopaque rz(the) q0;\n"
                                       "gate h q0 { r(pi/2, -pi/2) q0; rz(pi) q0; }\n"),
                                  "t.qasm");
        const auto* def = p.find_gate("h");
        REQUIRE(def != nullptr);
        CHECK(def->qargs.size() == 1);
        CHECK(def->body.size() == 2);
        CHECK_FALSE(def->opaque);
    }
    SUBCASE("duplicate register names are rejected") {
        CHECK_THROWS_AS(qasm::parse_qasm(wrap("qreg q[2]; creg q[2];"), "t.qasm"), Error);
    }
    SUBCASE("gates may only reference earlier definitions") {
        CHECK_THROWS_AS(
            qasm::parse_qasm(wrap("gate a q0 { b q0; }\ngate b q0 { a q0; }\n"), "t.qasm"),
            Error);
    }
    SUBCASE("expression grammar: functions, power, unary minus") {
        auto p = qasm::parse_qasm(
            wrap("qreg q[1];\nopaque rz(t) a;\nrz(sin(pi/4)^2 + -ln(exp(1))/2) q[0];\n"),
            "t.qasm");
        auto expanded = qasm::expand(p, kIonIrNatives);
        const auto& g = std::get<ir::Gate>(expanded.circuit.ops[0]);
        CHECK(g.params[0] == doctest::Approx(0.5 - 0.5).epsilon(1e-12));
    }
}

TEST_CASE("expand: recursion to natives, broadcast, errors") {
    SUBCASE("cx expands through h and cz to the native set") {
        const auto& runtime = rt::load_runtime(rt::kIonIr);
        auto p = qasm::parse_qasm(
            wrap("include \"qelib1.inc\";\nqreg q[2];\ncx q[0], q[1];\n"), "t.qasm",
            runtime.include_resolver());
        auto expanded = qasm::expand(p, runtime.natives);
        REQUIRE(expanded.circuit.ops.size() == 5);  // h = r,rz twice + cz
        const char* names[] = {"r", "rz", "cz", "r", "rz"};
        for (int k = 0; k < 5; ++k) {
            CHECK(std::get<ir::Gate>(expanded.circuit.ops[k]).name == names[k]);
        }
        // multiset of touched qubits is preserved
        CHECK(std::get<ir::Gate>(expanded.circuit.ops[2]).qubits == std::vector<int>{0, 1});
    }
    SUBCASE("u3(0,0,0) becomes three zero-angle natives") {
        const auto& runtime = rt::load_runtime(rt::kIonIr);
        auto p = qasm::parse_qasm(wrap("include \"qelib1.inc\";\nqreg q[1];\nu3(0,0,0) q[0];\n"),
                                  "t.qasm", runtime.include_resolver());
        auto expanded = qasm::expand(p, runtime.natives);
        REQUIRE(expanded.circuit.ops.size() == 3);
        for (const auto& op : expanded.circuit.ops) {
            CHECK(std::get<ir::Gate>(op).params[0] == 0.0);  // rotation angle
        }
    }
    SUBCASE("whole-register broadcast") {
        auto p = qasm::parse_qasm(wrap("qreg q[3];\nopaque x a;\nx q;\n"), "t.qasm");
        auto expanded = qasm::expand(p, {{"x", {"x", 0, 1}}});
        CHECK(expanded.circuit.ops.size() == 3);
    }
    SUBCASE("cycle detection on a hand-built cyclic program") {
        qasm::Program p;
        p.qregs = {{"q", 1}};
        qasm::GateDef a;
        a.name = "a";
        a.qargs = {"t"};
        qasm::GateCall call_b;
        call_b.name = "b";
        call_b.args = {{"t", std::nullopt, {}}};
        a.body.push_back(call_b);
        qasm::GateDef b = a;
        b.name = "b";
        std::get<qasm::GateCall>(b.body[0]).name = "a";
        p.gatedefs = {a, b};
        p.gate_index = {{"a", 0}, {"b", 1}};
        qasm::GateCall top;
        top.name = "a";
        top.args = {{"q", 0, {}}};
        p.body.push_back(top);
        CHECK_THROWS_WITH_AS(static_cast<void>(qasm::expand(p, {})),
                             doctest::Contains("recursion"), Error);
    }
    SUBCASE("duplicate qubit arguments are rejected") {
        auto p = qasm::parse_qasm(wrap("qreg q[2];\nopaque cz a, b;\ncz q[1], q[1];\n"),
                                  "t.qasm");
        CHECK_THROWS_AS(static_cast<void>(qasm::expand(p, kIonIrNatives)), Error);
    }
}

TEST_CASE("reset/conditional carried and rejected for ion targets") {
    auto p = qasm::parse_qasm(
        wrap("qreg q[1]; creg c[1];\nopaque x a;\nreset q[0];\nif (c == 1) x q[0];\n"),
        "t.qasm");
    auto expanded = qasm::expand(p, {{"x", {"x", 0, 1}}});
    CHECK(std::holds_alternative<ir::Reset>(expanded.circuit.ops[0]));
    CHECK(std::holds_alternative<ir::Conditional>(expanded.circuit.ops[1]));
    CHECK_THROWS_WITH_AS(qasm::reject_ion_unsupported(p), doctest::Contains("reset"), Error);
}

TEST_CASE("measurement must be a suffix per qubit") {
    const auto& runtime = rt::load_runtime(rt::kIonIr);
    SUBCASE("measure then gate on the same qubit is rejected") {
        auto p = qasm::parse_qasm(wrap("include \"qelib1.inc\";\nqreg q[1]; creg c[1];\n"
                                       "measure q[0] -> c[0];\nx q[0];\n"),
                                  "t.qasm", runtime.include_resolver());
        auto expanded = qasm::expand(p, runtime.natives);
        CHECK_THROWS_WITH_AS(qasm::check_measurement_suffix(expanded),
                             doctest::Contains("measurement"), Error);
    }
    SUBCASE("gates on other qubits after a measure are fine") {
        auto p = qasm::parse_qasm(wrap("include \"qelib1.inc\";\nqreg q[2]; creg c[1];\n"
                                       "measure q[0] -> c[0];\nx q[1];\n"),
                                  "t.qasm", runtime.include_resolver());
        CHECK_NOTHROW(qasm::check_measurement_suffix(qasm::expand(p, runtime.natives)));
    }
}

TEST_CASE("expansion touches exactly the qubits the source statements touch") {
    const auto& runtime = rt::load_runtime(rt::kIonIr);
    const std::string src = wrap(
        "include \"qelib1.inc\";\nqreg q[4];\n"
        "h q[1];\nccx q[0], q[2], q[3];\ncswap q[3], q[1], q[0];\nswap q[2], q[3];\n");
    auto p = qasm::parse_qasm(src, "t.qasm", runtime.include_resolver());
    auto expanded = qasm::expand(p, runtime.natives);
    std::set<int> touched;
    for (const auto& op : expanded.circuit.ops) {
        for (int q : ir::touched_qubits(op)) touched.insert(q);
    }
    CHECK(touched == std::set<int>{0, 1, 2, 3});
    // per-statement: a call on {0,2,3} expands to ops within {0,2,3}
    qasm::Program single = qasm::parse_qasm(
        wrap("include \"qelib1.inc\";\nqreg q[4];\nccx q[0], q[2], q[3];\n"), "t.qasm",
        runtime.include_resolver());
    std::set<int> sub;
    for (const auto& op : qasm::expand(single, runtime.natives).circuit.ops) {
        for (int q : ir::touched_qubits(op)) sub.insert(q);
    }
    CHECK(sub == std::set<int>{0, 2, 3});
}

TEST_CASE("printer round-trip: parse(print(ir)) == ir gate-for-gate") {
    std::mt19937_64 rng(5);
    const qasm::NativeSet natives = {{"rz", {"rz", 1, 1}}, {"r", {"r", 2, 1}},
                                     {"cz", {"cz", 0, 2}}};
    for (int trial = 0; trial < 20; ++trial) {
        auto circuit = test::random_qubit_circuit(rng, 3, 25);
        circuit.clbits = 2;
        circuit.cregs = {{"c", 2, 0}};
        circuit.ops.push_back(ir::Barrier{{0, 2}});
        circuit.ops.push_back(ir::Measure{0, 1});
        const std::string text = qasm::print_qasm(circuit, natives);
        auto reparsed = qasm::parse_qasm(text, "rt.qasm");
        auto expanded = qasm::expand(reparsed, natives);
        CHECK(expanded.circuit == circuit);
    }
}
