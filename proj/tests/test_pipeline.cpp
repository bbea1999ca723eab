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

#include <iostream>

#include "helpers.hpp"
#include "quditc/bench.hpp"
#include "quditc/pipeline.hpp"
#include "quditc/sim.hpp"

using namespace quditc;

namespace {

pipeline::Options options_for(const std::string& bench_name, const qd::QuditParams& params,
                              bool optimize) {
    pipeline::Options opt;
    opt.params = params;
    opt.optimize = optimize;
    if (params.b == 2) {
        for (const auto& b : bench::corpus()) {
            if (b.name == bench_name && b.ququart_mapping) {
                opt.mapping_json = b.ququart_mapping;
            }
        }
    }
    return opt;
}

int transpiled_xx(const std::string& name, const std::string& qasm, const qd::QuditParams& p,
                  bool optimize) {
    const auto t = pipeline::transpile(qasm, name + ".qasm", options_for(name, p, optimize));
    return t.qudit.count_xx();
}

}  // namespace

TEST_CASE("Bernstein-Vazirani XX counts are structurally forced") {
    const auto bv101 = bench::bernstein_vazirani("101");
    const auto bv10101 = bench::bernstein_vazirani("10101");
    for (bool opt : {false, true}) {
        CHECK(transpiled_xx("bv101", bv101, {2, 1}, opt) == 2);
        CHECK(transpiled_xx("bv101", bv101, {3, 1}, opt) == 2);
        CHECK(transpiled_xx("bv101", bv101, {4, 2}, opt) == 1);
        CHECK(transpiled_xx("bv10101", bv10101, {2, 1}, opt) == 3);
        CHECK(transpiled_xx("bv10101", bv10101, {3, 1}, opt) == 3);
        CHECK(transpiled_xx("bv10101", bv10101, {4, 2}, opt) == 2);
    }
}

TEST_CASE("SWAP-test XX counts match the expected ladder/network structure") {
    const auto st1 = bench::swap_test(1);
    const auto st2 = bench::swap_test(2);
    for (bool opt : {false, true}) {
        CHECK(transpiled_xx("swaptest1", st1, {3, 1}, opt) == 5);
        CHECK(transpiled_xx("swaptest1", st1, {4, 2}, opt) == 4);
        CHECK(transpiled_xx("swaptest2", st2, {3, 1}, opt) == 10);
        CHECK(transpiled_xx("swaptest2", st2, {4, 2}, opt) == 8);
    }
    // qubit-regime counts are reported, not asserted against the paper
    MESSAGE("swap test qubit regime XX: ", transpiled_xx("swaptest1", st1, {2, 1}, true), " / ",
            transpiled_xx("swaptest2", st2, {2, 1}, true));
}

TEST_CASE("optimizer cuts R pulses by at least 40% on every benchmark and regime") {
    for (const auto& b : bench::corpus()) {
        for (const qd::QuditParams params :
             {qd::QuditParams{2, 1}, qd::QuditParams{3, 1}, qd::QuditParams{4, 2}}) {
            std::vector<std::string> warnings;
            auto opts_plain = options_for(b.name, params, false);
            auto opts_tuned = options_for(b.name, params, true);
            opts_plain.warn = [&](const std::string& w) { warnings.push_back(w); };
            opts_tuned.warn = opts_plain.warn;
            const auto plain = pipeline::transpile(b.qasm, b.name, opts_plain);
            const auto tuned = pipeline::transpile(b.qasm, b.name, opts_tuned);
            // the rewrite cap is never hit on the corpus
            CHECK(warnings.empty());
            const int before = plain.qudit.count_r();
            const int after = tuned.qudit.count_r();
            INFO(b.name, " d=", params.d, " b=", params.b, ": R ", before, " -> ", after);
            CHECK(after <= before * 0.6);
            // optimization never adds entanglers
            CHECK(tuned.qudit.count_xx() <= plain.qudit.count_xx());
        }
    }
}

TEST_CASE("a corrupted angle is caught with a large deviation") {
    const auto& b = bench::corpus()[0];  // bv101
    auto t = pipeline::transpile(b.qasm, b.name, options_for(b.name, {3, 1}, true));
    for (auto& op : t.qudit.ops) {
        if (auto* r = std::get_if<qd::ROp>(&op)) {
            r->theta += 0.1;
            break;
        }
    }
    ir::Circuit ref = t.reference;
    std::erase_if(ref.ops,
                  [](const ir::Op& op) { return std::holds_alternative<ir::Measure>(op); });
    const auto rep = sim::check_equivalence(sim::circuit_unitary(t.qudit),
                                            sim::circuit_unitary(ref),
                                            sim::embedding_isometry(t.mapping, {3, 1}),
                                            sim::EquivMode::DiagonalPhase);
    CHECK_FALSE(rep.ok);
    CHECK(rep.max_deviation > 1e-3);
}

TEST_CASE("end-to-end equivalence for every benchmark and regime") {
    for (const auto& b : bench::corpus()) {
        for (const qd::QuditParams params :
             {qd::QuditParams{2, 1}, qd::QuditParams{3, 1}, qd::QuditParams{4, 2}}) {
            for (bool opt : {false, true}) {
                const auto t =
                    pipeline::transpile(b.qasm, b.name, options_for(b.name, params, opt));
                ir::Circuit ref = t.reference;
                std::erase_if(ref.ops, [](const ir::Op& op) {
                    return std::holds_alternative<ir::Measure>(op);
                });
                const auto v = sim::circuit_unitary(ref);
                const auto w = sim::circuit_unitary(t.qudit);
                const auto e = sim::embedding_isometry(t.mapping, params);
                const auto diag =
                    sim::check_equivalence(w, v, e, sim::EquivMode::DiagonalPhase);
                INFO(b.name, " d=", params.d, " opt=", opt, " dev=", diag.max_deviation);
                CHECK(diag.ok);
                const auto global =
                    sim::check_equivalence(w, v, e, sim::EquivMode::GlobalPhase);
                CHECK(global.ok);
            }
        }
    }
}
