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

#include <map>

#include "helpers.hpp"
#include "quditc/lowering.hpp"
#include "quditc/sim.hpp"
#include "quditc/unmap.hpp"

using namespace quditc;

namespace {

um::MeasureMap identity_measures(int n) {
    um::MeasureMap m;
    m.clbits = n;
    for (int k = 0; k < n; ++k) m.qubit_to_clbit.emplace_back(k, k);
    return m;
}

std::map<std::string, double> as_counts(const um::SampleTable& bits, int clbits) {
    std::map<std::string, double> out;
    for (const auto& e : bits.entries) {
        auto state = e.state;
        state.resize(clbits, 0);
        out[um::bitstring(state)] += e.count;
    }
    return out;
}

}  // namespace

TEST_CASE("strict excludes leakage, non-strict clamps it") {
    const qd::QuditParams params{3, 1};
    const auto mapping = qd::default_mapping(3, 1);
    const auto measures = identity_measures(3);
    um::SampleTable samples;
    samples.entries.push_back({{0, 1, 2}, 5});
    samples.entries.push_back({{0, 1, 0}, 7});

    const auto strict = um::unmap(samples, mapping, params, measures, um::Mode::Strict);
    REQUIRE(strict.entries.size() == 1);
    // clbit 0 rightmost: q1=1 -> "010"
    CHECK(as_counts(strict, 3) == std::map<std::string, double>{{"010", 7}});
    CHECK(strict.total() == 7);

    const auto loose = um::unmap(samples, mapping, params, measures, um::Mode::NonStrict);
    // dit 2 clamps to 1: state (0,1,1) -> clbits c0=0, c1=1, c2=1 -> "110"
    CHECK(as_counts(loose, 3) ==
          std::map<std::string, double>{{"110", 5}, {"010", 7}});
    CHECK(loose.total() == samples.total());
}

TEST_CASE("ququart dit expands to two bits, slot 0 least significant") {
    const qd::QuditParams params{4, 2};
    qd::Mapping mapping;
    mapping.qudit_of = {0, 0};
    mapping.slot_of = {0, 1};
    mapping.qudit_count = 1;
    um::SampleTable samples;
    samples.entries.push_back({{3}, 9});
    const auto out =
        um::unmap(samples, mapping, params, identity_measures(2), um::Mode::Strict);
    CHECK(as_counts(out, 2) == std::map<std::string, double>{{"11", 9}});
}

TEST_CASE("unmapped slots are dropped; unmeasured clbits read zero") {
    const qd::QuditParams params{4, 2};
    qd::Mapping mapping;  // one qubit in slot 1 of qudit 0; slot 0 unmapped
    mapping.qudit_of = {0};
    mapping.slot_of = {1};
    mapping.qudit_count = 1;
    um::MeasureMap measures;
    measures.clbits = 2;
    measures.qubit_to_clbit = {{0, 1}};  // qubit 0 -> clbit 1
    um::SampleTable samples;
    samples.entries.push_back({{3}, 4});  // bits: slot0=1 (ignored), slot1=1
    samples.entries.push_back({{1}, 6});  // slot1=0
    const auto out = um::unmap(samples, mapping, params, measures, um::Mode::Strict);
    CHECK(as_counts(out, 2) == std::map<std::string, double>{{"10", 4}, {"00", 6}});
}

TEST_CASE("counts of colliding bit-strings sum; conservation holds") {
    const qd::QuditParams params{3, 1};
    const auto mapping = qd::default_mapping(2, 1);
    um::MeasureMap measures;
    measures.clbits = 1;
    measures.qubit_to_clbit = {{0, 0}};  // only qubit 0 measured
    um::SampleTable samples;
    samples.entries.push_back({{1, 0}, 3});
    samples.entries.push_back({{1, 1}, 4});
    samples.entries.push_back({{0, 2}, 5});  // clamps, qubit 1 unmeasured anyway
    const auto loose = um::unmap(samples, mapping, params, measures, um::Mode::NonStrict);
    CHECK(as_counts(loose, 1) == std::map<std::string, double>{{"1", 7}, {"0", 5}});
    CHECK(loose.total() == samples.total());

    const auto strict = um::unmap(samples, mapping, params, measures, um::Mode::Strict);
    CHECK(strict.total() == samples.total() - 5);
    // strict support is contained in the non-strict support
    for (const auto& e : strict.entries) {
        bool found = false;
        for (const auto& l : loose.entries) found |= l.state == e.state;
        CHECK(found);
    }
}

TEST_CASE("samples JSON accepts both state encodings") {
    const auto t = um::parse_samples_json(
        R"([{"state": "012", "count": 5}, {"state": [0, 1, 0], "count": 7}])", 3);
    REQUIRE(t.entries.size() == 2);
    CHECK(t.entries[0].state == std::vector<int>{0, 1, 2});
    CHECK(t.entries[1].state == std::vector<int>{0, 1, 0});
    CHECK_THROWS_WITH_AS(um::parse_samples_json(R"([{"state": "03", "count": 1}])", 3),
                         doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(
        um::parse_samples_json(R"([{"state": "01", "count": 1}, {"state": [0,1], "count": 2}])",
                               3),
        doctest::Contains("duplicate"), Error);
}

TEST_CASE("length and dit-range validation") {
    const qd::QuditParams params{3, 1};
    const auto mapping = qd::default_mapping(2, 1);
    um::SampleTable bad_len;
    bad_len.entries.push_back({{0}, 1});
    CHECK_THROWS_WITH_AS(
        um::unmap(bad_len, mapping, params, identity_measures(2), um::Mode::Strict),
        doctest::Contains("length"), Error);
    um::SampleTable bad_dit;
    bad_dit.entries.push_back({{0, 5}, 1});
    CHECK_THROWS_WITH_AS(
        um::unmap(bad_dit, mapping, params, identity_measures(2), um::Mode::Strict),
        doctest::Contains("out of range"), Error);
}

TEST_CASE("simulator samples of a lowered circuit unmap to the qubit distribution") {
    // ququart-lowered Bell pair: h q0; cx q0,q1 over the ion-IR natives
    ir::Circuit qb;
    qb.qubits = 2;
    auto h = [&](int q) {
        qb.ops.push_back(ir::Gate{"r", {test::kPi / 2, -test::kPi / 2}, {q}});
        qb.ops.push_back(ir::Gate{"rz", {test::kPi}, {q}});
    };
    h(0);
    h(1);
    qb.ops.push_back(ir::Gate{"cz", {}, {0, 1}});
    h(1);

    for (const qd::QuditParams params : {qd::QuditParams{2, 1}, qd::QuditParams{3, 1},
                                         qd::QuditParams{4, 2}}) {
        const auto mapping = qd::default_mapping(2, params.b);
        const auto qc = lower::lower(qb, params, mapping);
        const auto probs = sim::simulate_probabilities(qc, 0);
        // exact probabilities as fractional counts
        um::SampleTable samples;
        for (std::size_t idx = 0; idx < probs.size(); ++idx) {
            if (probs[idx] < 1e-15) continue;
            std::vector<int> state(mapping.qudit_count);
            std::size_t rem = idx;
            for (int q = 0; q < mapping.qudit_count; ++q) {
                state[q] = static_cast<int>(rem % params.d);
                rem /= params.d;
            }
            samples.entries.push_back({state, probs[idx]});
        }
        const auto bits =
            um::unmap(samples, mapping, params, identity_measures(2), um::Mode::NonStrict);
        const auto counts = as_counts(bits, 2);
        // Bell distribution: 00 and 11 at probability 1/2
        double tv = 0;
        for (const auto& [key, want] :
             std::map<std::string, double>{{"00", 0.5}, {"01", 0.0}, {"10", 0.0}, {"11", 0.5}}) {
            const double got = counts.count(key) ? counts.at(key) : 0.0;
            tv += std::abs(got - want) / 2;
        }
        CHECK(tv < 1e-9);
    }
}
