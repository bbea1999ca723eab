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

#include <json.hpp>

#include "helpers.hpp"
#include "quditc/iqc.hpp"
#include "quditc/route.hpp"

using namespace quditc;
using test::kPi;

namespace {

qd::Circuit sample_circuit() {
    qd::Circuit c;
    c.qudits = 3;
    c.levels = 4;
    c.ops.push_back(qd::PhOp{0, 2, kPi / 2});
    c.ops.push_back(qd::ROp{1, 0, 3, kPi, kPi / 2});
    c.ops.push_back(qd::BarrierOp{{0, 1}});
    c.ops.push_back(qd::make_xx(0, 2, 0, 1, 0, 1, kPi / 4));
    return c;
}

}  // namespace

TEST_CASE("emission format, field for field") {
    const auto graph = route::TransitionGraph::star(4);
    const auto text = iqc::emit({{sample_circuit(), 500}}, graph);
    const auto j = nlohmann::json::parse(text);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["repetitions"] == 500);
    CHECK(j[0]["levels"] == 4);
    REQUIRE(j[0]["sequence"].size() == 3);  // barrier dropped

    const auto& ph = j[0]["sequence"][0];
    CHECK(ph["type"] == "Rz");
    CHECK(ph["angle"] == 0.5);
    CHECK(ph["upper_state"] == 2);
    CHECK(ph["qudit"] == 0);

    const auto& r = j[0]["sequence"][1];
    CHECK(r["type"] == "Rphi");
    CHECK(r["angle"] == 1.0);
    CHECK(r["axis"] == 0.5);
    CHECK(r["upper_state"] == 3);
    CHECK(r["qudit"] == 1);

    const auto& xx = j[0]["sequence"][2];
    CHECK(xx["type"] == "XX");
    CHECK(xx["angle"] == 0.25);
    CHECK(xx["upper_state"] == 1);
    CHECK(xx["qudits"][0] == 0);
    CHECK(xx["qudits"][1] == 2);

    // fixed key order straight off the wire
    CHECK(text.find("\"type\": \"Rphi\",\n") != std::string::npos);
    const auto type_pos = text.find("\"type\": \"Rphi\"");
    const auto angle_pos = text.find("\"angle\"", type_pos);
    const auto axis_pos = text.find("\"axis\"", type_pos);
    const auto upper_pos = text.find("\"upper_state\"", type_pos);
    const auto qudit_pos = text.find("\"qudit\"", type_pos);
    CHECK(type_pos < angle_pos);
    CHECK(angle_pos < axis_pos);
    CHECK(axis_pos < upper_pos);
    CHECK(upper_pos < qudit_pos);
}

TEST_CASE("emission rejects illegal ops") {
    const auto graph = route::TransitionGraph::star(4);
    SUBCASE("unrouted R") {
        qd::Circuit c;
        c.qudits = 1;
        c.levels = 4;
        c.ops.push_back(qd::ROp{0, 1, 2, 0.4, 0.0});
        CHECK_THROWS_WITH_AS(iqc::emit({{c, 1}}, graph), doctest::Contains("selection"), Error);
    }
    SUBCASE("XX off the (0,1)|(0,1) pair") {
        qd::Circuit c;
        c.qudits = 2;
        c.levels = 4;
        c.ops.push_back(qd::make_xx(0, 1, 1, 3, 1, 3, kPi));
        CHECK_THROWS_AS(iqc::emit({{c, 1}}, graph), Error);
    }
    SUBCASE("repetitions must be positive") {
        qd::Circuit c;
        c.qudits = 1;
        c.levels = 2;
        CHECK_THROWS_AS(iqc::emit({{c, 0}}, graph), Error);
    }
}

TEST_CASE("parse_iqc") {
    SUBCASE("round-trip is op-for-op with tiny angle error") {
        const auto graph = route::TransitionGraph::star(4);
        auto c = sample_circuit();
        const auto text = iqc::emit({{c, 7}}, graph);
        const auto back = iqc::parse_iqc(text);
        REQUIRE(back.size() == 1);
        CHECK(back[0].second == 7);
        const auto& rc = back[0].first;
        REQUIRE(rc.ops.size() == 3);
        CHECK(rc.levels == 4);
        const auto& ph = std::get<qd::PhOp>(rc.ops[0]);
        CHECK(std::abs(ph.theta - kPi / 2) < 1e-12 * kPi);
        const auto& r = std::get<qd::ROp>(rc.ops[1]);
        CHECK(std::abs(r.theta - kPi) < 1e-12 * kPi);
        CHECK(std::abs(r.phi - kPi / 2) < 1e-12 * kPi);
        const auto& xx = std::get<qd::XXOp>(rc.ops[2]);
        CHECK(std::abs(xx.theta - kPi / 4) < 1e-12 * kPi);
    }
    SUBCASE("unsupported XX upper_state carries a JSON-pointer path") {
        const char* text = R"([{"repetitions": 1, "levels": 3, "sequence":
            [{"type": "XX", "angle": 0.5, "upper_state": 2, "qudits": [0, 1]}]}])";
        CHECK_THROWS_WITH_AS(iqc::parse_iqc(text), doctest::Contains("/0/sequence/0"), Error);
    }
    SUBCASE("empty array parses to no circuits") { CHECK(iqc::parse_iqc("[]").empty()); }
    SUBCASE("schema violations") {
        CHECK_THROWS_AS(iqc::parse_iqc("{}"), Error);
        CHECK_THROWS_AS(iqc::parse_iqc(R"([{"levels": 3, "sequence": []}])"), Error);
        CHECK_THROWS_AS(
            iqc::parse_iqc(
                R"([{"repetitions": 1, "levels": 3, "sequence": [{"type": "Huh"}]}])"),
            Error);
    }
}

TEST_CASE("emitted angles are normalized into (-2, 2] units of pi") {
    const auto graph = route::TransitionGraph::star(3);
    qd::Circuit c;
    c.qudits = 1;
    c.levels = 3;
    c.ops.push_back(qd::PhOp{0, 1, 5 * kPi});         // -> 1
    c.ops.push_back(qd::ROp{0, 0, 1, -3 * kPi, 7 * kPi});  // theta -> 1 (period 4pi), axis -> 1
    const auto j = nlohmann::json::parse(iqc::emit({{c, 1}}, graph));
    CHECK(j[0]["sequence"][0]["angle"] == 1.0);
    CHECK(j[0]["sequence"][1]["angle"] == 1.0);
    CHECK(j[0]["sequence"][1]["axis"] == 1.0);
}
