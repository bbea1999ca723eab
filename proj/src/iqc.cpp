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

#include "quditc/iqc.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace quditc::iqc {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Angle in units of pi, reduced mod `period` into (-period/2, period/2].
double norm_units(double theta, double period) {
    double u = theta / M_PI;
    u -= period * std::floor(u / period);  // [0, period)
    if (u > period / 2) u -= period;
    // map an exact -period/2 endpoint up
    if (u <= -period / 2) u += period;
    return u == 0.0 ? 0.0 : u;  // collapse -0.0
}

ordered_json op_to_json(const qd::Op& op, int levels, const route::TransitionGraph& graph) {
    if (const auto* ph = std::get_if<qd::PhOp>(&op)) {
        ordered_json j;
        j["type"] = "Rz";
        j["angle"] = norm_units(ph->theta, 2.0);
        j["upper_state"] = ph->level;
        j["qudit"] = ph->qudit;
        return j;
    }
    if (const auto* r = std::get_if<qd::ROp>(&op)) {
        int lo = r->i, hi = r->j;
        double phi = r->phi;
        if (lo > hi) {
            std::swap(lo, hi);
            phi = -phi;
        }
        if (!graph.allows_r(lo, hi)) {
            throw Error("R op on levels (" + std::to_string(r->i) + "," + std::to_string(r->j) +
                        ") violates the selection rules; run the router first");
        }
        if (lo != 0) {
            throw Error("R op does not couple level 0; the ion format addresses transitions by "
                        "their upper state");
        }
        ordered_json j;
        j["type"] = "Rphi";
        j["angle"] = norm_units(r->theta, 4.0);
        j["axis"] = norm_units(phi, 2.0);
        j["upper_state"] = hi;
        j["qudit"] = r->qudit;
        return j;
    }
    if (const auto* xx = std::get_if<qd::XXOp>(&op)) {
        if (!graph.allows_xx(xx->i, xx->j, xx->k, xx->l)) {
            throw Error("XX op violates the selection rules; run the router first");
        }
        if (xx->i != 0 || xx->j != 1 || xx->k != 0 || xx->l != 1) {
            throw Error("XX supports upper_state 1 only (levels (0,1)|(0,1))");
        }
        ordered_json j;
        j["type"] = "XX";
        j["angle"] = norm_units(xx->theta, 2.0);
        j["upper_state"] = 1;
        j["qudits"] = {xx->a, xx->b};
        return j;
    }
    (void)levels;
    throw InternalError("barrier reached op_to_json");
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error("ion circuit file: " + path + ": " + what);
}

int require_int(const nlohmann::json& j, const std::string& path, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        schema_error(path + "/" + key, "expected an integer");
    }
    return j[key].get<int>();
}

double require_number(const nlohmann::json& j, const std::string& path, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        schema_error(path + "/" + key, "expected a number");
    }
    return j[key].get<double>();
}

}  // namespace

std::string emit(const std::vector<std::pair<qd::Circuit, int>>& circuits,
                 const route::TransitionGraph& graph) {
    ordered_json root = ordered_json::array();
    for (const auto& [circuit, repetitions] : circuits) {
        if (repetitions < 1) throw Error("repetitions must be at least 1");
        circuit.validate();  // level/qudit ranges, finite angles
        ordered_json entry;
        entry["repetitions"] = repetitions;
        entry["levels"] = circuit.levels;
        ordered_json seq = ordered_json::array();
        for (const auto& op : circuit.ops) {
            if (std::holds_alternative<qd::BarrierOp>(op)) continue;
            seq.push_back(op_to_json(op, circuit.levels, graph));
        }
        entry["sequence"] = std::move(seq);
        root.push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::vector<std::pair<qd::Circuit, int>> parse_iqc(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("ion circuit file: ") + e.what());
    }
    if (!root.is_array()) schema_error("", "expected a top-level array of circuits");
    std::vector<std::pair<qd::Circuit, int>> out;
    for (std::size_t c = 0; c < root.size(); ++c) {
        const std::string base = "/" + std::to_string(c);
        const auto& jc = root[c];
        if (!jc.is_object()) schema_error(base, "expected a circuit object");
        qd::Circuit circuit;
        const int repetitions = require_int(jc, base, "repetitions");
        circuit.levels = require_int(jc, base, "levels");
        if (circuit.levels < 2) schema_error(base + "/levels", "must be at least 2");
        if (repetitions < 1) schema_error(base + "/repetitions", "must be at least 1");
        if (!jc.contains("sequence") || !jc["sequence"].is_array()) {
            schema_error(base + "/sequence", "expected an array of operations");
        }
        int max_qudit = -1;
        for (std::size_t k = 0; k < jc["sequence"].size(); ++k) {
            const std::string path = base + "/sequence/" + std::to_string(k);
            const auto& jop = jc["sequence"][k];
            if (!jop.is_object() || !jop.contains("type") || !jop["type"].is_string()) {
                schema_error(path, "expected an operation object with a \"type\"");
            }
            const std::string type = jop["type"].get<std::string>();
            if (type == "Rz") {
                const double angle = require_number(jop, path, "angle");
                const int upper = require_int(jop, path, "upper_state");
                const int qudit = require_int(jop, path, "qudit");
                if (upper < 0 || upper >= circuit.levels) {
                    schema_error(path + "/upper_state", "level out of range");
                }
                circuit.ops.push_back(qd::PhOp{qudit, upper, angle * M_PI});
                max_qudit = std::max(max_qudit, qudit);
            } else if (type == "Rphi") {
                const double angle = require_number(jop, path, "angle");
                const double axis = require_number(jop, path, "axis");
                const int upper = require_int(jop, path, "upper_state");
                const int qudit = require_int(jop, path, "qudit");
                if (upper < 1 || upper >= circuit.levels) {
                    schema_error(path + "/upper_state", "level out of range");
                }
                circuit.ops.push_back(qd::ROp{qudit, 0, upper, angle * M_PI, axis * M_PI});
                max_qudit = std::max(max_qudit, qudit);
            } else if (type == "XX") {
                const double angle = require_number(jop, path, "angle");
                const int upper = require_int(jop, path, "upper_state");
                if (upper != 1) {
                    schema_error(path + "/upper_state", "unsupported upper_state (must be 1)");
                }
                if (!jop.contains("qudits") || !jop["qudits"].is_array() ||
                    jop["qudits"].size() != 2) {
                    schema_error(path + "/qudits", "expected a 2-element array");
                }
                const int a = jop["qudits"][0].get<int>();
                const int b = jop["qudits"][1].get<int>();
                if (a == b) schema_error(path + "/qudits", "qudits must differ");
                circuit.ops.push_back(qd::make_xx(a, b, 0, 1, 0, 1, angle * M_PI));
                max_qudit = std::max(max_qudit, std::max(a, b));
            } else {
                schema_error(path + "/type", "unknown operation type '" + type + "'");
            }
        }
        circuit.qudits = max_qudit + 1;
        circuit.validate();
        out.emplace_back(std::move(circuit), repetitions);
    }
    return out;
}

}  // namespace quditc::iqc
