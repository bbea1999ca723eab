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

#include "quditc/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace quditc::qd {

void QuditParams::validate() const {
    if (d < 2) throw Error("level count d must be at least 2, got " + std::to_string(d));
    if (b < 1) throw Error("qubits per qudit b must be at least 1, got " + std::to_string(b));
    if ((1 << b) > d) {
        throw Error("2^b = " + std::to_string(1 << b) + " exceeds level count d = " +
                    std::to_string(d));
    }
}

void Mapping::validate(const QuditParams& params) const {
    if (qudit_of.size() != slot_of.size()) throw InternalError("mapping arrays out of sync");
    std::set<std::pair<int, int>> seen;
    for (std::size_t n = 0; n < qudit_of.size(); ++n) {
        const int q = qudit_of[n];
        const int s = slot_of[n];
        if (q < 0 || q >= qudit_count) {
            throw Error("qubit " + std::to_string(n) + ": qudit index " + std::to_string(q) +
                        " out of range (qudit count " + std::to_string(qudit_count) + ")");
        }
        if (s < 0 || s >= params.b) {
            throw Error("qubit " + std::to_string(n) + ": slot " + std::to_string(s) +
                        " >= b=" + std::to_string(params.b));
        }
        if (!seen.insert({q, s}).second) {
            throw Error("duplicate mapping pair (qudit " + std::to_string(q) + ", slot " +
                        std::to_string(s) + ")");
        }
    }
}

XXOp make_xx(int a, int b, int i, int j, int k, int l, double theta) {
    if (i > j) std::swap(i, j);
    if (k > l) std::swap(k, l);
    if (a > b) {
        std::swap(a, b);
        std::swap(i, k);
        std::swap(j, l);
    }
    return XXOp{a, b, i, j, k, l, theta};
}

void Circuit::validate() const {
    auto check_level = [&](int lv) {
        if (lv < 0 || lv >= levels) {
            throw InternalError("level index " + std::to_string(lv) + " out of range for d=" +
                                std::to_string(levels));
        }
    };
    auto check_qudit = [&](int q) {
        if (q < 0 || q >= qudits) throw InternalError("qudit index out of range");
    };
    for (const auto& op : ops) {
        if (const auto* ph = std::get_if<PhOp>(&op)) {
            check_qudit(ph->qudit);
            check_level(ph->level);
            if (!std::isfinite(ph->theta)) throw InternalError("non-finite Ph angle");
        } else if (const auto* r = std::get_if<ROp>(&op)) {
            check_qudit(r->qudit);
            check_level(r->i);
            check_level(r->j);
            if (r->i == r->j) throw InternalError("R with i == j");
            if (!std::isfinite(r->theta) || !std::isfinite(r->phi)) {
                throw InternalError("non-finite R angle");
            }
        } else if (const auto* xx = std::get_if<XXOp>(&op)) {
            check_qudit(xx->a);
            check_qudit(xx->b);
            if (xx->a == xx->b) throw InternalError("XX with a == b");
            check_level(xx->i);
            check_level(xx->j);
            check_level(xx->k);
            check_level(xx->l);
            if (xx->i == xx->j || xx->k == xx->l) throw InternalError("XX with equal levels");
            if (!std::isfinite(xx->theta)) throw InternalError("non-finite XX angle");
        } else if (const auto* bar = std::get_if<BarrierOp>(&op)) {
            for (int q : bar->qudits) check_qudit(q);
        }
    }
}

int Circuit::count_r() const {
    int n = 0;
    for (const auto& op : ops) n += std::holds_alternative<ROp>(op) ? 1 : 0;
    return n;
}

int Circuit::count_xx() const {
    int n = 0;
    for (const auto& op : ops) n += std::holds_alternative<XXOp>(op) ? 1 : 0;
    return n;
}

int Circuit::count_ph() const {
    int n = 0;
    for (const auto& op : ops) n += std::holds_alternative<PhOp>(op) ? 1 : 0;
    return n;
}

Mapping default_mapping(int qubits, int b) {
    if (qubits < 1) throw Error("qubit count must be positive");
    if (b < 1) throw Error("qubits per qudit must be positive");
    Mapping m;
    m.qudit_of.resize(qubits);
    m.slot_of.resize(qubits);
    for (int n = 0; n < qubits; ++n) {
        m.qudit_of[n] = n / b;
        m.slot_of[n] = n % b;
    }
    m.qudit_count = (qubits + b - 1) / b;
    return m;
}

Mapping parse_mapping_json(const std::string& text, const QuditParams& params) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("mapping file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("qubits") || !j["qubits"].is_array()) {
        throw Error("mapping file: expected {\"qubits\": [...]}");
    }
    Mapping m;
    for (const auto& entry : j["qubits"]) {
        if (!entry.is_object() || !entry.contains("qudit") || !entry.contains("slot")) {
            throw Error("mapping file: each entry needs \"qudit\" and \"slot\"");
        }
        m.qudit_of.push_back(entry["qudit"].get<int>());
        m.slot_of.push_back(entry["slot"].get<int>());
    }
    if (m.qudit_of.empty()) throw Error("mapping file: empty qubit list");
    m.qudit_count = *std::max_element(m.qudit_of.begin(), m.qudit_of.end()) + 1;
    m.validate(params);
    return m;
}

Mapping load_mapping(const std::string& path, const QuditParams& params) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open mapping file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_mapping_json(ss.str(), params);
}

}  // namespace quditc::qd
