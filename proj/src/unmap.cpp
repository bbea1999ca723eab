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

#include "quditc/unmap.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

namespace quditc::um {

double SampleTable::total() const {
    double t = 0;
    for (const auto& e : entries) t += e.count;
    return t;
}

void MeasureMap::validate(int qubit_count) const {
    std::set<int> qubits, cl;
    for (const auto& [q, c] : qubit_to_clbit) {
        if (q < 0 || q >= qubit_count) throw Error("measure map: qubit index out of range");
        if (c < 0 || c >= clbits) throw Error("measure map: clbit index out of range");
        if (!qubits.insert(q).second) throw Error("measure map: qubit measured twice");
        if (!cl.insert(c).second) {
            throw Error("measure map: two qubits write the same clbit");
        }
    }
}

SampleTable unmap(const SampleTable& samples, const qd::Mapping& mapping,
                  const qd::QuditParams& params, const MeasureMap& measures, Mode mode) {
    params.validate();
    mapping.validate(params);
    measures.validate(mapping.qubits());
    const int top = params.qubit_levels();  // 2^b

    std::map<std::vector<int>, double> acc;
    for (const auto& entry : samples.entries) {
        if (static_cast<int>(entry.state.size()) != mapping.qudit_count) {
            throw Error("sample state length " + std::to_string(entry.state.size()) +
                        " does not match the qudit count " +
                        std::to_string(mapping.qudit_count));
        }
        std::vector<int> state = entry.state;
        bool leaked = false;
        for (int& dit : state) {
            if (dit < 0 || dit >= params.d) {
                throw Error("sample dit " + std::to_string(dit) + " out of range for d=" +
                            std::to_string(params.d));
            }
            if (dit >= top) {
                leaked = true;
                dit = top - 1;  // non-strict clamp to the highest allowed level
            }
        }
        if (leaked && mode == Mode::Strict) continue;
        std::vector<int> bits(measures.clbits, 0);
        for (const auto& [qubit, clbit] : measures.qubit_to_clbit) {
            const int dit = state[mapping.qudit_of[qubit]];
            bits[clbit] = (dit >> mapping.slot_of[qubit]) & 1;
        }
        acc[bits] += entry.count;
    }
    SampleTable out;
    out.entries.reserve(acc.size());
    for (auto& [bits, count] : acc) out.entries.push_back({bits, count});
    return out;
}

SampleTable parse_samples_json(const std::string& text, int levels) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("samples file: ") + e.what());
    }
    if (!root.is_array()) throw Error("samples file: expected an array of entries");
    SampleTable table;
    std::set<std::vector<int>> seen;
    for (std::size_t k = 0; k < root.size(); ++k) {
        const auto& je = root[k];
        const std::string where = "entry " + std::to_string(k);
        if (!je.is_object() || !je.contains("state") || !je.contains("count")) {
            throw Error("samples file: " + where + ": expected {\"state\", \"count\"}");
        }
        SampleEntry entry;
        const auto& js = je["state"];
        if (js.is_string()) {
            for (char c : js.get<std::string>()) {
                if (c < '0' || c > '9') {
                    throw Error("samples file: " + where + ": bad dit character");
                }
                entry.state.push_back(c - '0');
            }
        } else if (js.is_array()) {
            for (const auto& d : js) {
                if (!d.is_number_integer()) {
                    throw Error("samples file: " + where + ": dits must be integers");
                }
                entry.state.push_back(d.get<int>());
            }
        } else {
            throw Error("samples file: " + where + ": state must be a string or an array");
        }
        for (int d : entry.state) {
            if (d < 0 || d >= levels) {
                throw Error("samples file: " + where + ": dit " + std::to_string(d) +
                            " out of range for d=" + std::to_string(levels));
            }
        }
        if (!je["count"].is_number() || je["count"].get<double>() < 0) {
            throw Error("samples file: " + where + ": count must be non-negative");
        }
        entry.count = je["count"].get<double>();
        if (!seen.insert(entry.state).second) {
            throw Error("samples file: " + where + ": duplicate state");
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

std::string bitstring(const std::vector<int>& state) {
    // clbit 0 rightmost
    std::string s(state.size(), '0');
    for (std::size_t c = 0; c < state.size(); ++c) {
        s[state.size() - 1 - c] = static_cast<char>('0' + state[c]);
    }
    return s;
}

std::string counts_to_json(const SampleTable& bits, int clbits) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, double>> rows;
    for (const auto& e : bits.entries) {
        std::vector<int> state = e.state;
        state.resize(clbits, 0);
        rows.emplace_back(bitstring(state), e.count);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [key, count] : rows) {
        if (count == std::floor(count) && std::abs(count) < 9.007199254740992e15) {
            out[key] = static_cast<long long>(count);
        } else {
            out[key] = count;
        }
    }
    return out.dump(2) + "\n";
}

}  // namespace quditc::um
