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

#include <string>
#include <variant>
#include <vector>

#include "quditc/diag.hpp"

namespace quditc::qd {

/// Levels per qudit (d) and qubits stored per qudit (b), with 2^b <= d.
struct QuditParams {
    int d = 2;
    int b = 1;

    void validate() const;
    int qubit_levels() const { return 1 << b; }  // levels 0..2^b-1 hold qubit states
};

/// Per-qubit placement: qubit n lives in qudit `qudit_of[n]`, slot
/// `slot_of[n]`. Slot k is bit k of the level index (slot 0 = LSB).
struct Mapping {
    std::vector<int> qudit_of;
    std::vector<int> slot_of;
    int qudit_count = 0;

    int qubits() const { return static_cast<int>(qudit_of.size()); }
    void validate(const QuditParams& params) const;
};

/// Virtual phase: level `level` picks up e^{i*theta}.
struct PhOp {
    int qudit = 0;
    int level = 0;
    double theta = 0.0;
    bool operator==(const PhOp&) const = default;
};

/// Two-level rotation exp(-i*(theta/2)*sigma_phi^{ij}) on one qudit.
/// Levels are kept as written; i > j is legal and means the reversed
/// block orientation (the optimizer normalizes via R^{ji} = R^{ij}(theta,-phi)).
struct ROp {
    int qudit = 0;
    int i = 0;
    int j = 1;
    double theta = 0.0;
    double phi = 0.0;
    bool operator==(const ROp&) const = default;
};

/// Molmer-Sorensen coupling exp(-i*theta*sigma_x^{ij} (x) sigma_x^{kl}).
/// Stored canonically: a < b, i < j, k < l (sigma_x is index-symmetric, and
/// swapping the qudits swaps the level pairs, so this loses nothing).
struct XXOp {
    int a = 0;
    int b = 1;
    int i = 0, j = 1;  // levels on qudit a
    int k = 0, l = 1;  // levels on qudit b
    double theta = 0.0;
    bool operator==(const XXOp&) const = default;
};

struct BarrierOp {
    std::vector<int> qudits;  // empty = every qudit
    bool operator==(const BarrierOp&) const = default;
};

using Op = std::variant<PhOp, ROp, XXOp, BarrierOp>;

/// Builds the canonical form (see XXOp).
XXOp make_xx(int a, int b, int i, int j, int k, int l, double theta);

struct Circuit {
    int qudits = 0;
    int levels = 2;  // d
    std::vector<Op> ops;

    bool operator==(const Circuit&) const = default;
    void validate() const;

    int count_r() const;
    int count_xx() const;
    int count_ph() const;
};

/// Q_n = floor(n/b), I_n = n mod b, M = ceil(N/b).
Mapping default_mapping(int qubits, int b);

/// Parses {"qubits":[{"qudit":int,"slot":int}, ...]} and validates against params.
Mapping parse_mapping_json(const std::string& text, const QuditParams& params);
Mapping load_mapping(const std::string& path, const QuditParams& params);

}  // namespace quditc::qd
