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

#include <cmath>
#include <random>

#include "quditc/ir.hpp"
#include "quditc/qudit.hpp"
#include "quditc/sim.hpp"

namespace quditc::test {

inline constexpr double kPi = M_PI;

/// Random angles mix generic values with the special points the rules key on.
inline double random_angle(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_real_distribution<double> uni(-2 * kPi, 2 * kPi);
    switch (pick(rng)) {
        case 0: return 0.0;
        case 1: return kPi;
        case 2: return -kPi / 2;
        case 3: return 2 * kPi;
        case 4: return 4 * kPi;
        default: return uni(rng);
    }
}

/// Random qubit circuit over {rz, r, cz} (the rewrite-engine test alphabet).
inline ir::Circuit random_qubit_circuit(std::mt19937_64& rng, int qubits, int ops) {
    ir::Circuit c;
    c.qubits = qubits;
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> pick_q(0, qubits - 1);
    for (int k = 0; k < ops; ++k) {
        const int q = pick_q(rng);
        switch (kind(rng)) {
            case 0: c.ops.push_back(ir::Gate{"rz", {random_angle(rng)}, {q}}); break;
            case 1:
                c.ops.push_back(ir::Gate{"r", {random_angle(rng), random_angle(rng)}, {q}});
                break;
            default: {
                if (qubits < 2) {
                    c.ops.push_back(ir::Gate{"rz", {random_angle(rng)}, {q}});
                    break;
                }
                int p = pick_q(rng);
                while (p == q) p = pick_q(rng);
                c.ops.push_back(ir::Gate{"cz", {}, {q, p}});
                break;
            }
        }
    }
    return c;
}

/// Random qudit circuit over {Ph, R, XX} with arbitrary level pairs.
inline qd::Circuit random_qudit_circuit(std::mt19937_64& rng, int qudits, int d, int ops) {
    qd::Circuit c;
    c.qudits = qudits;
    c.levels = d;
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> pick_q(0, qudits - 1);
    std::uniform_int_distribution<int> pick_l(0, d - 1);
    auto level_pair = [&](int& a, int& b) {
        a = pick_l(rng);
        b = pick_l(rng);
        while (b == a) b = pick_l(rng);
    };
    for (int k = 0; k < ops; ++k) {
        switch (kind(rng)) {
            case 0: c.ops.push_back(qd::PhOp{pick_q(rng), pick_l(rng), random_angle(rng)}); break;
            case 1: {
                int i, j;
                level_pair(i, j);
                c.ops.push_back(qd::ROp{pick_q(rng), i, j, random_angle(rng), random_angle(rng)});
                break;
            }
            default: {
                if (qudits < 2) {
                    c.ops.push_back(qd::PhOp{0, pick_l(rng), random_angle(rng)});
                    break;
                }
                int a = pick_q(rng);
                int b = pick_q(rng);
                while (b == a) b = pick_q(rng);
                int i, j, kk, l;
                level_pair(i, j);
                level_pair(kk, l);
                c.ops.push_back(qd::make_xx(a, b, i, j, kk, l, random_angle(rng)));
                break;
            }
        }
    }
    return c;
}

/// Max |c1 - z*c2| over entries with the best unit scalar z (global phase).
inline double phase_distance(const sim::Matrix& a, const sim::Matrix& b) {
    std::size_t br = 0, bc = 0;
    double best = 0;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (std::abs(b.at(r, c)) > best) {
                best = std::abs(b.at(r, c));
                br = r;
                bc = c;
            }
        }
    }
    if (best == 0) return a.max_abs();
    auto z = a.at(br, bc) / b.at(br, bc);
    if (std::abs(z) != 0.0) z /= std::abs(z);
    return max_abs_diff(a, b * z);
}

}  // namespace quditc::test
