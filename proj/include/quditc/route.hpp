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

#include <array>
#include <set>
#include <vector>

#include "quditc/qudit.hpp"

// Step-3 front half: rewrite every R/XX whose levels violate the device
// selection rules into an equivalent sequence over allowed transitions,
// conjugating by level-swap pulses R(pi, pi/2).

namespace quditc::route {

struct TransitionGraph {
    int d = 2;
    std::set<std::pair<int, int>> r_pairs;          // stored with first < second
    std::set<std::array<int, 4>> xx_pairs;          // (i,j | k,l), i<j, k<l

    /// The bundled ion device: R on (0,i) for every i, XX on (0,1)|(0,1).
    static TransitionGraph star(int d);

    bool allows_r(int i, int j) const;
    bool allows_xx(int i, int j, int k, int l) const;

    /// Swap pulses must reach every level from every other.
    void validate() const;
};

qd::Circuit route(const qd::Circuit& circuit, const TransitionGraph& graph);

/// True when every R/XX op already satisfies the graph (pure scan).
bool is_legal(const qd::Circuit& circuit, const TransitionGraph& graph);

}  // namespace quditc::route
