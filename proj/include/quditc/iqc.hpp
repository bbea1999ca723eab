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
#include <utility>
#include <vector>

#include "quditc/qudit.hpp"
#include "quditc/route.hpp"

// The ion quantum computer circuit description: a JSON array of circuits,
// each {"repetitions", "levels", "sequence"} with Rz/Rphi/XX operations and
// angles in units of pi.

namespace quditc::iqc {

/// Serializes routed circuits; throws if any op violates the selection
/// rules or an XX op couples anything but the (0,1)|(0,1) pair. Angles are
/// normalized into (-2, 2] in units of pi. Barriers are dropped.
std::string emit(const std::vector<std::pair<qd::Circuit, int>>& circuits,
                 const route::TransitionGraph& graph);

/// Inverse of emit up to floating-point round-trip. Schema violations carry
/// a JSON-pointer-style path.
std::vector<std::pair<qd::Circuit, int>> parse_iqc(const std::string& text);

}  // namespace quditc::iqc
