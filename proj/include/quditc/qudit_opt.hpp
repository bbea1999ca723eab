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

#include "quditc/qudit.hpp"
#include "quditc/rewrite.hpp"

// Step-3 back half: peephole rules on the routed qudit circuit. The rules
// ride on the rewrite engine, with level indices encoded as leading gate
// parameters (ph(i,t), r(i,j,t,p), xx(i,j,k,l,t)).

namespace quditc::qopt {

/// Merge rotations, eliminate exact identities, push phases rightward.
/// Every rule preserves the circuit unitary exactly.
qd::Circuit optimize_qudit(const qd::Circuit& circuit, long cap = rw::kDefaultRewriteCap,
                           rw::OptimizeStats* stats = nullptr);

/// Drop Ph ops with no later non-Ph op on their qudit. Does NOT preserve
/// the unitary (Z-basis statistics only); off by default in the pipeline.
qd::Circuit strip_trailing_phases(const qd::Circuit& circuit);

/// The built-in rule script (exposed for tests).
const rw::RuleScript& builtin_rules();

}  // namespace quditc::qopt
