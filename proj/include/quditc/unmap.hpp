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
#include <vector>

#include "quditc/qudit.hpp"

// Converts qudit measurement samples (dit-strings with counts) back into
// classical-register bit-strings through the qubit-to-qudit mapping.

namespace quditc::um {

struct SampleEntry {
    std::vector<int> state;  // state[Q] = measured level of qudit Q
    double count = 0;        // integer-valued in files; exact probabilities in tests

    bool operator==(const SampleEntry&) const = default;
};

struct SampleTable {
    std::vector<SampleEntry> entries;  // states unique

    double total() const;
    bool operator==(const SampleTable&) const = default;
};

struct MeasureMap {
    std::vector<std::pair<int, int>> qubit_to_clbit;  // (qubit n, clbit)
    int clbits = 0;

    void validate(int qubit_count) const;
};

enum class Mode { Strict, NonStrict };

/// Strict: states with any dit >= 2^b are excluded. NonStrict: such dits
/// clamp to 2^b - 1. Bit k of a dit is the slot-k qubit; measured qubits
/// land on their clbits, everything else reads 0.
SampleTable unmap(const SampleTable& samples, const qd::Mapping& mapping,
                  const qd::QuditParams& params, const MeasureMap& measures, Mode mode);

/// [{"state": "012" | [0,1,2], "count": n}, ...]
SampleTable parse_samples_json(const std::string& text, int levels);

/// Output keyed by the classical bit-string, clbit 0 rightmost.
std::string counts_to_json(const SampleTable& bits, int clbits);

std::string bitstring(const std::vector<int>& state);

}  // namespace quditc::um
