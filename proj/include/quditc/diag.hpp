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

#include <optional>
#include <stdexcept>
#include <string>

namespace quditc {

/// Position of a token in a source file, 1-based.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;

    std::string str() const {
        return file + ":" + std::to_string(line) + ":" + std::to_string(column);
    }
};

/// A user-facing error: bad input, bad flags, inconsistent files.
/// The CLI prints `file:line:column: message` and exits with code 1.
class Error : public std::runtime_error {
  public:
    explicit Error(std::string message, std::optional<SourceSpan> span = std::nullopt)
        : std::runtime_error(span ? span->str() + ": " + message : message),
          span_(std::move(span)) {}

    const std::optional<SourceSpan>& span() const { return span_; }

  private:
    std::optional<SourceSpan> span_;
};

/// A broken internal invariant. Exit code 3 from the CLI.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace quditc
