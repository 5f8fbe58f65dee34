// Copyright 2026 The acsqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace acsqc {

/// A generator/logical set violates the stabilizer-frame invariants, or a dragging update
/// cannot be carried out on it.
class FrameError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A dense path was asked to materialize more qubits than the configured cap allows.
class CapExceededError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// The integrator lost more norm than the run's budget.
class NormDriftError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The lowest eigenspace does not have the dimension the caller expected.
class DegeneracyMismatchError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in circuit text; `line()` is 1-based.
class CircuitParseError : public std::invalid_argument {
   public:
    CircuitParseError(std::size_t line, const std::string &what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace acsqc
