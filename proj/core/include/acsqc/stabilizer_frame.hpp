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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "acsqc/pauli.hpp"

namespace acsqc {

struct LogicalPair {
    PauliString x_op;
    PauliString z_op;

    bool operator==(const LogicalPair &) const = default;
};

/// Generator set plus logical operator pairs: the symbolic state of a dragging computation.
/// The code space is the joint +1 eigenspace of the generators as written (signs included).
///
/// Frames are immutable values; build them with `frame_new`, which enforces
///   * generators are Hermitian and pairwise commuting,
///   * each logical pair anticommutes internally and commutes with every generator and
///     every other pair,
///   * generators and logical components are symplectically independent.
class StabilizerFrame {
   public:
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    const std::vector<PauliString> &generators() const noexcept { return generators_; }
    const std::vector<LogicalPair> &logicals() const noexcept { return logicals_; }

    /// Multi-line rendering using 1-based sparse Pauli labels.
    std::string str() const;

    bool operator==(const StabilizerFrame &) const = default;

   private:
    friend StabilizerFrame frame_new(std::vector<PauliString>, std::vector<LogicalPair>);
    std::size_t n_qubits_ = 0;
    std::vector<PauliString> generators_;
    std::vector<LogicalPair> logicals_;
};

/// Validates and builds a frame. Throws FrameError naming the violated invariant.
StabilizerFrame frame_new(std::vector<PauliString> generators, std::vector<LogicalPair> logicals);

/// Rank over GF(2) of the (x|z) vectors of `ops` (phases ignored).
std::size_t symplectic_rank(std::span<const PauliString> ops);

/// Endpoint rule of one adiabatic dragging: `field` is turned on while the generator at
/// `consumed` is turned off.
///
/// Every other generator or logical component that anticommutes with `field` is multiplied
/// by the consumed generator (so it commutes with `field` and keeps its value on the code),
/// then the consumed generator is replaced by `field`. Throws FrameError when `field`
/// commutes with the consumed generator, or when the updated set is no longer a valid frame.
StabilizerFrame dragging_update(const StabilizerFrame &frame, std::size_t consumed, const PauliString &field);

/// Minimal-support representative of `op` modulo the generator group. Ties are broken by
/// the smaller (x_mask, z_mask) pair. Throws FrameError if `op` anticommutes with a generator.
PauliString canonicalize_logical(const StabilizerFrame &frame, const PauliString &op);

}  // namespace acsqc
