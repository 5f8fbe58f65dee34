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

#include <Eigen/Dense>

#include "acsqc/dragging_plan.hpp"
#include "acsqc/stabilizer_frame.hpp"

namespace acsqc {

/// The stabilizer a term enforces in its ground space: the term's Pauli word, negated when the
/// weight is positive. Throws FrameError unless the term is a single real-coefficient word.
PauliString term_generator(const HamiltonianTerm &term);

/// Frame built from the plan's initial terms (in pool order) and the given logicals.
StabilizerFrame initial_frame(const DraggingPlan &plan, std::vector<LogicalPair> logicals);

struct ReplayResult {
    /// Frame after each step.
    std::vector<StabilizerFrame> frames;
    /// For each step, the generator slot consumed by each turned-on field (in turn_on order).
    std::vector<std::vector<std::size_t>> consumed;
};

/// Replays the plan at the stabilizer level. Every turned-on field must be a single Pauli word.
/// Each field consumes the last anticommuting generator among the terms the step switches off
/// (slots keep their term identity after being multiplied). Throws FrameError when no such
/// generator exists or the frame's generators do not match the plan's initial terms.
ReplayResult replay_symbolic(const DraggingPlan &plan, const StabilizerFrame &start);

/// Logical Pauli action (phase, X bits, Z bits) of `op` relative to single-logical pairs:
/// bit j of x is set when op anticommutes with Z_j, bit j of z when it anticommutes with X_j.
struct LogicalWord {
    int phase_exponent = 0;  // op = i^phase * prod_j X_j^{x_j} Z_j^{z_j} on the code space
    std::vector<bool> x;
    std::vector<bool> z;

    std::string str() const;
    /// 2^k x 2^k matrix, first logical as the most significant bit.
    Eigen::MatrixXcd matrix() const;
};

/// Expresses `op` in terms of the frame's logicals. Throws FrameError when `op` is not a
/// logical Pauli of the frame (it anticommutes with a generator or differs from the product
/// by more than a stabilizer).
LogicalWord to_logical_word(const StabilizerFrame &frame, const PauliString &op);

/// Largest ||M P - Q M|| over the input logical Paulis P (X_j and Z_j on logical qubit j),
/// where Q is the replayed image of P (the logicals of `dragged`) written in terms of
/// `out_logicals`. Measures how well an induced matrix agrees with the stabilizer prediction.
double logical_action_residual(
    const Eigen::MatrixXcd &m, const StabilizerFrame &dragged, std::span<const LogicalPair> out_logicals);

}  // namespace acsqc
