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
#include <vector>

#include <Eigen/Dense>

#include "acsqc/dragging_plan.hpp"
#include "acsqc/evolution.hpp"
#include "acsqc/hamiltonian.hpp"
#include "acsqc/stabilizer_frame.hpp"

namespace acsqc {

struct GroundSpace {
    double energy = 0.0;
    /// Labelled logical basis, one column per label. Column L holds |b_0 b_1 ...>, with the
    /// first logical qubit as the most significant bit of L.
    Eigen::MatrixXcd basis;
};

/// Ground space of `h`, labelled by `logicals`: |0..0> is the ground vector with the largest
/// projection onto the joint +1 eigenspace of the logical Z operators, and the other labels
/// follow by applying logical X operators. Global phases are fixed so the largest amplitude of
/// |0..0> is real and positive.
///
/// Throws DegeneracyMismatchError when the ground degeneracy is not 2^|logicals|, and
/// FrameError when a logical does not act within the ground space.
GroundSpace ground_space_basis(const HamiltonianSpec &h, std::span<const LogicalPair> logicals);

struct InducedUnitary {
    /// out-dimension x in-dimension matrix <out_j| U |in_k>.
    Eigen::MatrixXcd matrix;
    /// 1 - sigma_min(matrix)^2: worst-case population that leaves the output ground space.
    double leakage = 0.0;
    /// Labelled input basis after each dragging step (filled when requested).
    std::vector<Eigen::MatrixXcd> step_blocks;
};

/// Runs every labelled input basis state through the plan and projects onto the labelled
/// output basis. Input labels come from the initial Hamiltonian and `in_logicals`, output
/// labels from the final Hamiltonian and `out_logicals`.
InducedUnitary induced_logical_unitary(const DraggingPlan &plan, std::span<const LogicalPair> in_logicals,
    std::span<const LogicalPair> out_logicals, const EvolveOptions &options = {}, bool keep_step_blocks = false);

InducedUnitary induced_logical_unitary(const DraggingPlan &plan, const StabilizerFrame &in_frame,
    const StabilizerFrame &out_frame, const EvolveOptions &options = {}, bool keep_step_blocks = false);

/// |tr(V^dagger U)|^2 / d^2 with d the column count. U and V must have the same shape; for
/// square matrices this is the usual process fidelity, for isometries it compares the images
/// of the d input states. Throws std::invalid_argument on a shape mismatch.
double process_fidelity(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v);

}  // namespace acsqc
