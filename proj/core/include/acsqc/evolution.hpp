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
#include <vector>

#include <Eigen/Dense>

#include "acsqc/dragging_plan.hpp"
#include "acsqc/state_vector.hpp"

namespace acsqc {

enum class Integrator {
    /// Fourth-order commutator-free Magnus: two exponentials per step, each evaluated by a
    /// Taylor series to machine precision, so the norm only drifts by rounding.
    kMagnus4,
    /// Classical Runge-Kutta. Not norm preserving; kept as an independent cross-check.
    kRk4,
};

struct EvolveOptions {
    /// Upper bound on the time step (units of 1/delta). The engine also keeps dt * ||H|| <= 0.5.
    double max_dt = 0.05;
    Integrator integrator = Integrator::kMagnus4;
    /// Largest allowed | ||psi|| - 1 | over the run before NormDriftError is thrown.
    double norm_budget = 1e-9;
    /// Keep the state after every dragging step.
    bool record_step_states = false;
    /// Compute leakage out of the final ground space (dense; needs n <= dense_cap()).
    bool compute_leakage = true;
};

struct EvolutionReport {
    StateVector final_state;
    /// State after each dragging step (empty unless record_step_states).
    std::vector<Eigen::VectorXcd> step_states;
    /// 1 - population of the final Hamiltonian's ground space; negative when not computed.
    double leakage = -1.0;
    /// Largest | ||psi|| - 1 | seen at step boundaries.
    double norm_drift = 0.0;
    std::size_t time_steps = 0;
    double wall_seconds = 0.0;
};

/// Integrates i d/dt psi = H(t) psi through every step of `plan`.
/// Throws NormDriftError if the norm drifts past the budget and std::invalid_argument on a
/// qubit-count mismatch.
EvolutionReport evolve_state(const DraggingPlan &plan, const StateVector &initial, const EvolveOptions &options = {});

/// Evolves each column of `columns` (2^n rows) through the plan. When `step_blocks` is non-null
/// it receives the block after every dragging step. Norm drift is checked column by column.
Eigen::MatrixXcd evolve_block(const DraggingPlan &plan, const Eigen::MatrixXcd &columns,
    const EvolveOptions &options = {}, std::vector<Eigen::MatrixXcd> *step_blocks = nullptr);

/// Population outside the ground space of `h` (dense).
double leakage_from_ground_space(const HamiltonianSpec &h, const Eigen::VectorXcd &state);

}  // namespace acsqc
