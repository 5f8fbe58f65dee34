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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acsqc/hamiltonian.hpp"
#include "acsqc/rotation_profile.hpp"

namespace acsqc {

enum class ScheduleShape { kLinear, kSmooth };

std::string_view to_string(ScheduleShape shape);
/// "linear" or "smooth"; throws std::invalid_argument otherwise.
ScheduleShape parse_schedule_shape(std::string_view text);

/// Interpolation H(s) = f(s) H_off + g(s) H_on with s = t / t_step, f(0) = g(1) = 1 and
/// f(1) = g(0) = 0. Linear: f = 1 - s. Smooth: f = cos^2(pi s / 2). Always g = 1 - f.
struct Schedule {
    ScheduleShape shape = ScheduleShape::kLinear;
    /// Duration of one dragging step in units of 1/delta.
    double t_step = 50.0;

    double f(double s) const;
    double g(double s) const { return 1.0 - f(s); }
};

struct DraggingStep {
    std::vector<std::size_t> turn_off;  // indices into DraggingPlan::terms()
    std::vector<std::size_t> turn_on;
};

/// Step description handed to make_plan: indices of existing terms to switch off (into the
/// initial spec, or terms added by earlier steps) and new terms to switch on.
struct StepSpec {
    std::vector<std::size_t> turn_off;
    std::vector<HamiltonianTerm> turn_on;
};

/// A piecewise time-dependent Hamiltonian. All terms live in one pool: the initial terms first
/// (in the initial spec's order), then each step's new terms. Within a step every listed term
/// ramps together under the schedule; untouched active terms stay at full weight.
class DraggingPlan {
   public:
    std::size_t n_qubits() const noexcept { return n_qubits_; }
    double delta() const noexcept { return delta_; }
    const std::vector<HamiltonianTerm> &terms() const noexcept { return terms_; }
    const std::vector<DraggingStep> &steps() const noexcept { return steps_; }
    std::size_t step_count() const noexcept { return steps_.size(); }
    const Schedule &schedule() const noexcept { return schedule_; }
    std::size_t initial_term_count() const noexcept { return initial_count_; }

    DraggingPlan with_schedule(Schedule schedule) const;

    /// Active-term mask before `step` (step == step_count() gives the final mask).
    std::vector<bool> active_before(std::size_t step) const;
    /// Active terms before `step` that the step leaves alone.
    std::vector<std::size_t> untouched_terms(std::size_t step) const;

    HamiltonianSpec initial_hamiltonian() const { return hamiltonian_before(0); }
    HamiltonianSpec final_hamiltonian() const { return hamiltonian_before(steps_.size()); }
    HamiltonianSpec hamiltonian_before(std::size_t step) const;
    /// H(s) during `step`, with ramped terms scaled by f(s) and g(s).
    HamiltonianSpec hamiltonian_at(std::size_t step, double s) const;

   private:
    friend DraggingPlan make_plan(const HamiltonianSpec &, std::vector<StepSpec>, Schedule);
    std::size_t n_qubits_ = 0;
    double delta_ = 1.0;
    std::vector<HamiltonianTerm> terms_;
    std::size_t initial_count_ = 0;
    std::vector<DraggingStep> steps_;
    Schedule schedule_;
};

/// Validates and assembles a plan. Throws std::invalid_argument when a turned-off term is not
/// active, a term is listed twice, a new term has the wrong size, or the schedule is invalid.
DraggingPlan make_plan(const HamiltonianSpec &initial, std::vector<StepSpec> steps, Schedule schedule);

/// True when A B + B A = 0.
bool anticommute(const PauliSum &a, const PauliSum &b);

/// Builds a plan from groups of fields: step k turns on every field in `field_groups[k]` and
/// turns off every active term that anticommutes with at least one of them. Throws
/// std::invalid_argument if a group would turn nothing off.
DraggingPlan make_field_plan(
    const HamiltonianSpec &initial, const std::vector<std::vector<HamiltonianTerm>> &field_groups, Schedule schedule);

/// Field -delta X_site (theta == 0) or -delta M(-theta) on a site, labelled "X{site+1}"/"M{site+1}".
HamiltonianTerm field_term(std::size_t n_qubits, std::size_t site, double delta, double theta = 0.0);

/// Chain plan: fields on sites 0..n-2 in order, one per step, each turning off the terms it
/// anticommutes with. With `field_angles` the fields are M(-theta_i) instead of X_i.
/// `max_steps` > 0 stops after that many fields.
DraggingPlan make_chain_plan(const HamiltonianSpec &chain, Schedule schedule,
    const std::optional<RotationProfile> &field_angles = std::nullopt, std::size_t max_steps = 0);

/// The single simultaneous step for the two-wire Hamiltonian: on X1a, X2a, X1b, X2b; off all four terms.
DraggingPlan make_two_qubit_plan(const HamiltonianSpec &h2, Schedule schedule);

}  // namespace acsqc
