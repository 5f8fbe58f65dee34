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

#include "acsqc/dragging_plan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace acsqc {

std::string_view to_string(ScheduleShape shape) { return shape == ScheduleShape::kLinear ? "linear" : "smooth"; }

ScheduleShape parse_schedule_shape(std::string_view text) {
    if (text == "linear") {
        return ScheduleShape::kLinear;
    }
    if (text == "smooth") {
        return ScheduleShape::kSmooth;
    }
    throw std::invalid_argument(fmt::format("unknown schedule shape '{}'", text));
}

double Schedule::f(double s) const {
    if (s <= 0) {
        return 1.0;
    }
    if (s >= 1) {
        return 0.0;
    }
    if (shape == ScheduleShape::kLinear) {
        return 1.0 - s;
    }
    const double c = std::cos(std::numbers::pi * s / 2);
    return c * c;
}

DraggingPlan DraggingPlan::with_schedule(Schedule schedule) const {
    if (!(schedule.t_step > 0) || !std::isfinite(schedule.t_step)) {
        throw std::invalid_argument("schedule t_step must be positive and finite");
    }
    DraggingPlan p = *this;
    p.schedule_ = schedule;
    return p;
}

std::vector<bool> DraggingPlan::active_before(std::size_t step) const {
    if (step > steps_.size()) {
        throw std::out_of_range(fmt::format("step {} out of range", step));
    }
    std::vector<bool> active(terms_.size(), false);
    std::fill(active.begin(), active.begin() + static_cast<std::ptrdiff_t>(initial_count_), true);
    for (std::size_t k = 0; k < step; ++k) {
        for (std::size_t t : steps_[k].turn_off) {
            active[t] = false;
        }
        for (std::size_t t : steps_[k].turn_on) {
            active[t] = true;
        }
    }
    return active;
}

std::vector<std::size_t> DraggingPlan::untouched_terms(std::size_t step) const {
    const auto active = active_before(step);
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (active[t] && std::find(steps_[step].turn_off.begin(), steps_[step].turn_off.end(), t) ==
                             steps_[step].turn_off.end()) {
            out.push_back(t);
        }
    }
    return out;
}

HamiltonianSpec DraggingPlan::hamiltonian_before(std::size_t step) const {
    const auto active = active_before(step);
    HamiltonianSpec h(n_qubits_, delta_);
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (active[t]) {
            h.add_term(terms_[t].label, terms_[t].weight, terms_[t].op);
        }
    }
    return h;
}

HamiltonianSpec DraggingPlan::hamiltonian_at(std::size_t step, double s) const {
    if (step >= steps_.size()) {
        throw std::out_of_range(fmt::format("step {} out of range", step));
    }
    HamiltonianSpec h(n_qubits_, delta_);
    for (std::size_t t : untouched_terms(step)) {
        h.add_term(terms_[t].label, terms_[t].weight, terms_[t].op);
    }
    const double f = schedule_.f(s);
    const double g = schedule_.g(s);
    for (std::size_t t : steps_[step].turn_off) {
        if (f != 0) {
            h.add_term(terms_[t].label, f * terms_[t].weight, terms_[t].op);
        }
    }
    for (std::size_t t : steps_[step].turn_on) {
        if (g != 0) {
            h.add_term(terms_[t].label, g * terms_[t].weight, terms_[t].op);
        }
    }
    return h;
}

DraggingPlan make_plan(const HamiltonianSpec &initial, std::vector<StepSpec> steps, Schedule schedule) {
    DraggingPlan plan;
    plan.n_qubits_ = initial.n_qubits();
    plan.delta_ = initial.delta();
    plan.terms_ = initial.terms();
    plan.initial_count_ = initial.term_count();
    plan = plan.with_schedule(schedule);

    std::vector<bool> active(plan.terms_.size(), true);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        DraggingStep step;
        std::vector<std::size_t> off = steps[k].turn_off;
        std::sort(off.begin(), off.end());
        if (std::adjacent_find(off.begin(), off.end()) != off.end()) {
            throw std::invalid_argument(fmt::format("step {} turns the same term off twice", k));
        }
        for (std::size_t t : steps[k].turn_off) {
            if (t >= active.size() || !active[t]) {
                throw std::invalid_argument(fmt::format("step {} turns off term {} which is not active", k, t));
            }
            active[t] = false;
            step.turn_off.push_back(t);
        }
        for (auto &term : steps[k].turn_on) {
            if (term.op.n_qubits() != plan.n_qubits_ || !term.op.is_hermitian()) {
                throw std::invalid_argument(fmt::format("step {} turns on an invalid term {}", k, term.label));
            }
            plan.terms_.push_back(std::move(term));
            active.push_back(true);
            step.turn_on.push_back(plan.terms_.size() - 1);
        }
        if (step.turn_off.empty() && step.turn_on.empty()) {
            throw std::invalid_argument(fmt::format("step {} is empty", k));
        }
        plan.steps_.push_back(std::move(step));
    }
    return plan;
}

bool anticommute(const PauliSum &a, const PauliSum &b) { return (a * b + b * a).pruned(1e-12).empty(); }

DraggingPlan make_field_plan(
    const HamiltonianSpec &initial, const std::vector<std::vector<HamiltonianTerm>> &field_groups, Schedule schedule) {
    // Track the pool the same way make_plan will lay it out.
    std::vector<HamiltonianTerm> pool = initial.terms();
    std::vector<bool> active(pool.size(), true);
    std::vector<StepSpec> steps;
    for (std::size_t k = 0; k < field_groups.size(); ++k) {
        StepSpec step;
        for (std::size_t t = 0; t < pool.size(); ++t) {
            if (!active[t]) {
                continue;
            }
            bool hit = std::any_of(field_groups[k].begin(), field_groups[k].end(),
                [&](const HamiltonianTerm &field) { return anticommute(field.op, pool[t].op); });
            if (hit) {
                step.turn_off.push_back(t);
                active[t] = false;
            }
        }
        if (step.turn_off.empty()) {
            throw std::invalid_argument(fmt::format("field group {} anticommutes with no active term", k));
        }
        for (const auto &field : field_groups[k]) {
            step.turn_on.push_back(field);
            pool.push_back(field);
            active.push_back(true);
        }
        steps.push_back(std::move(step));
    }
    return make_plan(initial, std::move(steps), schedule);
}

HamiltonianTerm field_term(std::size_t n_qubits, std::size_t site, double delta, double theta) {
    if (theta == 0.0) {
        return {fmt::format("X{}", site + 1), -delta, PauliSum(PauliString::single(n_qubits, site, 'X'))};
    }
    return {fmt::format("M{}", site + 1), -delta, rotated_field(n_qubits, site, theta)};
}

DraggingPlan make_chain_plan(const HamiltonianSpec &chain, Schedule schedule,
    const std::optional<RotationProfile> &field_angles, std::size_t max_steps) {
    const std::size_t n = chain.n_qubits();
    if (field_angles && field_angles->size() != n) {
        throw std::invalid_argument("field angle profile length does not match the chain");
    }
    std::vector<std::vector<HamiltonianTerm>> groups;
    const std::size_t count = max_steps == 0 ? n - 1 : std::min(max_steps, n - 1);
    for (std::size_t site = 0; site < count; ++site) {
        groups.push_back({field_term(n, site, chain.delta(), field_angles ? (*field_angles)[site] : 0.0)});
    }
    return make_field_plan(chain, groups, schedule);
}

DraggingPlan make_two_qubit_plan(const HamiltonianSpec &h2, Schedule schedule) {
    if (h2.n_qubits() != 6) {
        throw std::invalid_argument("two-qubit plan expects the six-qubit Hamiltonian");
    }
    std::vector<HamiltonianTerm> fields;
    for (bool b : {false, true}) {
        for (std::size_t column : {0, 1}) {
            auto f = field_term(6, h2_site(column, b), h2.delta());
            f.label = fmt::format("X{}{}", column + 1, b ? 'b' : 'a');
            fields.push_back(std::move(f));
        }
    }
    return make_field_plan(h2, {fields}, schedule);
}

}  // namespace acsqc
