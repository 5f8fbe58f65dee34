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

#include "acsqc/evolution.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "acsqc/errors.hpp"
#include "acsqc/spectrum.hpp"

namespace acsqc {
namespace {

constexpr Complex kMinusI{0.0, -1.0};

// Step Hamiltonian split as H(s) = base + f(s) off + g(s) on, plus the scalar shift
// sum_t |w_t(s)| that puts the frustration-free ground energy near zero. The shift only
// changes the global phase.
struct StepOperators {
    CompiledOperator base;
    CompiledOperator off;
    CompiledOperator on;
    double base_bound = 0;
    double off_bound = 0;
    double on_bound = 0;

    StepOperators(const DraggingPlan &plan, std::size_t step) {
        const auto &terms = plan.terms();
        PauliSum b(plan.n_qubits()), f(plan.n_qubits()), g(plan.n_qubits());
        for (std::size_t t : plan.untouched_terms(step)) {
            b = b + terms[t].weight * terms[t].op;
            base_bound += std::abs(terms[t].weight) * terms[t].op.one_norm();
        }
        for (std::size_t t : plan.steps()[step].turn_off) {
            f = f + terms[t].weight * terms[t].op;
            off_bound += std::abs(terms[t].weight) * terms[t].op.one_norm();
        }
        for (std::size_t t : plan.steps()[step].turn_on) {
            g = g + terms[t].weight * terms[t].op;
            on_bound += std::abs(terms[t].weight) * terms[t].op.one_norm();
        }
        base = compile(b);
        off = compile(f);
        on = compile(g);
    }

    static CompiledOperator compile(const PauliSum &p) { return CompiledOperator(p); }

    double bound() const { return base_bound + off_bound + on_bound; }

    // Weighted combination sum_k c_k H(s_k), returned with its scalar shift.
    CompiledOperator mix(const Schedule &schedule, std::span<const double> coeffs, std::span<const double> s,
        double &shift) const {
        double wb = 0, wf = 0, wg = 0;
        shift = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const double f = schedule.f(s[k]);
            const double g = schedule.g(s[k]);
            wb += coeffs[k];
            wf += coeffs[k] * f;
            wg += coeffs[k] * g;
            shift += coeffs[k] * (base_bound + f * off_bound + g * on_bound);
        }
        const std::array<std::pair<double, const CompiledOperator *>, 3> parts{
            std::pair{wb, &base}, std::pair{wf, &off}, std::pair{wg, &on}};
        return CompiledOperator::combine(parts);
    }
};

// v <- exp(-i tau (A + shift)) v by Taylor series, summed until the terms drop below rounding.
void apply_exponential(const CompiledOperator &a, double shift, double tau, Eigen::Ref<Eigen::VectorXcd> v,
    Eigen::VectorXcd &term, Eigen::VectorXcd &scratch) {
    term = v;
    const double scale = v.norm();
    for (int k = 1; k <= 80; ++k) {
        a.apply(term, scratch);
        scratch += shift * term;
        term = (kMinusI * (tau / k)) * scratch;
        v += term;
        if (term.norm() <= 1e-17 * scale) {
            return;
        }
    }
    throw std::runtime_error("Taylor series for the propagator did not converge");
}

void check_drift(const Eigen::MatrixXcd &block, const Eigen::VectorXd &initial_norms, double budget, double &drift,
    std::size_t step) {
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
        const double d = std::abs(block.col(c).norm() - initial_norms[c]);
        drift = std::max(drift, d);
        if (!(d <= budget)) {
            throw NormDriftError(fmt::format(
                "norm-drift budget exceeded after step {}: drift {:.3e} > {:.3e}", step, d, budget));
        }
    }
}

std::size_t evolve_in_place(const DraggingPlan &plan, Eigen::MatrixXcd &block, const EvolveOptions &options,
    std::vector<Eigen::MatrixXcd> *step_blocks, double &drift) {
    if (!(options.max_dt > 0)) {
        throw std::invalid_argument("max_dt must be positive");
    }
    const Eigen::VectorXd initial_norms = block.colwise().norm().transpose();
    const Schedule &schedule = plan.schedule();
    const double t_step = schedule.t_step;
    std::size_t total_steps = 0;
    Eigen::VectorXcd term(block.rows()), scratch(block.rows());
    Eigen::VectorXcd k1(block.rows()), k2(block.rows()), k3(block.rows()), k4(block.rows()), tmp(block.rows());

    static const double kRoot3Over6 = std::sqrt(3.0) / 6.0;
    const std::array<double, 2> nodes{0.5 - kRoot3Over6, 0.5 + kRoot3Over6};
    const std::array<double, 2> first{0.25 + kRoot3Over6, 0.25 - kRoot3Over6};
    const std::array<double, 2> second{0.25 - kRoot3Over6, 0.25 + kRoot3Over6};

    for (std::size_t step = 0; step < plan.step_count(); ++step) {
        const StepOperators ops(plan, step);
        const double bound = std::max(ops.bound(), 1e-12);
        const double dt_target = std::min(options.max_dt, 0.5 / bound);
        const auto n_sub = static_cast<std::size_t>(std::ceil(t_step / dt_target - 1e-12));
        const double dt = t_step / static_cast<double>(n_sub);
        for (std::size_t k = 0; k < n_sub; ++k) {
            const double t0 = static_cast<double>(k) * dt;
            if (options.integrator == Integrator::kMagnus4) {
                const std::array<double, 2> s{(t0 + nodes[0] * dt) / t_step, (t0 + nodes[1] * dt) / t_step};
                double shift1 = 0, shift2 = 0;
                const CompiledOperator a1 = ops.mix(schedule, first, s, shift1);
                const CompiledOperator a2 = ops.mix(schedule, second, s, shift2);
                for (Eigen::Index c = 0; c < block.cols(); ++c) {
                    apply_exponential(a1, shift1, dt, block.col(c), term, scratch);
                    apply_exponential(a2, shift2, dt, block.col(c), term, scratch);
                }
            } else {
                const std::array<double, 1> one{1.0};
                double sh0 = 0, sh_half = 0, sh1 = 0;
                const std::array<double, 1> s0{t0 / t_step}, s_half{(t0 + dt / 2) / t_step},
                    s1{(t0 + dt) / t_step};
                const CompiledOperator h0 = ops.mix(schedule, one, s0, sh0);
                const CompiledOperator h_half = ops.mix(schedule, one, s_half, sh_half);
                const CompiledOperator h1 = ops.mix(schedule, one, s1, sh1);
                auto deriv = [&](const CompiledOperator &h, double sh, const Eigen::VectorXcd &x, Eigen::VectorXcd &out) {
                    h.apply(x, out);
                    out = kMinusI * (out + sh * x);
                };
                for (Eigen::Index c = 0; c < block.cols(); ++c) {
                    const Eigen::VectorXcd y = block.col(c);
                    deriv(h0, sh0, y, k1);
                    tmp = y + (dt / 2) * k1;
                    deriv(h_half, sh_half, tmp, k2);
                    tmp = y + (dt / 2) * k2;
                    deriv(h_half, sh_half, tmp, k3);
                    tmp = y + dt * k3;
                    deriv(h1, sh1, tmp, k4);
                    block.col(c) = y + (dt / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                }
            }
        }
        total_steps += n_sub;
        check_drift(block, initial_norms, options.norm_budget, drift, step);
        if (step_blocks != nullptr) {
            step_blocks->push_back(block);
        }
    }
    return total_steps;
}

}  // namespace

double leakage_from_ground_space(const HamiltonianSpec &h, const Eigen::VectorXcd &state) {
    const Eigen::MatrixXcd m = dense_matrix(h);
    const Spectrum spec = low_spectrum(m, static_cast<std::size_t>(m.rows()), true);
    const auto d = static_cast<Eigen::Index>(ground_degeneracy(spec.values));
    const Eigen::VectorXcd overlap = spec.vectors.leftCols(d).adjoint() * state;
    return std::max(0.0, 1.0 - overlap.squaredNorm() / state.squaredNorm());
}

EvolutionReport evolve_state(const DraggingPlan &plan, const StateVector &initial, const EvolveOptions &options) {
    if (initial.n_qubits() != plan.n_qubits()) {
        throw std::invalid_argument(
            fmt::format("state has {} qubits, plan has {}", initial.n_qubits(), plan.n_qubits()));
    }
    const auto start = std::chrono::steady_clock::now();
    EvolutionReport report;
    Eigen::MatrixXcd block = initial.amplitudes();
    std::vector<Eigen::MatrixXcd> steps;
    report.time_steps =
        evolve_in_place(plan, block, options, options.record_step_states ? &steps : nullptr, report.norm_drift);
    for (auto &s : steps) {
        report.step_states.emplace_back(s.col(0));
    }
    report.final_state = StateVector::normalized(plan.n_qubits(), block.col(0));
    if (options.compute_leakage) {
        report.leakage = leakage_from_ground_space(plan.final_hamiltonian(), report.final_state.amplitudes());
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Eigen::MatrixXcd evolve_block(const DraggingPlan &plan, const Eigen::MatrixXcd &columns, const EvolveOptions &options,
    std::vector<Eigen::MatrixXcd> *step_blocks) {
    if (columns.rows() != (Eigen::Index{1} << plan.n_qubits())) {
        throw std::invalid_argument("block row count does not match the plan");
    }
    Eigen::MatrixXcd block = columns;
    double drift = 0;
    evolve_in_place(plan, block, options, step_blocks, drift);
    return block;
}

}  // namespace acsqc
