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

#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "acsqc/circuit.hpp"
#include "acsqc/hamiltonian.hpp"
#include "acsqc/logical_recursion.hpp"
#include "acsqc/logical_unitary.hpp"
#include "acsqc/state_vector.hpp"
#include "acsqc/symbolic_replay.hpp"

namespace acsqc::cli {

namespace {

PauliString site_op(std::size_t n, std::initializer_list<std::pair<std::size_t, char>> sites) {
    return PauliString::from_sparse(n, sites);
}

std::vector<LogicalPair> chain_inputs(std::size_t n) { return {{site_op(n, {{0, 'X'}, {1, 'Z'}}), site_op(n, {{0, 'Z'}})}}; }
std::vector<LogicalPair> chain_outputs(std::size_t n) { return {{site_op(n, {{n - 1, 'X'}}), site_op(n, {{n - 1, 'Z'}})}}; }

Eigen::MatrixXcd two_wire_target() {
    const Eigen::Matrix2cd h = hadamard_matrix();
    Eigen::MatrixXcd hh(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            hh(r, c) = h(r >> 1, c >> 1) * h(r & 1, c & 1);
        }
    }
    return Eigen::MatrixXcd(czh_matrix()) * hh;
}

// The same chain in the other field picture.
DraggingPlan other_picture(const PlanSetup &setup) {
    const std::size_t n = setup.plan.n_qubits();
    const double delta = setup.plan.delta();
    if (setup.kind == PlanKind::kTwisted) {
        return make_chain_plan(build_chain_h0(n, delta), setup.plan.schedule(), setup.thetas);
    }
    return make_chain_plan(build_twisted_chain(n, delta, *setup.thetas), setup.plan.schedule());
}

}  // namespace

std::string_view to_string(PlanKind kind) {
    switch (kind) {
        case PlanKind::kChain:
            return "chain";
        case PlanKind::kTwisted:
            return "twisted";
        case PlanKind::kPrep:
            return "prep";
        case PlanKind::kTwoWire:
            return "two-wire";
    }
    return "?";
}

PlanKind parse_plan_kind(std::string_view text) {
    for (PlanKind k : {PlanKind::kChain, PlanKind::kTwisted, PlanKind::kPrep, PlanKind::kTwoWire}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown plan '" + std::string(text) + "' (chain, twisted, prep, two-wire)");
}

Eigen::MatrixXcd z_rotation(double theta) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2, 2);
    u(0, 0) = std::polar(1.0, -theta / 2);
    u(1, 1) = std::polar(1.0, theta / 2);
    return u;
}

Eigen::MatrixXcd chain_target(const RotationProfile &thetas) {
    const Eigen::MatrixXcd h = hadamard_matrix();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    for (std::size_t k = 0; k + 1 < thetas.size(); ++k) {
        m = z_rotation(thetas[k + 1]) * h * m;
    }
    return m;
}

PauliString prep_symmetry(std::size_t n) { return chain_stabilizer(n, 0) * chain_stabilizer(n, 2); }

PlanSetup make_setup(PlanKind kind, std::size_t n, const std::vector<double> &thetas, Schedule schedule, double delta) {
    PlanSetup s{kind, make_chain_plan(build_chain_h0(2, delta), schedule), {}, {}, {}, std::nullopt, false};
    if (!thetas.empty() && (kind == PlanKind::kPrep || kind == PlanKind::kTwoWire)) {
        throw std::invalid_argument("thetas only apply to the chain and twisted plans");
    }
    if (!thetas.empty()) {
        if (thetas.size() != n) {
            throw std::invalid_argument("expected " + std::to_string(n) + " thetas, got " + std::to_string(thetas.size()));
        }
        s.thetas = RotationProfile(thetas);
    }
    switch (kind) {
        case PlanKind::kChain:
            s.plan = make_chain_plan(build_chain_h0(n, delta), schedule, s.thetas);
            s.symbolic = !s.thetas || s.thetas->all_zero();
            break;
        case PlanKind::kTwisted:
            if (!s.thetas) {
                s.thetas = RotationProfile::zeros(n);
            }
            s.plan = make_chain_plan(build_twisted_chain(n, delta, *s.thetas), schedule);
            break;
        case PlanKind::kPrep:
            s.plan = make_chain_plan(build_prep_chain(n, delta), schedule, std::nullopt, 2);
            s.symbolic = true;
            return s;
        case PlanKind::kTwoWire:
            s.plan = make_two_qubit_plan(build_two_qubit_h2(delta), schedule);
            s.in_logicals = {{site_op(6, {{0, 'X'}, {1, 'Z'}}), site_op(6, {{0, 'Z'}})},
                {site_op(6, {{3, 'X'}, {4, 'Z'}}), site_op(6, {{3, 'Z'}})}};
            s.out_logicals = {{site_op(6, {{2, 'X'}}), site_op(6, {{2, 'Z'}})}, {site_op(6, {{5, 'X'}}), site_op(6, {{5, 'Z'}})}};
            s.target = two_wire_target();
            s.symbolic = true;
            return s;
    }
    s.in_logicals = chain_inputs(n);
    s.out_logicals = chain_outputs(n);
    s.target = chain_target(s.thetas ? *s.thetas : RotationProfile::zeros(n));
    return s;
}

double worst_generator_deficit(const PlanSetup &setup, const EvolveOptions &options) {
    const auto &plan = setup.plan;
    const auto replay = replay_symbolic(plan, initial_frame(plan, setup.in_logicals));
    const auto ground = ground_space_basis(plan.initial_hamiltonian(), setup.in_logicals);
    EvolveOptions opts = options;
    opts.record_step_states = true;
    opts.compute_leakage = false;
    const auto report = evolve_state(plan, StateVector::normalized(plan.n_qubits(), ground.basis.col(0)), opts);
    double worst = 0.0;
    for (std::size_t k = 0; k < plan.step_count(); ++k) {
        for (const auto &g : replay.frames[k].generators()) {
            worst = std::max(worst, std::abs(expectation(PauliSum(g), report.step_states[k]) - 1.0));
        }
    }
    return worst;
}

EvolveResult run_evolve(const PlanSetup &setup, const EvolveRequest &request) {
    EvolveResult out;
    const auto &plan = setup.plan;
    if (setup.kind == PlanKind::kPrep) {
        const auto ground = ground_space_basis(plan.initial_hamiltonian(), {});
        const auto report = evolve_state(plan, StateVector::normalized(plan.n_qubits(), ground.basis.col(0)), request.evolve);
        out.leakage = report.leakage;
        out.final_state = report.final_state.amplitudes();
        const auto last = replay_symbolic(plan, initial_frame(plan, {})).frames.back();
        for (const auto &g : last.generators()) {
            out.final_expectations.emplace_back(
                g.sparse_str(), expectation(PauliSum(g), report.final_state.amplitudes()).real());
        }
    } else {
        const auto u = induced_logical_unitary(plan, setup.in_logicals, setup.out_logicals, request.evolve);
        out.induced = u.matrix;
        out.leakage = u.leakage;
        out.fidelity = process_fidelity(u.matrix, setup.target);
        if (setup.thetas && !setup.thetas->all_zero()) {
            const auto other = induced_logical_unitary(other_picture(setup), setup.in_logicals, setup.out_logicals, request.evolve);
            out.picture_agreement = process_fidelity(u.matrix, other.matrix);
        }
        if (request.compare_schedules) {
            Schedule flipped = plan.schedule();
            flipped.shape = flipped.shape == ScheduleShape::kLinear ? ScheduleShape::kSmooth : ScheduleShape::kLinear;
            const auto other =
                induced_logical_unitary(plan.with_schedule(flipped), setup.in_logicals, setup.out_logicals, request.evolve);
            out.schedule_agreement = process_fidelity(u.matrix, other.matrix);
        }
    }
    if (setup.symbolic && request.check_generators) {
        out.generator_deficit = worst_generator_deficit(setup, request.evolve);
    }
    return out;
}

GapScanRun run_gap_scan(const PlanSetup &setup, std::size_t samples_per_step) {
    GapScanOptions opts;
    opts.samples_per_step = samples_per_step;
    GapScanRun run;
    if (setup.kind != PlanKind::kPrep) {
        run.result = gap_scan(setup.plan, opts);
        return run;
    }
    run.plain = gap_scan(setup.plan, opts);
    opts.sector = GapSector{prep_symmetry(setup.plan.n_qubits()), 1};
    run.result = gap_scan(setup.plan, opts);
    return run;
}

SymbolicRun run_symbolic(const PlanSetup &setup) {
    if (!setup.symbolic) {
        throw std::invalid_argument("symbolic replay needs plain X fields: use the chain plan without thetas, prep or two-wire");
    }
    auto replay = replay_symbolic(setup.plan, initial_frame(setup.plan, setup.in_logicals));
    SymbolicRun run{std::move(replay.frames), std::move(replay.consumed), {}};
    const auto &last = run.frames.back();
    for (const auto &pair : last.logicals()) {
        run.final_logicals.push_back({canonicalize_logical(last, pair.x_op), canonicalize_logical(last, pair.z_op)});
    }
    return run;
}

double random_frame_gate_error(std::uint64_t seed, std::size_t count, std::size_t max_n) {
    if (max_n < 3) {
        throw std::invalid_argument("frame gate check needs n >= 3");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(3, max_n);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = pick_n(rng);
        std::vector<double> thetas(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            thetas[i] = angle(rng);
        }
        const RotationProfile profile(thetas);
        for (std::size_t site = 0; site + 3 <= n; ++site) {
            worst = std::max(worst, frame_gate_check(site, profile).max_coefficient_error);
        }
    }
    return worst;
}

CircuitRun run_compile(std::string_view circuit_text, std::size_t max_physical) {
    CircuitRun run{parse_circuit(circuit_text), {}, std::nullopt};
    run.layout = compile_layout(run.ir, {.max_physical = max_physical});
    return run;
}

CircuitRun run_verify(std::string_view circuit_text, const EmitOptions &emit, double t_step,
    std::optional<std::string_view> oracle_text, std::size_t max_physical) {
    auto run = run_compile(circuit_text, max_physical);
    const auto emitted = emit_plan(run.layout, emit);
    const CircuitIR oracle_ir = oracle_text ? parse_circuit(*oracle_text) : run.ir;
    if (oracle_ir.qubits != run.ir.qubits || oracle_ir.prepared != run.ir.prepared) {
        throw std::invalid_argument("oracle circuit must declare the same wires and preparations");
    }
    run.report = verify_plan(emitted, expected_isometry(oracle_ir, run.layout), t_step);
    return run;
}

}  // namespace acsqc::cli
