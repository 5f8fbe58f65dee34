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

#include "acsqc/symbolic_replay.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "acsqc/errors.hpp"
#include "acsqc/evolution.hpp"
#include "acsqc/logical_unitary.hpp"
#include "test_support.hpp"

using namespace acsqc;

namespace {

PauliString P(const char *text) { return PauliString::from_str(text); }

PauliString S(std::size_t n, std::initializer_list<std::pair<std::size_t, char>> sites) {
    return PauliString::from_sparse(n, sites);
}

std::vector<LogicalPair> chain_in(std::size_t n) { return {{S(n, {{0, 'X'}, {1, 'Z'}}), S(n, {{0, 'Z'}})}}; }
std::vector<LogicalPair> chain_out(std::size_t n) { return {{S(n, {{n - 1, 'X'}}), S(n, {{n - 1, 'Z'}})}}; }

std::vector<LogicalPair> two_wire_in() {
    return {{S(6, {{0, 'X'}, {1, 'Z'}}), S(6, {{0, 'Z'}})}, {S(6, {{3, 'X'}, {4, 'Z'}}), S(6, {{3, 'Z'}})}};
}

// Evolve |0..0>_L and check every symbolic generator after every step.
double worst_generator_deficit(const DraggingPlan &plan, const std::vector<LogicalPair> &logicals) {
    const auto start = initial_frame(plan, logicals);
    const auto replay = replay_symbolic(plan, start);
    const auto ground = ground_space_basis(plan.initial_hamiltonian(), logicals);
    EvolveOptions opts;
    opts.record_step_states = true;
    opts.compute_leakage = false;
    const auto report = evolve_state(plan, StateVector::normalized(plan.n_qubits(), ground.basis.col(0)), opts);
    double worst = 0.0;
    for (std::size_t k = 0; k < plan.step_count(); ++k) {
        for (const auto &g : replay.frames[k].generators()) {
            const Complex e = expectation(PauliSum(g), report.step_states[k]);
            worst = std::max(worst, std::abs(e - 1.0));
        }
    }
    return worst;
}

}  // namespace

TEST(term_generator, sign_and_shape) {
    EXPECT_EQ(term_generator({"S", -1.0, PauliSum(P("ZX"))}), P("ZX"));
    EXPECT_EQ(term_generator({"S", 2.0, PauliSum(P("ZX"))}), P("-ZX"));
    EXPECT_EQ(term_generator({"S", -1.0, PauliSum(P("-ZX"))}), P("-ZX"));
    EXPECT_THROW(term_generator({"T", -1.0, rotated_field(2, 0, 0.3)}), FrameError);
    EXPECT_THROW(term_generator({"S", -1.0, PauliSum(P("ZX"), 0.5)}), FrameError);
}

TEST(replay_symbolic, chain_ends_in_field_frame) {
    const std::size_t n = 4;
    const auto plan = make_chain_plan(build_chain_h0(n), Schedule{});
    const auto replay = replay_symbolic(plan, initial_frame(plan, chain_in(n)));
    ASSERT_EQ(replay.frames.size(), 3u);
    const auto &last = replay.frames.back();
    EXPECT_EQ(last.generators(), (std::vector<PauliString>{P("X___"), P("_X__"), P("__X_")}));
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(replay.consumed[k], std::vector<std::size_t>{k});
    }
    // Even length: the logical X ends up as Z on the last site and vice versa.
    EXPECT_EQ(canonicalize_logical(last, last.logicals()[0].x_op), P("___Z"));
    EXPECT_EQ(canonicalize_logical(last, last.logicals()[0].z_op), P("___X"));

    const auto odd = make_chain_plan(build_chain_h0(5), Schedule{});
    const auto odd_last = replay_symbolic(odd, initial_frame(odd, chain_in(5))).frames.back();
    EXPECT_EQ(canonicalize_logical(odd_last, odd_last.logicals()[0].x_op), P("____X"));
    EXPECT_EQ(canonicalize_logical(odd_last, odd_last.logicals()[0].z_op), P("____Z"));
}

TEST(replay_symbolic, two_wire_logicals) {
    const auto plan = make_two_qubit_plan(build_two_qubit_h2(), Schedule{});
    const auto replay = replay_symbolic(plan, initial_frame(plan, two_wire_in()));
    const auto &last = replay.frames.back();
    ASSERT_EQ(replay.consumed[0].size(), 4u);
    EXPECT_EQ(canonicalize_logical(last, last.logicals()[0].x_op), P("__X___"));
    EXPECT_EQ(canonicalize_logical(last, last.logicals()[0].z_op), P("__Z__X"));
    EXPECT_EQ(canonicalize_logical(last, last.logicals()[1].x_op), P("_____X"));
    EXPECT_EQ(canonicalize_logical(last, last.logicals()[1].z_op), P("__X__Z"));
}

TEST(replay_symbolic, prep_chain_generators) {
    const auto plan = make_chain_plan(build_prep_chain(4), Schedule{}, std::nullopt, 2);
    const auto replay = replay_symbolic(plan, initial_frame(plan, {}));
    const auto &last = replay.frames.back();
    EXPECT_EQ(replay.consumed[1], std::vector<std::size_t>{2});
    EXPECT_EQ(last.generators(), (std::vector<PauliString>{P("X_XZ"), P("X___"), P("_X__"), P("__ZX")}));
}

TEST(replay_symbolic, rejects_foreign_start) {
    const auto plan = make_chain_plan(build_chain_h0(3), Schedule{});
    const auto wrong = frame_new({P("-ZXZ"), P("_ZX")}, {{P("XZ_"), P("Z__")}});
    EXPECT_THROW(replay_symbolic(plan, wrong), FrameError);
    const auto twisted = make_chain_plan(build_twisted_chain(3, 1.0, RotationProfile({0, 0.4, 0})), Schedule{});
    EXPECT_THROW(initial_frame(twisted, chain_in(3)), FrameError);
}

TEST(logical_word, str_and_matrix) {
    LogicalWord w{0, {true, false}, {false, true}};
    EXPECT_EQ(w.str(), "+X1 Z2");
    LogicalWord y{3, {true}, {true}};
    EXPECT_EQ(y.str(), "-iXZ1");
    // -i X Z = -i (-i Y) = -Y.
    Eigen::Matrix2cd minus_y;
    minus_y << 0, Complex(0, 1), Complex(0, -1), 0;
    EXPECT_LT((y.matrix() - minus_y).norm(), 1e-15);
    EXPECT_EQ(LogicalWord({2, {false}, {false}}).str(), "-I");
}

TEST(to_logical_word, reads_frame_coordinates) {
    const auto frame = frame_new({P("X_____"), P("_X____"), P("___X__"), P("____X_")},
        {{P("__X___"), P("__Z___")}, {P("_____X"), P("_____Z")}});
    const auto w = to_logical_word(frame, P("_XZ__X"));
    EXPECT_EQ(w.str(), "+Z1 X2");
    const auto y = to_logical_word(frame, P("__Y___"));
    EXPECT_EQ(y.phase_exponent, 1);
    EXPECT_TRUE(y.x[0] && y.z[0]);
    EXPECT_THROW(to_logical_word(frame, P("Z_____")), FrameError);
}

TEST(logical_action_residual, exact_gates_have_zero_residual) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto plan = make_chain_plan(build_chain_h0(n), Schedule{});
        const auto last = replay_symbolic(plan, initial_frame(plan, chain_in(n))).frames.back();
        const auto out = chain_out(n);
        EXPECT_LT(logical_action_residual(testkit::hadamard_power(n - 1), last, out), 1e-12) << "n=" << n;
        EXPECT_GT(logical_action_residual(testkit::hadamard_power(n), last, out), 0.5) << "n=" << n;
    }
}

TEST(symbolic_numeric, generators_hold_after_every_step) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto plan = make_chain_plan(build_chain_h0(n), Schedule{});
        EXPECT_LE(worst_generator_deficit(plan, chain_in(n)), 1e-3) << "n=" << n;
    }
    const auto prep = make_chain_plan(build_prep_chain(4), Schedule{}, std::nullopt, 2);
    EXPECT_LE(worst_generator_deficit(prep, {}), 1e-3);
    const auto two = make_two_qubit_plan(build_two_qubit_h2(), Schedule{});
    EXPECT_LE(worst_generator_deficit(two, two_wire_in()), 1e-3);
}

TEST(symbolic_numeric, longer_steps_tighten_agreement) {
    const auto plan = make_chain_plan(build_chain_h0(4), Schedule{ScheduleShape::kLinear, 20.0});
    const double short_run = worst_generator_deficit(plan, chain_in(4));
    const double long_run = worst_generator_deficit(plan.with_schedule({ScheduleShape::kLinear, 80.0}), chain_in(4));
    EXPECT_LT(long_run, short_run);
}
