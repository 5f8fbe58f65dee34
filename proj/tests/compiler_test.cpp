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

#include "acsqc/compiler.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "acsqc/errors.hpp"
#include "acsqc/logical_unitary.hpp"
#include "acsqc/symbolic_replay.hpp"
#include "oracles/dense_pauli.hpp"

using namespace acsqc;

namespace {

PauliString P(const char *text) { return PauliString::from_str(text); }

constexpr const char *kCzhCircuit = "h q0\nhrot 0.785398 q1\nczh q0 q1";

VerificationReport verify_text(const char *text, const EmitOptions &emit = {}, const CompileOptions &compile = {}) {
    const auto ir = parse_circuit(text);
    const auto layout = compile_layout(ir, compile);
    const auto emitted = emit_plan(layout, emit);
    return verify_plan(emitted, expected_isometry(ir, layout), 50.0);
}

}  // namespace

TEST(compile_layout, single_wire_shapes) {
    const auto plain = compile_layout(parse_circuit("h q0\nh q0"));
    EXPECT_EQ(plain.n_qubits(), 3u);
    EXPECT_EQ(plain.sites[0].role, SiteRole::kGate);
    EXPECT_EQ(plain.sites[2].role, SiteRole::kOutput);
    EXPECT_EQ(plain.hadamard_parity, std::vector<int>{0});
    EXPECT_EQ(plain.step_groups, (std::vector<std::vector<std::size_t>>{{0}, {1}}));

    const auto rot = compile_layout(parse_circuit("hrot 0.5 q0"));
    EXPECT_EQ(rot.n_qubits(), 3u);
    EXPECT_EQ(rot.sites[0].role, SiteRole::kForcedH);
    EXPECT_EQ(rot.sites[1].theta, 0.5);
    EXPECT_EQ(rot.hadamard_parity, std::vector<int>{1});

    const auto padded = compile_layout(parse_circuit("hrot 0.5 q0"), {.pad_inputs = true});
    EXPECT_EQ(padded.n_qubits(), 4u);
    EXPECT_EQ(padded.sites[1].role, SiteRole::kPadH);
    EXPECT_EQ(padded.hadamard_parity, std::vector<int>{0});

    const auto idle = compile_layout(parse_circuit("qubits 2\nh q0"));
    EXPECT_EQ(idle.n_qubits(), 3u);
    EXPECT_EQ(idle.input_site[1], idle.output_site[1]);
}

TEST(compile_layout, prepared_wires_always_get_two_fielded_sites) {
    for (const char *text : {"prepx q0\nh q0", "prepx q0\nhrot 0.3 q0", "qubits 2\nprepx q1\nh q0"}) {
        const auto layout = compile_layout(parse_circuit(text));
        const std::size_t w = layout.prepared.size() - 1;
        const auto fielded = layout.output_site[w] - layout.input_site[w];
        EXPECT_GE(fielded, 2u) << text;
        EXPECT_EQ(layout.hadamard_parity[w], 0) << text;
    }
    // Two or more gates already provide them.
    EXPECT_EQ(compile_layout(parse_circuit("prepx q0\nh q0\nh q0")).n_qubits(), 3u);
}

TEST(compile_layout, frozen_czh_layout) {
    const auto layout = compile_layout(parse_circuit(kCzhCircuit));
    EXPECT_EQ(layout.n_qubits(), 7u);
    EXPECT_EQ(layout.input_site, (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(layout.output_site, (std::vector<std::size_t>{2, 6}));
    EXPECT_EQ(layout.hadamard_parity, (std::vector<int>{0, 1}));
    EXPECT_EQ(layout.edges, (std::vector<std::pair<std::size_t, std::size_t>>{
                                {0, 1}, {1, 2}, {1, 5}, {3, 4}, {4, 5}, {5, 6}}));
    EXPECT_EQ(layout.step_groups, (std::vector<std::vector<std::size_t>>{{3}, {0, 4, 1, 5}}));
    EXPECT_EQ(layout.sites[1].role, SiteRole::kLink);
    EXPECT_EQ(layout.sites[4].theta, 0.785398);
    EXPECT_EQ(layout.neighbours(5), (std::vector<std::size_t>{1, 4, 6}));
    EXPECT_EQ(layout.turn_on_order(), (std::vector<std::size_t>{3, 0, 4, 1, 5}));
}

TEST(compile_layout, deterministic_and_budgeted) {
    const auto ir = parse_circuit(kCzhCircuit);
    const auto a = compile_layout(ir);
    const auto b = compile_layout(parse_circuit(ir.str()));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.serialize(), b.serialize());
    EXPECT_NE(a.serialize().find("role=forced-h"), std::string::npos);
    EXPECT_THROW(compile_layout(ir, {.max_physical = 6}), std::length_error);
    EXPECT_NO_THROW(compile_layout(ir, {.max_physical = 7}));
}

TEST(emit_plan, frames_for_two_wire_block) {
    const auto emitted = emit_plan(compile_layout(parse_circuit("czh q0 q1")));
    EXPECT_EQ(emitted.plan.n_qubits(), 6u);
    EXPECT_EQ(emitted.plan.step_count(), 1u);
    EXPECT_EQ(emitted.in_frame.logicals().size(), 2u);
    EXPECT_EQ(emitted.in_frame.logicals()[0].x_op, P("XZ____"));
    EXPECT_EQ(emitted.out_frame.logicals()[1].z_op, P("_____Z"));
    EXPECT_EQ(emitted.in_frame.generators()[0], P("ZXZ_Z_"));
}

TEST(emit_plan, skeleton_replay_matches_circuit) {
    // For theta = 0 circuits the symbolic frame must already carry the oracle's logical action.
    for (const char *text : {"h q0\nh q0", "h q0\nh q0\nh q0", "czh q0 q1", "h q0\nczh q0 q1", "czh q0 q1\nh q1"}) {
        const auto ir = parse_circuit(text);
        const auto layout = compile_layout(ir);
        const auto emitted = emit_plan(layout);
        const auto last = replay_symbolic(emitted.skeleton, emitted.in_frame).frames.back();
        const auto &out = emitted.out_frame.logicals();
        EXPECT_LT(logical_action_residual(expected_isometry(ir, layout), last, out), 1e-12) << text;
    }
}

TEST(emit_plan, pictures_agree) {
    const auto twisted = verify_text("hrot 0.7 q0\nh q0");
    const auto rotated = verify_text("hrot 0.7 q0\nh q0", {.picture = FieldPicture::kRotatedFields});
    EXPECT_GE(twisted.fidelity, 0.999);
    EXPECT_GE(rotated.fidelity, 0.999);
    EXPECT_GE(process_fidelity(twisted.induced, rotated.induced), 0.999);
}

TEST(verify_plan, single_gate_corpus) {
    for (const char *text : {"h q0", "hrot 0 q0", "hrot 0.785398 q0", "hrot 1.5707963 q0", "hrot -2.1 q0",
             "prepx q0\nh q0", "prepx q0\nhrot 0.5 q0", "qubits 1\nprepx q0"}) {
        const auto r = verify_text(text);
        EXPECT_GE(r.fidelity, 0.999) << text;
        EXPECT_LT(r.leakage, 1e-3) << text;
    }
}

TEST(verify_plan, gate_pair_corpus) {
    for (const char *text : {"h q0\nh q0", "h q0\nhrot 0.785398 q0", "hrot 0.3 q0\nhrot 1.1 q0", "prepx q0\nh q0\nh q0",
             "czh q0 q1", "czh q1 q0", "prepx q0\nczh q0 q1", "czh q0 q1\nh q0"}) {
        const auto r = verify_text(text);
        EXPECT_GE(r.fidelity, 0.999) << text;
    }
}

TEST(verify_plan, end_to_end_two_qubit_circuit) {
    const auto r = verify_text(kCzhCircuit);
    EXPECT_GE(r.fidelity, 0.99);
    EXPECT_EQ(r.min_gaps.size(), 2u);
    for (double g : r.min_gaps) {
        EXPECT_GT(g, 0.5);
    }
    EXPECT_EQ(r.t_step, 50.0);
    EXPECT_EQ(r.induced.rows(), 4);
}

TEST(verify_plan, hrot_order_is_h_after_rotation) {
    const double t = std::numbers::pi / 2;
    const auto ir = parse_circuit("hrot 1.5707963267948966 q0");
    const auto layout = compile_layout(ir);
    const auto r = verify_plan(emit_plan(layout), expected_isometry(ir, layout), 50.0);
    // Forced-H parity puts an H on the input: H U H is what the layout should realise.
    const Eigen::MatrixXcd h = oracle::hadamard();
    const Eigen::MatrixXcd u = oracle::z_rotation(t);
    EXPECT_GE(process_fidelity(r.induced, h * u * h), 0.999);
    EXPECT_LT(process_fidelity(r.induced, u * h * h), 0.6);
}

TEST(verify_plan, wrong_oracle_is_rejected) {
    const auto ir = parse_circuit(kCzhCircuit);
    const auto layout = compile_layout(ir);
    const auto emitted = emit_plan(layout);
    const auto wrong_ir = parse_circuit("h q0\nhrot 0.785398 q1");
    const auto wrong = expected_isometry(wrong_ir, layout);
    EXPECT_LT(verify_plan(emitted, wrong, 50.0).fidelity, 0.6);
    EXPECT_THROW(verify_plan(emitted, Eigen::MatrixXcd::Identity(2, 2), 50.0), std::invalid_argument);
}

TEST(verify_plan, diabatic_run_leaks) {
    const auto ir = parse_circuit("h q0\nh q0");
    const auto layout = compile_layout(ir);
    const auto r = verify_plan(emit_plan(layout), expected_isometry(ir, layout), 0.1);
    EXPECT_GT(r.leakage, 0.1);
}
