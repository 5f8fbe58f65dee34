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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "acsqc/circuit.hpp"
#include "acsqc/dragging_plan.hpp"
#include "acsqc/evolution.hpp"
#include "acsqc/stabilizer_frame.hpp"

namespace acsqc {

enum class SiteRole {
    kForcedH,  // input site added because the wire's first gate is not a plain h
    kPadH,     // extra H that restores the parity of a prepared wire
    kGate,     // h or hrot
    kLink,     // one wire's half of a czh
    kOutput,   // last site of the wire; never receives a field
};

std::string_view to_string(SiteRole role);

struct LayoutSite {
    std::size_t wire = 0;
    std::size_t column = 0;
    double theta = 0.0;
    SiteRole role = SiteRole::kGate;

    bool operator==(const LayoutSite &) const = default;
};

/// Physical qubits are numbered wire by wire, columns in order, so a czh on two fresh wires
/// gives exactly the six-qubit order (1a, 2a, 3a, 1b, 2b, 3b).
struct ClusterLayout {
    std::size_t logical_qubits = 0;
    std::vector<bool> prepared;
    /// 1 when the wire applies an H before the circuit's first gate.
    std::vector<int> hadamard_parity;
    std::vector<LayoutSite> sites;
    /// Cluster graph edges (a < b): chain links along wires and czh links between wires.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// Fields switched on together, in order. Flattening gives the turn-on order.
    std::vector<std::vector<std::size_t>> step_groups;
    std::vector<std::size_t> input_site;   // per wire
    std::vector<std::size_t> output_site;  // per wire (the wire-end map)

    std::size_t n_qubits() const noexcept { return sites.size(); }
    std::vector<std::size_t> turn_on_order() const;
    std::vector<std::size_t> neighbours(std::size_t site) const;
    /// Stable text form; identical circuits give identical bytes.
    std::string serialize() const;

    bool operator==(const ClusterLayout &) const = default;
};

struct CompileOptions {
    /// Pad unprepared wires so every wire has parity 0.
    bool pad_inputs = false;
    /// Physical qubit budget; 0 means dense_cap().
    std::size_t max_physical = 0;
};

/// Throws std::length_error when the layout exceeds the budget.
ClusterLayout compile_layout(const CircuitIR &ir, const CompileOptions &options = {});

enum class FieldPicture {
    /// Twisted stabilizers with plain X fields.
    kTwisted,
    /// Plain stabilizers with rotated fields M(-theta).
    kRotatedFields,
};

struct EmitOptions {
    double delta = 1.0;
    Schedule schedule;
    FieldPicture picture = FieldPicture::kTwisted;
};

struct EmittedPlan {
    DraggingPlan plan;
    /// Same steps with every angle set to zero; single Pauli words, so it replays symbolically.
    DraggingPlan skeleton;
    /// Generators: untwisted initial stabilizers. Logicals: one pair per unprepared wire.
    StabilizerFrame in_frame;
    /// Generators: final skeleton fields. Logicals: (X, Z) on each wire's output site.
    StabilizerFrame out_frame;
};

/// Hamiltonian terms are K_v = X_v prod_{u ~ v} Z_u for every site except the input site of an
/// unprepared wire, twisted by the site's angle. Throws std::invalid_argument on an
/// inconsistent layout.
EmittedPlan emit_plan(const ClusterLayout &layout, const EmitOptions &options = {});

/// Circuit-model unitary of the gate list (m <= 3).
Eigen::MatrixXcd predicted_unitary(const CircuitIR &ir);

/// What the layout should implement on its labelled bases: predicted_unitary applied after the
/// wires' parity Hadamards, with prepared wires fed |+>. Columns run over the unprepared wires.
Eigen::MatrixXcd expected_isometry(const CircuitIR &ir, const ClusterLayout &layout);

struct VerifyOptions {
    EvolveOptions evolve;
    /// Gap samples per step for the report; 0 skips the scan.
    std::size_t gap_samples = 11;
};

struct VerificationReport {
    double fidelity = 0.0;
    double leakage = 0.0;
    std::vector<double> min_gaps;
    Eigen::MatrixXcd induced;
    double t_step = 0.0;
};

/// Evolves the labelled input basis through the plan and compares with `oracle`.
VerificationReport verify_plan(const EmittedPlan &emitted, const Eigen::MatrixXcd &oracle, double t_step,
    const VerifyOptions &options = {});

}  // namespace acsqc
