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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "acsqc/compiler.hpp"
#include "acsqc/dragging_plan.hpp"
#include "acsqc/evolution.hpp"
#include "acsqc/gap_scan.hpp"
#include "acsqc/stabilizer_frame.hpp"

namespace acsqc::cli {

enum class PlanKind { kChain, kTwisted, kPrep, kTwoWire };

std::string_view to_string(PlanKind kind);
PlanKind parse_plan_kind(std::string_view text);

/// A dragging plan together with its logical operators and the circuit-model action it should induce.
struct PlanSetup {
    PlanKind kind = PlanKind::kChain;
    DraggingPlan plan;
    std::vector<LogicalPair> in_logicals;
    std::vector<LogicalPair> out_logicals;
    Eigen::MatrixXcd target;  // empty for the prep plan
    std::optional<RotationProfile> thetas;
    bool symbolic = false;  // every field is a plain X, so frames can be replayed
};

/// `n` is ignored for the two-wire plan; `thetas` must be empty or have n entries.
PlanSetup make_setup(PlanKind kind, std::size_t n, const std::vector<double> &thetas, Schedule schedule, double delta);

/// Time-ordered product of U(theta_{k+1}) H over the steps of an n-site chain.
Eigen::MatrixXcd chain_target(const RotationProfile &thetas);
Eigen::MatrixXcd z_rotation(double theta);

/// Product S0 S2 of the prep chain; conserved while S0 and S2 are switched off together.
PauliString prep_symmetry(std::size_t n);

struct EvolveRequest {
    EvolveOptions evolve;
    bool compare_schedules = false;
    bool check_generators = true;
};

struct EvolveResult {
    std::optional<double> fidelity;
    double leakage = 0.0;
    std::optional<double> generator_deficit;
    std::optional<double> picture_agreement;
    std::optional<double> schedule_agreement;
    std::vector<std::pair<std::string, double>> final_expectations;
    Eigen::VectorXcd final_state;  // prep plan only
    Eigen::MatrixXcd induced;
};

EvolveResult run_evolve(const PlanSetup &setup, const EvolveRequest &request = {});

/// Largest |<G> - 1| over all symbolic generators after every step, starting from |0..0>_L.
double worst_generator_deficit(const PlanSetup &setup, const EvolveOptions &options = {});

struct GapScanRun {
    GapScanResult result;                 // in the conserved sector for the prep plan
    std::optional<GapScanResult> plain;   // unrestricted scan, prep plan only
};

GapScanRun run_gap_scan(const PlanSetup &setup, std::size_t samples_per_step);

struct SymbolicRun {
    std::vector<StabilizerFrame> frames;
    std::vector<std::vector<std::size_t>> consumed;
    std::vector<LogicalPair> final_logicals;  // canonical representatives
};

SymbolicRun run_symbolic(const PlanSetup &setup);

/// Largest frame_gate_check error over `count` random profiles with n drawn from [3, max_n].
double random_frame_gate_error(std::uint64_t seed, std::size_t count, std::size_t max_n);

struct CircuitRun {
    CircuitIR ir;
    ClusterLayout layout;
    std::optional<VerificationReport> report;
};

CircuitRun run_compile(std::string_view circuit_text, std::size_t max_physical = 0);
/// Verifies against `oracle_text` when given, otherwise against the circuit itself.
CircuitRun run_verify(std::string_view circuit_text, const EmitOptions &emit, double t_step,
    std::optional<std::string_view> oracle_text = std::nullopt, std::size_t max_physical = 0);

}  // namespace acsqc::cli
