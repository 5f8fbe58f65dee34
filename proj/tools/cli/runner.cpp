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

#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "experiments.hpp"

namespace acsqc::cli {

namespace {

using Json = nlohmann::ordered_json;

Json logical_json(const LogicalPair &pair) { return Json{{"x", pair.x_op.sparse_str()}, {"z", pair.z_op.sparse_str()}}; }

Json frame_json(const StabilizerFrame &frame) {
    Json gens = Json::array();
    for (const auto &g : frame.generators()) {
        gens.push_back(g.str());
    }
    Json logicals = Json::array();
    for (const auto &pair : frame.logicals()) {
        logicals.push_back(Json{{"x", pair.x_op.str()}, {"z", pair.z_op.str()}});
    }
    return Json{{"generators", gens}, {"logicals", logicals}};
}

Json step_gap_json(const StepGap &g) {
    return Json{{"step", g.step}, {"min_gap", g.min_gap}, {"argmin_s", g.argmin_s},
        {"degeneracy_start", g.degeneracy_start}, {"degeneracy_end", g.degeneracy_end}};
}

PlanSetup setup_for(const ExperimentConfig &c) {
    return make_setup(parse_plan_kind(c.plan), c.n, c.thetas, Schedule{c.schedule, c.t_step}, c.delta);
}

void run_symbolic_mode(const ExperimentConfig &c, RunReport &r) {
    const auto setup = setup_for(c);
    const auto run = run_symbolic(setup);
    Json steps = Json::array();
    for (std::size_t k = 0; k < run.frames.size(); ++k) {
        Json step = frame_json(run.frames[k]);
        Json consumed = Json::array();
        for (std::size_t slot : run.consumed[k]) {
            consumed.push_back(slot);
        }
        steps.push_back(Json{{"step", k}, {"consumed", consumed}, {"generators", step["generators"]},
            {"logicals", step["logicals"]}});
    }
    Json final_logicals = Json::array();
    for (const auto &pair : run.final_logicals) {
        final_logicals.push_back(logical_json(pair));
    }
    r.results["plan"] = c.plan;
    r.results["n_qubits"] = setup.plan.n_qubits();
    r.results["steps"] = steps;
    r.results["final_logicals"] = final_logicals;
    if (c.profiles > 0) {
        r.results["frame_gate_profiles"] = c.profiles;
        r.results["frame_gate_max_error"] = random_frame_gate_error(c.seed, c.profiles, c.n);
    }
}

void run_evolve_mode(const ExperimentConfig &c, RunReport &r) {
    const auto setup = setup_for(c);
    EvolveRequest request;
    request.compare_schedules = c.compare_schedules;
    const auto res = run_evolve(setup, request);
    r.results["plan"] = c.plan;
    r.results["n_qubits"] = setup.plan.n_qubits();
    r.results["steps"] = setup.plan.step_count();
    if (res.fidelity) {
        r.results["fidelity"] = *res.fidelity;
    }
    r.results["leakage"] = res.leakage;
    if (res.generator_deficit) {
        r.results["generator_deficit"] = *res.generator_deficit;
    }
    if (res.picture_agreement) {
        r.results["picture_agreement"] = *res.picture_agreement;
    }
    if (res.schedule_agreement) {
        r.results["schedule_agreement"] = *res.schedule_agreement;
    }
    if (!res.final_expectations.empty()) {
        Json ex = Json::object();
        for (const auto &[label, value] : res.final_expectations) {
            ex[label] = value;
        }
        r.results["final_expectations"] = ex;
    }
}

void run_gap_scan_mode(const ExperimentConfig &c, RunReport &r) {
    const auto setup = setup_for(c);
    const auto run = run_gap_scan(setup, c.samples);
    Json steps = Json::array();
    double overall = std::numeric_limits<double>::infinity();
    for (const auto &g : run.result.steps) {
        steps.push_back(step_gap_json(g));
        overall = std::min(overall, g.min_gap);
    }
    r.results["plan"] = c.plan;
    r.results["n_qubits"] = setup.plan.n_qubits();
    r.results["min_gap"] = overall;
    r.results["steps"] = steps;
    if (run.plain) {
        r.results["sector"] = Json{{"symmetry", prep_symmetry(setup.plan.n_qubits()).sparse_str()}, {"eigenvalue", 1}};
        Json plain = Json::array();
        for (const auto &g : run.plain->steps) {
            plain.push_back(step_gap_json(g));
        }
        r.results["unrestricted_steps"] = plain;
    }
    r.table.header = {"step", "s", "gap"};
    r.table.integral = {true, false, false};
    for (const auto &sample : run.result.samples) {
        r.table.rows.push_back({static_cast<double>(sample.step), sample.s, sample.gap});
    }
}

void layout_results(const CircuitRun &run, RunReport &r) {
    r.results["logical_qubits"] = run.layout.logical_qubits;
    r.results["physical_qubits"] = run.layout.n_qubits();
    r.results["steps"] = run.layout.step_groups.size();
    Json lines = Json::array();
    std::stringstream in(run.layout.serialize());
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    r.results["layout"] = lines;
}

void run_circuit_mode(const ExperimentConfig &c, RunReport &r) {
    const std::string text = read_text_file(c.circuit);
    if (c.mode == Mode::kCompile) {
        layout_results(run_compile(text, c.max_physical), r);
        return;
    }
    std::optional<std::string> oracle;
    if (!c.oracle.empty()) {
        oracle = read_text_file(c.oracle);
    }
    const EmitOptions emit{.delta = c.delta, .schedule = Schedule{c.schedule, c.t_step}};
    const auto run = run_verify(text, emit, c.t_step, oracle, c.max_physical);
    r.results["fidelity"] = run.report->fidelity;
    r.results["leakage"] = run.report->leakage;
    r.results["min_gaps"] = run.report->min_gaps;
    layout_results(run, r);
}

}  // namespace

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(fmt::format("{}: cannot open", path));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunReport execute(const ExperimentConfig &config) {
    validate(config);
    RunReport report = make_report(config);
    const auto start = std::chrono::steady_clock::now();
    switch (config.mode) {
        case Mode::kSymbolic:
            run_symbolic_mode(config, report);
            break;
        case Mode::kEvolve:
            run_evolve_mode(config, report);
            break;
        case Mode::kGapScan:
            run_gap_scan_mode(config, report);
            break;
        case Mode::kCompile:
        case Mode::kVerify:
            run_circuit_mode(config, report);
            break;
    }
    if (config.timing) {
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

}  // namespace acsqc::cli
