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

#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "acsqc/errors.hpp"
#include "runner.hpp"

namespace {

using acsqc::cli::ExperimentConfig;
using acsqc::cli::Mode;

// Flag values as parsed; applied on top of the config file only when given.
struct Flags {
    std::string config;
    std::size_t n = 0;
    std::string plan;
    std::vector<double> thetas;
    std::string schedule;
    double t_step = 0;
    double delta = 0;
    std::string out;
    std::uint64_t seed = 0;
    std::string circuit;
    std::string oracle;
    std::size_t profiles = 0;
    std::size_t samples = 0;
    std::size_t max_physical = 0;
    bool compare_schedules = false;
    bool timing = false;
};

void add_flags(CLI::App *sub, Flags &f) {
    sub->add_option("--config", f.config, "JSON config file; flags override its fields");
    sub->add_option("--n", f.n, "chain length");
    sub->add_option("--plan", f.plan, "chain | twisted | prep | two-wire");
    sub->add_option("--thetas", f.thetas, "per-site angles, comma separated")->delimiter(',');
    sub->add_option("--schedule", f.schedule, "linear | smooth");
    sub->add_option("--tstep", f.t_step, "duration of each dragging step");
    sub->add_option("--delta", f.delta, "energy scale");
    sub->add_option("--out", f.out, "report path (stdout when absent)");
    sub->add_option("--seed", f.seed, "seed for random frame checks");
    sub->add_option("--circuit", f.circuit, "circuit file");
    sub->add_option("--oracle", f.oracle, "circuit file whose unitary replaces the oracle");
    sub->add_option("--profiles", f.profiles, "random profiles for the frame gate check");
    sub->add_option("--samples", f.samples, "gap samples per step before refinement");
    sub->add_option("--max-physical", f.max_physical, "physical qubit budget for compile");
    sub->add_flag("--compare-schedules", f.compare_schedules, "also run the other schedule shape");
    sub->add_flag("--timing", f.timing, "add wall-clock time to the report");
}

ExperimentConfig merge(const CLI::App *sub, Mode mode, const Flags &f) {
    ExperimentConfig c;
    if (!f.config.empty()) {
        c = acsqc::cli::load_config(f.config);
        if (c.mode != mode) {
            throw acsqc::cli::ConfigError(fmt::format("{}: mode '{}' does not match subcommand '{}'", f.config,
                acsqc::cli::to_string(c.mode), acsqc::cli::to_string(mode)));
        }
    }
    c.mode = mode;
    auto given = [&](const char *name) { return sub->get_option(name)->count() > 0; };
    if (given("--n")) c.n = f.n;
    if (given("--plan")) c.plan = f.plan;
    if (given("--thetas")) c.thetas = f.thetas;
    if (given("--schedule")) {
        try {
            c.schedule = acsqc::parse_schedule_shape(f.schedule);
        } catch (const std::invalid_argument &e) {
            throw acsqc::cli::ConfigError(fmt::format("field 'schedule': {}", e.what()));
        }
    }
    if (given("--tstep")) c.t_step = f.t_step;
    if (given("--delta")) c.delta = f.delta;
    if (given("--out")) c.out = f.out;
    if (given("--seed")) c.seed = f.seed;
    if (given("--circuit")) c.circuit = f.circuit;
    if (given("--oracle")) c.oracle = f.oracle;
    if (given("--profiles")) c.profiles = f.profiles;
    if (given("--samples")) c.samples = f.samples;
    if (given("--max-physical")) c.max_physical = f.max_physical;
    if (given("--compare-schedules")) c.compare_schedules = f.compare_schedules;
    if (given("--timing")) c.timing = f.timing;
    acsqc::cli::validate(c);
    return c;
}

void emit(const acsqc::cli::RunReport &report, const ExperimentConfig &c) {
    using acsqc::cli::ReportFormat;
    if (c.mode != Mode::kGapScan) {
        if (c.out.empty()) {
            acsqc::cli::write_report(report, std::cout, ReportFormat::kJson);
        } else {
            acsqc::cli::write_report(report, c.out, ReportFormat::kJson);
        }
        return;
    }
    // Scans: the table goes to --out (or stdout), the summary to the other stream.
    if (c.out.empty()) {
        acsqc::cli::write_report(report, std::cout, ReportFormat::kCsv);
        acsqc::cli::write_report(report, std::cerr, ReportFormat::kJson);
    } else {
        acsqc::cli::write_report(report, c.out, ReportFormat::kCsv);
        acsqc::cli::write_report(report, std::cout, ReportFormat::kJson);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"acsqc: stabilizer-chain dragging experiments"};
    app.require_subcommand(1);
    Flags flags;
    const std::map<std::string, std::pair<Mode, const char *>> subcommands{
        {"symbolic", {Mode::kSymbolic, "replay stabilizer frames step by step"}},
        {"evolve", {Mode::kEvolve, "integrate a dragging plan and compare with the circuit model"}},
        {"gap-scan", {Mode::kGapScan, "scan the spectral gap along every step"}},
        {"compile", {Mode::kCompile, "compile a circuit file to a cluster layout"}},
        {"verify", {Mode::kVerify, "compile, evolve and compare with the circuit oracle"}},
    };
    std::map<std::string, CLI::App *> subs;
    for (const auto &[name, entry] : subcommands) {
        subs[name] = app.add_subcommand(name, entry.second);
        add_flags(subs[name], flags);
    }
    CLI11_PARSE(app, argc, argv);

    const auto *chosen = app.get_subcommands().front();
    const Mode mode = subcommands.at(chosen->get_name()).first;
    try {
        const auto config = merge(chosen, mode, flags);
        emit(acsqc::cli::execute(config), config);
    } catch (const acsqc::cli::ConfigError &e) {
        fmt::print(stderr, "acsqc: config error: {}\n", e.what());
        return 2;
    } catch (const acsqc::CircuitParseError &e) {
        fmt::print(stderr, "acsqc: circuit error: {}\n", e.what());
        return 2;
    } catch (const std::length_error &e) {
        fmt::print(stderr, "acsqc: budget exceeded: {}\n", e.what());
        return 3;
    } catch (const std::exception &e) {
        fmt::print(stderr, "acsqc: error: {}\n", e.what());
        return 1;
    }
    return 0;
}
