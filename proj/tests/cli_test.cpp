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

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "config.hpp"
#include "experiments.hpp"
#include "report.hpp"
#include "runner.hpp"
#include "test_support.hpp"

using namespace acsqc;
using namespace acsqc::cli;

namespace {

std::filesystem::path write_temp(const std::string &name, const std::string &text) {
    const auto path = std::filesystem::path(testing::TempDir()) / name;
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

std::string config_error(const std::string &name, const std::string &text) {
    try {
        load_config(write_temp(name, text));
    } catch (const ConfigError &e) {
        return e.what();
    }
    return "";
}

ExperimentConfig quick(Mode mode) {
    ExperimentConfig c;
    c.mode = mode;
    c.n = 3;
    c.samples = 5;
    return c;
}

}  // namespace

TEST(load_config, minimal_file_gets_defaults) {
    const auto c = load_config(write_temp("minimal.json", R"({"mode": "gap-scan"})"));
    EXPECT_EQ(c.mode, Mode::kGapScan);
    EXPECT_EQ(c.delta, 1.0);
    EXPECT_EQ(c.t_step, 50.0);
    EXPECT_EQ(c.schedule, ScheduleShape::kLinear);
    EXPECT_EQ(c.plan, "chain");
    EXPECT_FALSE(c.timing);
}

TEST(load_config, errors_name_the_field) {
    EXPECT_NE(config_error("nomode.json", R"({"n": 4})").find("'mode': missing"), std::string::npos);
    EXPECT_NE(config_error("badmode.json", R"({"mode": "run"})").find("unknown mode"), std::string::npos);
    EXPECT_NE(config_error("unknown.json", R"({"mode": "evolve", "tstep": 3})").find("'tstep': unknown"), std::string::npos);
    EXPECT_NE(config_error("type.json", R"({"mode": "evolve", "n": "four"})").find("'n'"), std::string::npos);
    EXPECT_NE(config_error("neg.json", R"({"mode": "evolve", "delta": 0})").find("'delta'"), std::string::npos);
    EXPECT_NE(config_error("nocirc.json", R"({"mode": "verify"})").find("'circuit'"), std::string::npos);
    EXPECT_NE(config_error("sched.json", R"({"mode": "evolve", "schedule": "cubic"})").find("'schedule'"), std::string::npos);
    EXPECT_NE(config_error("thetas.json", R"({"mode": "evolve", "n": 3, "thetas": [0, 1]})").find("'thetas'"),
        std::string::npos);
    EXPECT_NE(config_error("syntax.json", "{\"mode\": \"evolve\",\n  \"n\": }").find("syntax.json:2:"), std::string::npos);
    EXPECT_THROW(load_config("/nonexistent/acsqc.json"), ConfigError);
}

TEST(load_config, full_override_is_echoed_verbatim) {
    const std::string text = R"({"mode": "evolve", "n": 5, "plan": "twisted", "thetas": [0.0, 0.5, -0.25, 1.0, 0.0],
        "schedule": "smooth", "t_step": 30.5, "delta": 2.0, "out": "r.json", "seed": 99, "circuit": "", "oracle": "",
        "profiles": 0, "samples": 7, "max_physical": 9, "compare_schedules": true, "timing": false})";
    const auto c = load_config(write_temp("full.json", text));
    EXPECT_EQ(to_json(c), nlohmann::ordered_json::parse(text));
    EXPECT_EQ(config_from_json(to_json(c)), c);
}

TEST(format_double, seventeen_digits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(2.0), "2.0");
    EXPECT_EQ(format_double(-50.0), "-50.0");
    EXPECT_EQ(format_double(1e-5), "1.0000000000000001e-05");
    EXPECT_THROW(format_double(std::nan("")), std::domain_error);
}

TEST(format_double, round_trips_random_bit_patterns) {
    std::mt19937_64 rng(testkit::kSeed);
    for (int k = 0; k < 20000; ++k) {
        const double x = std::bit_cast<double>(rng());
        if (!std::isfinite(x)) {
            continue;
        }
        EXPECT_EQ(std::strtod(format_double(x).c_str(), nullptr), x) << format_double(x);
    }
}

TEST(write_report, json_round_trip_is_lossless) {
    auto config = quick(Mode::kSymbolic);
    config.profiles = 3;
    const auto report = execute(config);
    const std::string text = to_json_text(report);
    const auto back = parse_json_report(text);
    EXPECT_EQ(back, report);
    EXPECT_EQ(to_json_text(back), text);
    EXPECT_EQ(back.results.at("final_logicals")[0].at("x"), "+X3");
}

TEST(write_report, gap_scan_csv) {
    const auto report = execute(quick(Mode::kGapScan));
    const std::string csv = to_csv_text(report.table);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "step,s,gap");
    const auto table = parse_csv_table(csv);
    EXPECT_EQ(table, report.table);
    EXPECT_EQ(to_csv_text(table), csv);
    EXPECT_EQ(table.rows.front()[0], 0.0);
    EXPECT_THROW(parse_csv_table("step,s,gap\n0,0.5,x\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv_table("step,s,gap\n0,0.5\n"), std::invalid_argument);
    const Table tiny{{"v"}, {{4.9406564584124654e-324}}, {false}};
    EXPECT_EQ(parse_csv_table(to_csv_text(tiny)), tiny);
    EXPECT_NEAR(report.results.at("min_gap").get<double>(), std::sqrt(2.0), 1e-9);
}

TEST(write_report, files_match_streams) {
    const auto report = execute(quick(Mode::kGapScan));
    const auto dir = std::filesystem::path(testing::TempDir());
    write_report(report, dir / "scan.csv", ReportFormat::kCsv);
    write_report(report, dir / "scan.json", ReportFormat::kJson);
    EXPECT_EQ(read_text_file((dir / "scan.csv").string()), to_csv_text(report.table));
    EXPECT_EQ(read_text_file((dir / "scan.json").string()), to_json_text(report));
    EXPECT_THROW(write_report(report, "/nonexistent/dir/r.json", ReportFormat::kJson), std::runtime_error);
}

TEST(execute, identical_config_gives_identical_bytes) {
    auto config = quick(Mode::kEvolve);
    config.t_step = 5.0;
    EXPECT_EQ(to_json_text(execute(config)), to_json_text(execute(config)));
    config.timing = true;
    const auto timed = execute(config);
    ASSERT_TRUE(timed.wall_seconds.has_value());
    EXPECT_NE(to_json_text(timed).find("\"wall_seconds\""), std::string::npos);
    config.timing = false;
    EXPECT_EQ(to_json_text(execute(config)).find("\"wall_seconds\""), std::string::npos);
}

TEST(execute, verify_report_keys) {
    auto config = quick(Mode::kVerify);
    config.circuit = write_temp("h.circ", "h q0\nh q0\n").string();
    const auto report = execute(config);
    for (const char *key : {"fidelity", "leakage", "min_gaps"}) {
        EXPECT_TRUE(report.results.contains(key)) << key;
    }
    EXPECT_GE(report.results.at("fidelity").get<double>(), 0.999);

    config.oracle = write_temp("id.circ", "h q0\n").string();
    EXPECT_LT(execute(config).results.at("fidelity").get<double>(), 0.6);
    config.oracle = write_temp("two.circ", "qubits 2\nh q0\n").string();
    EXPECT_THROW(execute(config), std::invalid_argument);
}

TEST(execute, compile_budget_and_errors) {
    auto config = quick(Mode::kCompile);
    config.circuit = write_temp("czh.circ", "czh q0 q1\n").string();
    EXPECT_EQ(execute(config).results.at("physical_qubits"), 6);
    config.max_physical = 5;
    EXPECT_THROW(execute(config), std::length_error);
    config.circuit = "/nonexistent/c.circ";
    EXPECT_THROW(execute(config), std::runtime_error);
}

TEST(make_setup, targets_follow_the_circuit_model) {
    const auto zero = make_setup(PlanKind::kChain, 4, {}, Schedule{}, 1.0);
    EXPECT_TRUE(zero.symbolic);
    // H^3 = H.
    EXPECT_LT((zero.target - Eigen::MatrixXcd(hadamard_matrix())).norm(), 1e-14);
    const auto rot = make_setup(PlanKind::kChain, 3, {0, 0.4, 0}, Schedule{}, 1.0);
    EXPECT_FALSE(rot.symbolic);
    const Eigen::MatrixXcd h = hadamard_matrix();
    EXPECT_LT((rot.target - h * z_rotation(0.4) * h).norm(), 1e-14);
    EXPECT_EQ(prep_symmetry(4), PauliString::from_str("X_XZ"));
    EXPECT_THROW(make_setup(PlanKind::kPrep, 4, {0, 0, 0, 0}, Schedule{}, 1.0), std::invalid_argument);
    EXPECT_THROW(make_setup(PlanKind::kChain, 4, {0, 0}, Schedule{}, 1.0), std::invalid_argument);
    EXPECT_THROW(parse_plan_kind("ring"), std::invalid_argument);
    EXPECT_THROW(run_symbolic(rot), std::invalid_argument);
}
