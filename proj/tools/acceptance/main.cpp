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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "acsqc/hamiltonian.hpp"
#include "acsqc/state_vector.hpp"
#include "experiments.hpp"

namespace {

using namespace acsqc;
using namespace acsqc::cli;

struct Outcome {
    bool pass = false;
    std::string detail;
};

const Schedule kLinear{ScheduleShape::kLinear, 50.0};

EvolveRequest numeric_only() {
    EvolveRequest r;
    r.check_generators = false;
    return r;
}

Outcome hadamard_chain() {
    double worst = 1.0;
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto res = run_evolve(make_setup(PlanKind::kChain, n, {}, kLinear, 1.0), numeric_only());
        worst = std::min(worst, *res.fidelity);
    }
    return {worst >= 0.999, fmt::format("min fidelity {:.6f} over n=3..8", worst)};
}

Outcome gap_constancy() {
    const double root2 = std::numbers::sqrt2;
    double first = -1.0;
    double off_root2 = 0.0;
    double spread = 0.0;
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto run = run_gap_scan(make_setup(PlanKind::kChain, n, {}, kLinear, 1.0), 40);
        for (const auto &g : run.result.steps) {
            first = first < 0 ? g.min_gap : first;
            off_root2 = std::max(off_root2, std::abs(g.min_gap - root2));
            spread = std::max(spread, std::abs(g.min_gap - first));
        }
    }
    return {off_root2 <= 1e-6 && spread <= 1e-9,
        fmt::format("max |gap - sqrt2| {:.2e}, spread across n {:.2e}", off_root2, spread)};
}

Outcome rotated_frame_identity() {
    const double err = random_frame_gate_error(20260416, 100, 8);
    return {err <= 1e-12, fmt::format("max coefficient error {:.2e} over 100 profiles", err)};
}

Outcome twisted_vs_rotated() {
    double worst = 1.0;
    for (double theta : {std::numbers::pi / 6, std::numbers::pi / 4, std::numbers::pi / 2}) {
        const auto res = run_evolve(make_setup(PlanKind::kTwisted, 3, {0, theta, 0}, kLinear, 1.0));
        worst = std::min(worst, *res.picture_agreement);
    }
    return {worst >= 0.999, fmt::format("min agreement {:.6f}", worst)};
}

Outcome symbolic_numeric() {
    double worst = 0.0;
    for (std::size_t n = 3; n <= 8; ++n) {
        worst = std::max(worst, worst_generator_deficit(make_setup(PlanKind::kChain, n, {}, kLinear, 1.0)));
    }
    worst = std::max(worst, worst_generator_deficit(make_setup(PlanKind::kPrep, 4, {}, kLinear, 1.0)));
    worst = std::max(worst, worst_generator_deficit(make_setup(PlanKind::kTwoWire, 6, {}, kLinear, 1.0)));
    const double at50 = worst_generator_deficit(make_setup(PlanKind::kChain, 4, {}, kLinear, 1.0));
    const double at100 = worst_generator_deficit(make_setup(PlanKind::kChain, 4, {}, {ScheduleShape::kLinear, 100.0}, 1.0));
    return {worst <= 1e-3 && at100 < at50,
        fmt::format("max |<G> - 1| {:.2e}; n=4 chain {:.2e} at T=50, {:.2e} at T=100", worst, at50, at100)};
}

Outcome state_preparation() {
    const auto setup = make_setup(PlanKind::kPrep, 4, {}, kLinear, 1.0);
    const auto res = run_evolve(setup, numeric_only());
    double worst = 1.0;
    for (const char *op : {"X___", "_X__", "__XZ"}) {
        worst = std::min(worst, expectation(PauliSum(PauliString::from_str(op)), res.final_state).real());
    }
    const auto gaps = run_gap_scan(setup, 40);
    const auto &open = gaps.plain->steps.at(1);
    double sector = std::numeric_limits<double>::infinity();
    for (const auto &g : gaps.result.steps) {
        sector = std::min(sector, g.min_gap);
    }
    const bool opens = open.degeneracy_start == 1 && open.degeneracy_end == 2;
    return {worst >= 0.999 && opens && sector >= 1.0,
        fmt::format("min <X1>,<X2>,<X3 Z4> {:.6f}; degeneracy {} -> {}; sector gap {:.6f}", worst,
            open.degeneracy_start, open.degeneracy_end, sector)};
}

Outcome two_qubit_gate() {
    const auto res = run_evolve(make_setup(PlanKind::kTwoWire, 6, {}, kLinear, 1.0), numeric_only());
    return {*res.fidelity >= 0.999, fmt::format("fidelity {:.6f}, leakage {:.2e}", *res.fidelity, res.leakage)};
}

Outcome path_robustness() {
    double worst = 1.0;
    EvolveRequest request = numeric_only();
    request.compare_schedules = true;
    for (std::size_t n = 3; n <= 5; ++n) {
        worst = std::min(worst, *run_evolve(make_setup(PlanKind::kChain, n, {}, kLinear, 1.0), request).schedule_agreement);
    }
    const auto twisted = make_setup(PlanKind::kTwisted, 3, {0, std::numbers::pi / 4, 0}, kLinear, 1.0);
    worst = std::min(worst, *run_evolve(twisted, request).schedule_agreement);
    worst = std::min(worst, *run_evolve(make_setup(PlanKind::kTwoWire, 6, {}, kLinear, 1.0), request).schedule_agreement);
    return {worst >= 0.999, fmt::format("min linear/smooth agreement {:.6f}", worst)};
}

constexpr const char *kCircuit = "h q0\nhrot 0.785398 q1\nczh q0 q1\n";

Outcome end_to_end_compile() {
    const auto run = run_verify(kCircuit, {}, 50.0);
    const auto physical = run.layout.n_qubits();
    return {run.report->fidelity >= 0.99 && physical <= 12,
        fmt::format("fidelity {:.6f} on {} physical qubits", run.report->fidelity, physical)};
}

Outcome negative_controls() {
    const auto diabatic = run_evolve(
        make_setup(PlanKind::kChain, 3, {}, {ScheduleShape::kLinear, 0.1}, 1.0), numeric_only());
    const auto wrong = run_verify(kCircuit, {}, 50.0, std::string_view("h q0\nhrot 0.785398 q1\n"));
    return {diabatic.leakage > 0.1 && wrong.report->fidelity < 0.6,
        fmt::format("diabatic leakage {:.4f}; wrong-oracle fidelity {:.4f}", diabatic.leakage, wrong.report->fidelity)};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"acceptance checks"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"hadamard chain", hadamard_chain},
        {"gap constancy", gap_constancy},
        {"rotated-frame identity", rotated_frame_identity},
        {"twisted vs rotated fields", twisted_vs_rotated},
        {"symbolic-numeric agreement", symbolic_numeric},
        {"state preparation", state_preparation},
        {"two-qubit gate", two_qubit_gate},
        {"path robustness", path_robustness},
        {"end-to-end compile", end_to_end_compile},
        {"negative controls", negative_controls},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (only != 0 && static_cast<std::size_t>(only) != k + 1) {
            continue;
        }
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, fmt::format("threw: {}", e.what())};
        }
        failed += o.pass ? 0 : 1;
        fmt::print("criterion {:>2} {}: {} ({})\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL", o.detail);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
