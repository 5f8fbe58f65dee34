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

#include "acsqc/gap_scan.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include "acsqc/spectrum.hpp"

namespace acsqc {

std::pair<double, std::size_t> gap_at(
    const DraggingPlan &plan, std::size_t step, double s, const std::optional<GapSector> &sector) {
    const HamiltonianSpec h = plan.hamiltonian_at(step, s);
    Eigen::VectorXd values;
    if (sector) {
        const SectorOperator op(h, sector->symmetry, sector->eigenvalue);
        values = op.low_spectrum(op.sector_dimension()).values;
    } else {
        const Eigen::MatrixXcd m = dense_matrix(h);
        values = low_spectrum(m, static_cast<std::size_t>(m.rows())).values;
    }
    return {spectral_gap(values), ground_degeneracy(values)};
}

GapScanResult gap_scan(const DraggingPlan &plan, const GapScanOptions &options) {
    if (options.samples_per_step < 2) {
        throw std::invalid_argument("gap scan needs at least two samples per step");
    }
    std::vector<std::size_t> steps = options.steps;
    if (steps.empty()) {
        for (std::size_t k = 0; k < plan.step_count(); ++k) {
            steps.push_back(k);
        }
    }
    GapScanResult result;
    const std::size_t m = options.samples_per_step;
    for (std::size_t step : steps) {
        if (step >= plan.step_count()) {
            throw std::invalid_argument(fmt::format("step {} out of range", step));
        }
        std::vector<double> s_values(m), gaps(m);
        StepGap summary;
        summary.step = step;
        for (std::size_t j = 0; j < m; ++j) {
            const double s = static_cast<double>(j) / static_cast<double>(m - 1);
            const auto [gap, degeneracy] = gap_at(plan, step, s, options.sector);
            s_values[j] = s;
            gaps[j] = gap;
            result.samples.push_back({step, s, gap, degeneracy});
            if (j == 0) {
                summary.degeneracy_start = degeneracy;
            }
            if (j + 1 == m) {
                summary.degeneracy_end = degeneracy;
            }
        }
        const auto best = static_cast<std::size_t>(std::min_element(gaps.begin(), gaps.end()) - gaps.begin());
        summary.min_gap = gaps[best];
        summary.argmin_s = s_values[best];
        if (options.refine) {
            const double lo = s_values[best == 0 ? 0 : best - 1];
            const double hi = s_values[std::min(best + 1, m - 1)];
            auto objective = [&](double s) { return gap_at(plan, step, s, options.sector).first; };
            const auto [s_star, g_star] = boost::math::tools::brent_find_minima(
                objective, lo, hi, std::numeric_limits<double>::digits / 2);
            if (g_star < summary.min_gap) {
                summary.min_gap = g_star;
                summary.argmin_s = s_star;
            }
        }
        result.steps.push_back(summary);
    }
    return result;
}

}  // namespace acsqc
