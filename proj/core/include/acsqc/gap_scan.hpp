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
#include <optional>
#include <vector>

#include "acsqc/dragging_plan.hpp"
#include "acsqc/pauli.hpp"

namespace acsqc {

/// Restricts the scan to one eigenspace of a conserved Pauli word.
struct GapSector {
    PauliString symmetry;
    int eigenvalue = 1;
};

struct GapScanOptions {
    /// Evenly spaced samples per step, endpoints included (at least 2).
    std::size_t samples_per_step = 40;
    /// Polish each step's smallest sample with a bracketed Brent search.
    bool refine = true;
    std::optional<GapSector> sector;
    /// Scan only these steps (all when empty).
    std::vector<std::size_t> steps;
};

struct GapSample {
    std::size_t step = 0;
    double s = 0.0;
    double gap = 0.0;
    std::size_t degeneracy = 0;
};

struct StepGap {
    std::size_t step = 0;
    double min_gap = 0.0;
    double argmin_s = 0.0;
    /// Ground degeneracy at s = 0 and s = 1.
    std::size_t degeneracy_start = 0;
    std::size_t degeneracy_end = 0;
};

struct GapScanResult {
    std::vector<GapSample> samples;
    std::vector<StepGap> steps;
};

/// Ground-manifold gap along every step of the plan (dense diagonalization).
/// Throws CapExceededError above dense_cap() and std::invalid_argument when the sector
/// symmetry does not commute with H(s).
GapScanResult gap_scan(const DraggingPlan &plan, const GapScanOptions &options = {});

/// Gap and ground degeneracy of H(s) for one step, optionally inside a sector.
std::pair<double, std::size_t> gap_at(
    const DraggingPlan &plan, std::size_t step, double s, const std::optional<GapSector> &sector = std::nullopt);

}  // namespace acsqc
