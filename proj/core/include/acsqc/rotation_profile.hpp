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
#include <stdexcept>
#include <utility>
#include <vector>

namespace acsqc {

/// Per-site rotation angles (radians) for the rotated chain. The first and last sites carry
/// no rotation: the input logicals and the output site stay in the computational frame.
class RotationProfile {
   public:
    RotationProfile() = default;
    explicit RotationProfile(std::vector<double> thetas) : thetas_(std::move(thetas)) {
        if (thetas_.empty()) {
            throw std::invalid_argument("rotation profile needs at least one site");
        }
        if (thetas_.front() != 0.0 || thetas_.back() != 0.0) {
            throw std::invalid_argument("rotation profile must have zero angle on the first and last site");
        }
    }

    static RotationProfile zeros(std::size_t n_qubits) { return RotationProfile(std::vector<double>(n_qubits, 0.0)); }

    std::size_t size() const noexcept { return thetas_.size(); }
    double operator[](std::size_t site) const { return thetas_.at(site); }
    const std::vector<double> &thetas() const noexcept { return thetas_; }
    bool all_zero() const noexcept {
        for (double t : thetas_) {
            if (t != 0.0) {
                return false;
            }
        }
        return true;
    }

   private:
    std::vector<double> thetas_;
};

}  // namespace acsqc
