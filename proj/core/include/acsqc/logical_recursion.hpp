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

#include <array>
#include <cstddef>
#include <cstdint>

#include "acsqc/pauli.hpp"
#include "acsqc/rotation_profile.hpp"

namespace acsqc {

enum class Axis : int { kX = 0, kY = 1, kZ = 2 };
inline constexpr std::array<Axis, 3> kAxes{Axis::kX, Axis::kY, Axis::kZ};
char axis_char(Axis a);

/// Nine operator-valued coefficients P^{alpha,beta}_i for the rotated chain.
///
/// Together they express the logical operators as
///   bar(alpha)_i = sum_beta (P^{alpha,beta}_i [beta]_i)^{CZ(i, i+1)},
/// and every entry is a sum of products of X factors on sites strictly before `site()`.
/// Sites are 0-based here; site 0 is the chain's first qubit.
class CoefficientOperator {
   public:
    /// P^{alpha,beta}_0 = delta_{alpha,beta} * identity.
    static CoefficientOperator base(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t site() const noexcept { return site_; }
    const PauliSum &entry(Axis alpha, Axis beta) const {
        return entries_[static_cast<int>(alpha)][static_cast<int>(beta)];
    }

    /// Every word of every entry is X-only and supported on sites < site().
    bool satisfies_support_restriction() const;

   private:
    friend CoefficientOperator recursion_step(const CoefficientOperator &, double);
    CoefficientOperator(std::size_t n, std::size_t site) : n_qubits_(n), site_(site) {}

    std::size_t n_qubits_ = 0;
    std::size_t site_ = 0;
    std::array<std::array<PauliSum, 3>, 3> entries_;
};

/// The three logical operators bar(X), bar(Y), bar(Z) at a given site, as n-qubit sums.
struct LogicalBar {
    std::size_t site = 0;
    std::array<PauliSum, 3> ops;

    const PauliSum &op(Axis alpha) const { return ops[static_cast<int>(alpha)]; }
};

LogicalBar reconstruct_logical_bar(const CoefficientOperator &coeffs);

/// The rotated stabilizer T_i = Z_i X^{U(theta_{i+1})}_{i+1} Z_{i+2}, or Z_{n-2} X_{n-1} at the end.
PauliSum rotated_stabilizer(std::size_t n_qubits, std::size_t i, double theta_next);

/// Advances P_i to P_{i+1}. The new entries are produced mechanically: bar(alpha)_i is expanded,
/// its Y and Z components are left-multiplied by T_i (an identity on the code), and the result is
/// regrouped by the Pauli on site i+1. Requires i+1 <= n-2; throws std::out_of_range otherwise.
CoefficientOperator recursion_step(const CoefficientOperator &coeffs, double theta_next);

/// Runs the recursion from the base case up to `site` using angles from `thetas`.
CoefficientOperator coefficients_at(std::size_t site, const RotationProfile &thetas);

/// Replaces X factors on `sites` (bitmask) by +1 and merges terms.
/// Throws std::invalid_argument if a word carries Y or Z on a restricted site.
PauliSum restrict_plus_x(const PauliSum &op, std::uint64_t sites);

/// Reads a restricted logical operator sum_beta c_beta ([beta]_site)^{CZ(site,site+1)} as the
/// 3 real-or-complex coefficients c_beta. Throws std::invalid_argument when `op` has any other shape.
std::array<Complex, 3> local_frame_coefficients(const PauliSum &op, std::size_t site);

struct FrameGateReport {
    std::size_t site = 0;
    double max_coefficient_error = 0;
    /// [alpha][beta] coefficients of restricted bar(alpha)_{site+1}.
    std::array<std::array<Complex, 3>, 3> via_recursion{};
    std::array<std::array<Complex, 3>, 3> via_conjugation{};
};

/// Checks bar(alpha)_{i+1} = (U(theta_{i+1}) H) bar(alpha)_i (U(theta_{i+1}) H)^dagger on the +1
/// subspace of the X fields before site i+1. `site` is 0-based with 0 <= site <= n-3.
FrameGateReport frame_gate_check(std::size_t site, const RotationProfile &thetas);

}  // namespace acsqc
