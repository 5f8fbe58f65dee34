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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "acsqc/hamiltonian.hpp"
#include "acsqc/pauli.hpp"

namespace acsqc {

/// Normalized 2^n amplitude vector. Site 0 (the first qubit) is the most significant bit of
/// the basis index, so |b_0 b_1 ... b_{n-1}> sits at index sum_k b_k 2^{n-1-k}.
class StateVector {
   public:
    static constexpr double kNormTolerance = 1e-10;

    StateVector() = default;
    /// Throws std::invalid_argument if the size is not 2^n or the norm is off by more than 1e-10.
    StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes);

    static StateVector basis(std::size_t n_qubits, std::uint64_t index);
    /// Normalizes `amplitudes` first; throws on a zero vector.
    static StateVector normalized(std::size_t n_qubits, Eigen::VectorXcd amplitudes);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
    const Eigen::VectorXcd &amplitudes() const noexcept { return amplitudes_; }

   private:
    std::size_t n_qubits_ = 0;
    Eigen::VectorXcd amplitudes_;
};

/// Maps a site-indexed mask (bit k = site k) to a basis-index mask (bit n-1-k).
std::uint64_t site_mask_to_index_mask(std::uint64_t site_mask, std::size_t n_qubits);

/// A PauliSum prepared for repeated matrix-free application. Terms sharing an X pattern are
/// folded into one diagonal vector, so applying is one gather-multiply pass per pattern:
///   out[b ^ x] += d_x[b] * in[b].
class CompiledOperator {
   public:
    struct Group {
        std::uint64_t flip;  // basis-index mask
        Eigen::VectorXcd diagonal;
    };

    CompiledOperator() = default;
    explicit CompiledOperator(const PauliSum &op);
    /// sum_k weights[k] * parts[k], merged group by group. All parts must share a qubit count.
    static CompiledOperator combine(std::span<const std::pair<double, const CompiledOperator *>> parts);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return std::size_t{1} << n_qubits_; }
    const std::vector<Group> &groups() const noexcept { return groups_; }

    /// out = scale * A * in (or out += ... when accumulate is set). `in` and `out` must not alias.
    void apply(const Eigen::Ref<const Eigen::VectorXcd> &in, Eigen::Ref<Eigen::VectorXcd> out, Complex scale = 1.0,
        bool accumulate = false) const;
    Eigen::VectorXcd operator*(const Eigen::VectorXcd &in) const;

    /// Expectation <v|A|v> for a normalized v.
    Complex expectation(const Eigen::VectorXcd &v) const;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<Group> groups_;
};

/// H v computed term by term without materializing a matrix. Result is not normalized.
/// Throws std::invalid_argument on a dimension mismatch.
Eigen::VectorXcd apply_state(const HamiltonianSpec &h, const StateVector &v);
Eigen::VectorXcd apply_state(const HamiltonianSpec &h, const Eigen::VectorXcd &v);

/// <v| op |v> for a Pauli word or sum.
Complex expectation(const PauliSum &op, const Eigen::VectorXcd &v);

}  // namespace acsqc
