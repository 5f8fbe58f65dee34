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
#include <string>
#include <vector>

#include "acsqc/pauli.hpp"
#include "acsqc/rotation_profile.hpp"

namespace acsqc {

/// One named piece of a Hamiltonian: `weight * op`. For every constructor in this header `op`
/// is a Hermitian involution (a stabilizer, a twisted stabilizer, or a local field direction)
/// and `weight` is -delta.
struct HamiltonianTerm {
    std::string label;
    double weight = 0;
    PauliSum op;
};

/// A Hamiltonian kept as an ordered list of labelled terms, so dragging plans can switch
/// individual terms on and off. Energies are in units of `delta`.
class HamiltonianSpec {
   public:
    HamiltonianSpec() = default;
    explicit HamiltonianSpec(std::size_t n_qubits, double delta = 1.0);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    double delta() const noexcept { return delta_; }
    const std::vector<HamiltonianTerm> &terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Throws std::invalid_argument if `op` is not Hermitian or has the wrong size.
    void add_term(std::string label, double weight, PauliSum op);
    /// Index of the term with `label`; throws std::out_of_range if absent.
    std::size_t index_of(const std::string &label) const;

    /// Sum of weight * op over all terms.
    PauliSum total() const;
    /// True when every pair of term operators commutes.
    bool terms_commute() const;

   private:
    std::size_t n_qubits_ = 0;
    double delta_ = 1.0;
    std::vector<HamiltonianTerm> terms_;
};

/// Cluster stabilizer S_i (1-based i in [1, n-1]): Z_i X_{i+1} Z_{i+2}, and Z_{n-1} X_n at the end.
/// S_0 = X_1 Z_2 is the preparation term.
PauliString chain_stabilizer(std::size_t n_qubits, std::size_t i);

/// M(-theta) = cos(theta) X - sin(theta) Y on `site` (0-based).
PauliSum rotated_field(std::size_t n_qubits, std::size_t site, double theta);

/// -delta * sum_{i=1}^{n-1} S_i. Terms labelled "S1".."S{n-1}". Throws for n < 2.
HamiltonianSpec build_chain_h0(std::size_t n, double delta = 1.0);

/// -delta * sum T_i with the interior X of each stabilizer rotated by U(theta_{i+1}).
/// Terms labelled "T1".."T{n-1}". Throws if the profile length differs from n.
HamiltonianSpec build_twisted_chain(std::size_t n, double delta, const RotationProfile &thetas);

/// Chain Hamiltonian plus the preparation term -delta * S_0 (labelled "S0", listed first).
HamiltonianSpec build_prep_chain(std::size_t n, double delta = 1.0);

/// Qubit order used by the two-wire constructors: (1a, 2a, 3a, 1b, 2b, 3b) -> sites 0..5.
inline constexpr std::size_t h2_site(std::size_t column, bool wire_b) { return column + (wire_b ? 3 : 0); }

/// Six-qubit two-wire Hamiltonian with a single vertical coupling between the middle sites:
/// -delta (Z1a X2a Z3a Z2b + Z2a X3a) + (a <-> b). Terms "K2a", "K3a", "K2b", "K3b".
HamiltonianSpec build_two_qubit_h2(double delta = 1.0);

/// -delta * M(-theta) on a single site, as a one-term spec labelled "F{site+1}".
HamiltonianSpec local_field_term(std::size_t n_qubits, std::size_t site, double theta, double delta = 1.0);

}  // namespace acsqc
