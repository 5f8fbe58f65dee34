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

#include <Eigen/Dense>

#include "acsqc/hamiltonian.hpp"
#include "acsqc/pauli.hpp"
#include "acsqc/state_vector.hpp"

namespace acsqc {

inline constexpr std::size_t kDefaultDenseCap = 12;
/// Eigenvalues closer than this are treated as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-10;

/// Largest qubit count the dense paths will materialize: ACSQC_DENSE_CAP if set, else 12.
std::size_t dense_cap();

/// Hermitian 2^n x 2^n matrix of `h`. Throws CapExceededError above dense_cap().
Eigen::MatrixXcd dense_matrix(const HamiltonianSpec &h);
Eigen::MatrixXcd dense_matrix(const PauliSum &op);

struct Spectrum {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors;  // columns match values; empty unless requested
};

/// The k smallest eigenvalues (ascending), optionally with eigenvectors.
/// Throws CapExceededError above the cap and std::invalid_argument if k exceeds the dimension.
Spectrum low_spectrum(const HamiltonianSpec &h, std::size_t k, bool with_vectors = false);
Spectrum low_spectrum(const Eigen::MatrixXcd &hermitian, std::size_t k, bool with_vectors = false);

/// Counts eigenvalues within `tol` of the smallest one.
std::size_t ground_degeneracy(const Eigen::VectorXd &ascending_values, double tol = kDegeneracyTolerance);

/// Gap between the lowest level and the first level above the ground manifold (0 if none).
double spectral_gap(const Eigen::VectorXd &ascending_values, double tol = kDegeneracyTolerance);

/// `h` seen inside one eigenspace of a conserved Pauli symmetry.
///
/// apply() projects with (I + eigenvalue * symmetry) / 2 before and after applying `h`;
/// dense() is the compressed matrix V^dagger H V on an orthonormal basis V of the sector.
class SectorOperator {
   public:
    SectorOperator(HamiltonianSpec h, PauliString symmetry, int eigenvalue);

    const HamiltonianSpec &hamiltonian() const noexcept { return h_; }
    const PauliString &symmetry() const noexcept { return symmetry_; }
    int eigenvalue() const noexcept { return eigenvalue_; }
    std::size_t sector_dimension() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
    /// Orthonormal basis of the sector, one column per state (2^n x 2^{n-1}).
    const Eigen::MatrixXcd &basis() const noexcept { return basis_; }

    Eigen::VectorXcd apply(const Eigen::VectorXcd &v) const;
    Eigen::MatrixXcd dense() const;
    Spectrum low_spectrum(std::size_t k, bool with_vectors = false) const;

   private:
    HamiltonianSpec h_;
    PauliString symmetry_;
    int eigenvalue_;
    CompiledOperator h_op_;
    CompiledOperator symmetry_op_;
    Eigen::MatrixXcd basis_;
};

/// Throws std::invalid_argument if `symmetry` fails to commute with any term of `h`.
SectorOperator sector_restrict(const HamiltonianSpec &h, const PauliString &symmetry, int eigenvalue);

}  // namespace acsqc
