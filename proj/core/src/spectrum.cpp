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

#include "acsqc/spectrum.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "acsqc/errors.hpp"

namespace acsqc {
namespace {

void require_cap(std::size_t n) {
    if (n > dense_cap()) {
        throw CapExceededError(fmt::format(
            "{} qubits exceeds the dense cap of {} (set ACSQC_DENSE_CAP to raise it)", n, dense_cap()));
    }
}

Eigen::MatrixXcd materialize(const CompiledOperator &op) {
    const auto dim = static_cast<Eigen::Index>(op.dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &g : op.groups()) {
        const auto flip = static_cast<Eigen::Index>(g.flip);
        for (Eigen::Index b = 0; b < dim; ++b) {
            m(b ^ flip, b) += g.diagonal[b];
        }
    }
    return m;
}

}  // namespace

std::size_t dense_cap() {
    if (const char *env = std::getenv("ACSQC_DENSE_CAP")) {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(env, &pos);
            if (pos == std::string(env).size() && v > 0 && v <= 20) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument(fmt::format("ACSQC_DENSE_CAP='{}' is not an integer in [1, 20]", env));
    }
    return kDefaultDenseCap;
}

Eigen::MatrixXcd dense_matrix(const PauliSum &op) {
    require_cap(op.n_qubits());
    return materialize(CompiledOperator(op));
}

Eigen::MatrixXcd dense_matrix(const HamiltonianSpec &h) { return dense_matrix(h.total()); }

Spectrum low_spectrum(const Eigen::MatrixXcd &hermitian, std::size_t k, bool with_vectors) {
    if (k == 0 || k > static_cast<std::size_t>(hermitian.rows())) {
        throw std::invalid_argument(fmt::format("requested {} eigenvalues of a {}-dimensional operator", k,
            static_cast<long long>(hermitian.rows())));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        hermitian, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    Spectrum out;
    const auto kk = static_cast<Eigen::Index>(k);
    out.values = solver.eigenvalues().head(kk);
    if (with_vectors) {
        out.vectors = solver.eigenvectors().leftCols(kk);
    }
    return out;
}

Spectrum low_spectrum(const HamiltonianSpec &h, std::size_t k, bool with_vectors) {
    require_cap(h.n_qubits());
    return low_spectrum(dense_matrix(h), k, with_vectors);
}

std::size_t ground_degeneracy(const Eigen::VectorXd &values, double tol) {
    std::size_t count = 0;
    for (Eigen::Index k = 0; k < values.size() && values[k] <= values[0] + tol; ++k) {
        ++count;
    }
    return count;
}

double spectral_gap(const Eigen::VectorXd &values, double tol) {
    const auto d = static_cast<Eigen::Index>(ground_degeneracy(values, tol));
    return d < values.size() ? values[d] - values[0] : 0.0;
}

SectorOperator::SectorOperator(HamiltonianSpec h, PauliString symmetry, int eigenvalue)
    : h_(std::move(h)), symmetry_(std::move(symmetry)), eigenvalue_(eigenvalue) {
    if (eigenvalue != 1 && eigenvalue != -1) {
        throw std::invalid_argument("sector eigenvalue must be +1 or -1");
    }
    if (symmetry_.n_qubits() != h_.n_qubits()) {
        throw std::invalid_argument("symmetry has the wrong qubit count");
    }
    if (!symmetry_.is_hermitian() || symmetry_.is_identity_word()) {
        throw std::invalid_argument("symmetry must be a Hermitian, non-identity Pauli word");
    }
    const PauliSum sym(symmetry_);
    for (const auto &t : h_.terms()) {
        PauliSum comm = sym * t.op - t.op * sym;
        if (!comm.pruned(1e-12).empty()) {
            throw std::invalid_argument(
                fmt::format("symmetry {} does not commute with term {}", symmetry_.sparse_str(), t.label));
        }
    }
    require_cap(h_.n_qubits());
    h_op_ = CompiledOperator(h_.total());
    symmetry_op_ = CompiledOperator(sym);

    // Pair each basis state with its image under the symmetry and keep the +/- combination.
    const auto dim = static_cast<Eigen::Index>(symmetry_op_.dimension());
    const auto &g = symmetry_op_.groups().front();
    const auto flip = static_cast<Eigen::Index>(g.flip);
    std::vector<Eigen::VectorXcd> columns;
    for (Eigen::Index b = 0; b < dim; ++b) {
        if (flip == 0) {
            if (std::abs(g.diagonal[b] - static_cast<double>(eigenvalue)) < 1e-12) {
                Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
                v[b] = 1.0;
                columns.push_back(std::move(v));
            }
        } else if (b < (b ^ flip)) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            v[b] = 1.0 / std::sqrt(2.0);
            v[b ^ flip] = static_cast<double>(eigenvalue) * g.diagonal[b] / std::sqrt(2.0);
            columns.push_back(std::move(v));
        }
    }
    basis_.resize(dim, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        basis_.col(static_cast<Eigen::Index>(c)) = columns[c];
    }
}

Eigen::VectorXcd SectorOperator::apply(const Eigen::VectorXcd &v) const {
    auto project = [&](const Eigen::VectorXcd &x) -> Eigen::VectorXcd {
        return 0.5 * (x + static_cast<double>(eigenvalue_) * (symmetry_op_ * x));
    };
    return project(h_op_ * project(v));
}

Eigen::MatrixXcd SectorOperator::dense() const {
    Eigen::MatrixXcd h_basis(basis_.rows(), basis_.cols());
    for (Eigen::Index c = 0; c < basis_.cols(); ++c) {
        h_basis.col(c) = h_op_ * Eigen::VectorXcd(basis_.col(c));
    }
    Eigen::MatrixXcd reduced = basis_.adjoint() * h_basis;
    return 0.5 * (reduced + reduced.adjoint());
}

Spectrum SectorOperator::low_spectrum(std::size_t k, bool with_vectors) const {
    Spectrum s = acsqc::low_spectrum(dense(), k, with_vectors);
    if (with_vectors) {
        s.vectors = basis_ * s.vectors;
    }
    return s;
}

SectorOperator sector_restrict(const HamiltonianSpec &h, const PauliString &symmetry, int eigenvalue) {
    return SectorOperator(h, symmetry, eigenvalue);
}

}  // namespace acsqc
