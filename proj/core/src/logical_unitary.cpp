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

#include "acsqc/logical_unitary.hpp"

#include <complex>
#include <stdexcept>

#include <Eigen/SVD>
#include <fmt/format.h>

#include "acsqc/errors.hpp"
#include "acsqc/spectrum.hpp"
#include "acsqc/state_vector.hpp"

namespace acsqc {
namespace {

constexpr double kInGroundSpaceTolerance = 1e-8;

void require_in_span(const Eigen::MatrixXcd &v, const Eigen::VectorXcd &x, const char *what) {
    const double off = (x - v * (v.adjoint() * x)).norm();
    if (off > kInGroundSpaceTolerance * std::max(1.0, x.norm())) {
        throw FrameError(fmt::format("{} leaves the ground space (residual {:.3e})", what, off));
    }
}

}  // namespace

GroundSpace ground_space_basis(const HamiltonianSpec &h, std::span<const LogicalPair> logicals) {
    const Eigen::MatrixXcd m = dense_matrix(h);
    const Spectrum spec = low_spectrum(m, static_cast<std::size_t>(m.rows()), true);
    const std::size_t degeneracy = ground_degeneracy(spec.values);
    const std::size_t k = logicals.size();
    if (k >= 30 || degeneracy != (std::size_t{1} << k)) {
        throw DegeneracyMismatchError(fmt::format(
            "ground degeneracy is {}, expected 2^{} for {} logical qubits", degeneracy, k, k));
    }
    const Eigen::MatrixXcd v = spec.vectors.leftCols(static_cast<Eigen::Index>(degeneracy));

    std::vector<CompiledOperator> z_ops, x_ops;
    for (const auto &pair : logicals) {
        if (pair.x_op.n_qubits() != h.n_qubits() || pair.z_op.n_qubits() != h.n_qubits()) {
            throw std::invalid_argument("logical operator has the wrong qubit count");
        }
        z_ops.emplace_back(PauliSum(pair.z_op));
        x_ops.emplace_back(PauliSum(pair.x_op));
    }

    Eigen::VectorXcd zero;
    double best = -1.0;
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::VectorXcd x = v.col(c);
        for (const auto &z : z_ops) {
            x = 0.5 * (x + z * x);
        }
        if (x.norm() > best) {
            best = x.norm();
            zero = x;
        }
    }
    if (best < 1e-6) {
        throw FrameError("logical Z operators have no common +1 vector in the ground space");
    }
    zero /= zero.norm();
    Eigen::Index peak = 0;
    zero.cwiseAbs().maxCoeff(&peak);
    zero *= std::conj(zero[peak]) / std::abs(zero[peak]);
    require_in_span(v, zero, "logical |0>");

    GroundSpace out;
    out.energy = spec.values[0];
    out.basis.resize(m.rows(), static_cast<Eigen::Index>(degeneracy));
    for (std::size_t label = 0; label < degeneracy; ++label) {
        Eigen::VectorXcd x = zero;
        for (std::size_t j = 0; j < k; ++j) {
            if ((label >> (k - 1 - j)) & 1) {
                x = x_ops[j] * x;
            }
        }
        require_in_span(v, x, "logical basis state");
        out.basis.col(static_cast<Eigen::Index>(label)) = x;
    }
    return out;
}

InducedUnitary induced_logical_unitary(const DraggingPlan &plan, std::span<const LogicalPair> in_logicals,
    std::span<const LogicalPair> out_logicals, const EvolveOptions &options, bool keep_step_blocks) {
    const GroundSpace in = ground_space_basis(plan.initial_hamiltonian(), in_logicals);
    const GroundSpace out = ground_space_basis(plan.final_hamiltonian(), out_logicals);
    InducedUnitary result;
    const Eigen::MatrixXcd evolved =
        evolve_block(plan, in.basis, options, keep_step_blocks ? &result.step_blocks : nullptr);
    result.matrix = out.basis.adjoint() * evolved;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(result.matrix);
    const double sigma_min = svd.singularValues().minCoeff();
    result.leakage = std::max(0.0, 1.0 - sigma_min * sigma_min);
    return result;
}

InducedUnitary induced_logical_unitary(const DraggingPlan &plan, const StabilizerFrame &in_frame,
    const StabilizerFrame &out_frame, const EvolveOptions &options, bool keep_step_blocks) {
    return induced_logical_unitary(plan, in_frame.logicals(), out_frame.logicals(), options, keep_step_blocks);
}

double process_fidelity(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.cols() == 0) {
        throw std::invalid_argument(fmt::format("cannot compare a {}x{} matrix with a {}x{} matrix",
            static_cast<long long>(u.rows()), static_cast<long long>(u.cols()), static_cast<long long>(v.rows()),
            static_cast<long long>(v.cols())));
    }
    const double d = static_cast<double>(u.cols());
    return std::norm((v.adjoint() * u).trace()) / (d * d);
}

}  // namespace acsqc
