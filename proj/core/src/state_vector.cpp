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

#include "acsqc/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <fmt/format.h>

namespace acsqc {
namespace {

Complex i_pow(int e) {
    static const Complex kTable[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kTable[e & 3];
}

void require_dimension(std::size_t n_qubits, Eigen::Index size) {
    if (n_qubits > 30 || size != (Eigen::Index{1} << n_qubits)) {
        throw std::invalid_argument(
            fmt::format("state has dimension {}, expected 2^{}", static_cast<long long>(size), n_qubits));
    }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    require_dimension(n_qubits_, amplitudes_.size());
    if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument(fmt::format("state norm {} is not 1", amplitudes_.norm()));
    }
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    if (index >= static_cast<std::uint64_t>(v.size())) {
        throw std::out_of_range("basis index out of range");
    }
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::normalized(std::size_t n_qubits, Eigen::VectorXcd amplitudes) {
    double norm = amplitudes.norm();
    if (norm == 0) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    amplitudes /= norm;
    return StateVector(n_qubits, std::move(amplitudes));
}

std::uint64_t site_mask_to_index_mask(std::uint64_t site_mask, std::size_t n_qubits) {
    std::uint64_t out = 0;
    while (site_mask != 0) {
        int k = std::countr_zero(site_mask);
        site_mask &= site_mask - 1;
        out |= std::uint64_t{1} << (n_qubits - 1 - static_cast<std::size_t>(k));
    }
    return out;
}

CompiledOperator::CompiledOperator(const PauliSum &op) : n_qubits_(op.n_qubits()) {
    if (n_qubits_ == 0 || n_qubits_ > 30) {
        throw std::invalid_argument(fmt::format("cannot compile a {}-qubit operator", n_qubits_));
    }
    const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
    for (const auto &term : op.terms()) {
        const std::uint64_t flip = site_mask_to_index_mask(term.word.x_mask(), n_qubits_);
        const std::uint64_t zmask = site_mask_to_index_mask(term.word.z_mask(), n_qubits_);
        // Y = i X Z on every site carrying both bits.
        const Complex c = term.coefficient * term.word.phase() *
                          i_pow(std::popcount(term.word.x_mask() & term.word.z_mask()));
        auto it = std::find_if(groups_.begin(), groups_.end(), [flip](const Group &g) { return g.flip == flip; });
        if (it == groups_.end()) {
            groups_.push_back({flip, Eigen::VectorXcd::Zero(dim)});
            it = std::prev(groups_.end());
        }
        for (Eigen::Index b = 0; b < dim; ++b) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(b) & zmask) & 1;
            it->diagonal[b] += odd ? -c : c;
        }
    }
    std::sort(groups_.begin(), groups_.end(), [](const Group &a, const Group &b) { return a.flip < b.flip; });
}

CompiledOperator CompiledOperator::combine(std::span<const std::pair<double, const CompiledOperator *>> parts) {
    CompiledOperator out;
    for (const auto &[w, part] : parts) {
        if (out.n_qubits_ == 0) {
            out.n_qubits_ = part->n_qubits_;
        } else if (out.n_qubits_ != part->n_qubits_) {
            throw std::invalid_argument("cannot combine operators of different sizes");
        }
        if (w == 0) {
            continue;
        }
        for (const auto &g : part->groups_) {
            auto it = std::lower_bound(out.groups_.begin(), out.groups_.end(), g.flip,
                [](const Group &x, std::uint64_t f) { return x.flip < f; });
            if (it != out.groups_.end() && it->flip == g.flip) {
                it->diagonal += w * g.diagonal;
            } else {
                out.groups_.insert(it, Group{g.flip, w * g.diagonal});
            }
        }
    }
    return out;
}

void CompiledOperator::apply(const Eigen::Ref<const Eigen::VectorXcd> &in, Eigen::Ref<Eigen::VectorXcd> out,
    Complex scale, bool accumulate) const {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
    if (in.size() != dim || out.size() != dim) {
        throw std::invalid_argument("operator/state dimension mismatch");
    }
    if (!accumulate) {
        out.setZero();
    }
    for (const auto &g : groups_) {
        const Complex *d = g.diagonal.data();
        const Complex *src = in.data();
        Complex *dst = out.data();
        const auto flip = static_cast<Eigen::Index>(g.flip);
        if (scale == Complex{1, 0}) {
            for (Eigen::Index b = 0; b < dim; ++b) {
                dst[b ^ flip] += d[b] * src[b];
            }
        } else {
            for (Eigen::Index b = 0; b < dim; ++b) {
                dst[b ^ flip] += scale * d[b] * src[b];
            }
        }
    }
}

Eigen::VectorXcd CompiledOperator::operator*(const Eigen::VectorXcd &in) const {
    Eigen::VectorXcd out(in.size());
    apply(in, out);
    return out;
}

Complex CompiledOperator::expectation(const Eigen::VectorXcd &v) const { return v.dot(*this * v); }

Eigen::VectorXcd apply_state(const HamiltonianSpec &h, const Eigen::VectorXcd &v) {
    require_dimension(h.n_qubits(), v.size());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (const auto &term : h.terms()) {
        CompiledOperator(term.op).apply(v, out, term.weight, true);
    }
    return out;
}

Eigen::VectorXcd apply_state(const HamiltonianSpec &h, const StateVector &v) {
    if (v.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("state/Hamiltonian qubit count mismatch");
    }
    return apply_state(h, v.amplitudes());
}

Complex expectation(const PauliSum &op, const Eigen::VectorXcd &v) { return CompiledOperator(op).expectation(v); }

}  // namespace acsqc
