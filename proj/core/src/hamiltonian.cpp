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

#include "acsqc/hamiltonian.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "acsqc/logical_recursion.hpp"

namespace acsqc {

HamiltonianSpec::HamiltonianSpec(std::size_t n_qubits, double delta) : n_qubits_(n_qubits), delta_(delta) {
    if (n_qubits == 0 || n_qubits > PauliString::kMaxQubits) {
        throw std::invalid_argument(fmt::format("unsupported qubit count {}", n_qubits));
    }
    if (!(delta > 0)) {
        throw std::invalid_argument("delta must be positive");
    }
}

void HamiltonianSpec::add_term(std::string label, double weight, PauliSum op) {
    if (op.n_qubits() != n_qubits_) {
        throw std::invalid_argument(fmt::format("term {} has {} qubits, expected {}", label, op.n_qubits(), n_qubits_));
    }
    if (!op.is_hermitian()) {
        throw std::invalid_argument(fmt::format("term {} is not Hermitian", label));
    }
    terms_.push_back({std::move(label), weight, std::move(op)});
}

std::size_t HamiltonianSpec::index_of(const std::string &label) const {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].label == label) {
            return k;
        }
    }
    throw std::out_of_range(fmt::format("no term labelled {}", label));
}

PauliSum HamiltonianSpec::total() const {
    PauliSum out(n_qubits_);
    for (const auto &t : terms_) {
        out += Complex{t.weight, 0} * t.op;
    }
    return out;
}

bool HamiltonianSpec::terms_commute() const {
    for (std::size_t a = 0; a < terms_.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            PauliSum comm = terms_[a].op * terms_[b].op - terms_[b].op * terms_[a].op;
            if (!comm.pruned(1e-12).empty()) {
                return false;
            }
        }
    }
    return true;
}

PauliString chain_stabilizer(std::size_t n, std::size_t i) {
    if (n < 2 || i >= n) {
        throw std::out_of_range(fmt::format("no chain stabilizer S_{} on {} qubits", i, n));
    }
    if (i == 0) {
        return PauliString::from_sparse(n, {{0, 'X'}, {1, 'Z'}});
    }
    // 1-based S_i acts on sites i, i+1, i+2 -> 0-based i-1, i, i+1.
    if (i == n - 1) {
        return PauliString::from_sparse(n, {{i - 1, 'Z'}, {i, 'X'}});
    }
    return PauliString::from_sparse(n, {{i - 1, 'Z'}, {i, 'X'}, {i + 1, 'Z'}});
}

PauliSum rotated_field(std::size_t n_qubits, std::size_t site, double theta) {
    return z_rotate_conjugate(PauliString::single(n_qubits, site, 'X'), site, -theta);
}

HamiltonianSpec build_chain_h0(std::size_t n, double delta) {
    if (n < 2) {
        throw std::invalid_argument("chain needs n >= 2");
    }
    HamiltonianSpec h(n, delta);
    for (std::size_t i = 1; i < n; ++i) {
        h.add_term(fmt::format("S{}", i), -delta, PauliSum(chain_stabilizer(n, i)));
    }
    return h;
}

HamiltonianSpec build_twisted_chain(std::size_t n, double delta, const RotationProfile &thetas) {
    if (n < 2) {
        throw std::invalid_argument("chain needs n >= 2");
    }
    if (thetas.size() != n) {
        throw std::invalid_argument(fmt::format("rotation profile has {} entries for {} qubits", thetas.size(), n));
    }
    HamiltonianSpec h(n, delta);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h.add_term(fmt::format("T{}", i + 1), -delta, rotated_stabilizer(n, i, thetas[i + 1]));
    }
    return h;
}

HamiltonianSpec build_prep_chain(std::size_t n, double delta) {
    if (n < 2) {
        throw std::invalid_argument("chain needs n >= 2");
    }
    HamiltonianSpec h(n, delta);
    h.add_term("S0", -delta, PauliSum(chain_stabilizer(n, 0)));
    for (std::size_t i = 1; i < n; ++i) {
        h.add_term(fmt::format("S{}", i), -delta, PauliSum(chain_stabilizer(n, i)));
    }
    return h;
}

HamiltonianSpec build_two_qubit_h2(double delta) {
    constexpr std::size_t n = 6;
    HamiltonianSpec h(n, delta);
    for (bool b : {false, true}) {
        const char w = b ? 'b' : 'a';
        h.add_term(fmt::format("K2{}", w), -delta,
            PauliSum(PauliString::from_sparse(
                n, {{h2_site(0, b), 'Z'}, {h2_site(1, b), 'X'}, {h2_site(2, b), 'Z'}, {h2_site(1, !b), 'Z'}})));
        h.add_term(fmt::format("K3{}", w), -delta,
            PauliSum(PauliString::from_sparse(n, {{h2_site(1, b), 'Z'}, {h2_site(2, b), 'X'}})));
    }
    return h;
}

HamiltonianSpec local_field_term(std::size_t n_qubits, std::size_t site, double theta, double delta) {
    HamiltonianSpec h(n_qubits, delta);
    h.add_term(fmt::format("F{}", site + 1), -delta, rotated_field(n_qubits, site, theta));
    return h;
}

}  // namespace acsqc
