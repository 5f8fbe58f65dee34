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

#include "acsqc/logical_recursion.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace acsqc {
namespace {

std::uint64_t bit(std::size_t site) { return std::uint64_t{1} << site; }

PauliString axis_on(std::size_t n, std::size_t site, Axis a) { return PauliString::single(n, site, axis_char(a)); }

Axis axis_of(char c) {
    switch (c) {
        case 'X':
            return Axis::kX;
        case 'Y':
            return Axis::kY;
        case 'Z':
            return Axis::kZ;
        default:
            throw std::invalid_argument("identity has no axis");
    }
}

// (P [beta]_site)^{CZ(site, site+1)}, with the controlled phase omitted on the last site.
PauliSum dressed_component(const PauliSum &p, std::size_t site, Axis beta) {
    std::size_t n = p.n_qubits();
    PauliSum term = p * PauliSum(axis_on(n, site, beta));
    if (site + 1 < n) {
        term = conj_by_clifford(term, CliffordGate::CZ(site, site + 1));
    }
    return term;
}

}  // namespace

char axis_char(Axis a) {
    switch (a) {
        case Axis::kX:
            return 'X';
        case Axis::kY:
            return 'Y';
        case Axis::kZ:
            return 'Z';
    }
    return '?';
}

CoefficientOperator CoefficientOperator::base(std::size_t n_qubits) {
    if (n_qubits < 2) {
        throw std::invalid_argument("rotated chain needs at least 2 qubits");
    }
    CoefficientOperator c(n_qubits, 0);
    for (Axis a : kAxes) {
        for (Axis b : kAxes) {
            c.entries_[static_cast<int>(a)][static_cast<int>(b)] =
                a == b ? PauliSum(PauliString::identity(n_qubits)) : PauliSum(n_qubits);
        }
    }
    return c;
}

bool CoefficientOperator::satisfies_support_restriction() const {
    const std::uint64_t allowed = site_ == 0 ? 0 : (bit(site_) - 1);
    for (const auto &row : entries_) {
        for (const auto &e : row) {
            for (const auto &t : e.terms()) {
                if (t.word.z_mask() != 0 || (t.word.x_mask() & ~allowed) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

LogicalBar reconstruct_logical_bar(const CoefficientOperator &coeffs) {
    LogicalBar bar;
    bar.site = coeffs.site();
    for (Axis a : kAxes) {
        PauliSum total(coeffs.n_qubits());
        for (Axis b : kAxes) {
            total += dressed_component(coeffs.entry(a, b), coeffs.site(), b);
        }
        bar.ops[static_cast<int>(a)] = total;
    }
    return bar;
}

PauliSum rotated_stabilizer(std::size_t n_qubits, std::size_t i, double theta_next) {
    if (i + 1 >= n_qubits) {
        throw std::out_of_range(fmt::format("no rotated stabilizer T_{} on {} qubits", i, n_qubits));
    }
    if (i + 2 == n_qubits) {
        return PauliSum(PauliString::from_sparse(n_qubits, {{i, 'Z'}, {i + 1, 'X'}}));
    }
    PauliString untwisted = PauliString::from_sparse(n_qubits, {{i, 'Z'}, {i + 1, 'X'}, {i + 2, 'Z'}});
    return z_rotate_conjugate(untwisted, i + 1, theta_next);
}

CoefficientOperator recursion_step(const CoefficientOperator &coeffs, double theta_next) {
    const std::size_t n = coeffs.n_qubits();
    const std::size_t i = coeffs.site();
    const std::size_t next = i + 1;
    if (next + 2 > n) {
        throw std::out_of_range(fmt::format("recursion step from site {} overflows a {}-qubit chain", i, n));
    }
    const PauliSum t_i = rotated_stabilizer(n, i, theta_next);

    CoefficientOperator out(n, next);
    for (Axis a : kAxes) {
        PauliSum expanded(n);
        for (Axis b : kAxes) {
            PauliSum component = dressed_component(coeffs.entry(a, b), i, b);
            if (b != Axis::kX) {
                component = t_i * component;
            }
            expanded += component;
        }

        std::array<PauliSum, 3> row{PauliSum(n), PauliSum(n), PauliSum(n)};
        for (const auto &term : expanded.terms()) {
            PauliString w = term.word;
            if (next + 1 < n) {
                w = conj_by_clifford(w, CliffordGate::CZ(next, next + 1));
            }
            const char at_next = w.at(next);
            const std::uint64_t before = bit(next) - 1;
            if (at_next == 'I' || (w.support() & ~(before | bit(next))) != 0 || (w.z_mask() & before) != 0) {
                throw std::logic_error(fmt::format(
                    "recursion produced an unexpected word {} while advancing to site {}", w.str(), next));
            }
            PauliString rest(n, w.x_mask() & before, 0, w.phase_exponent());
            row[static_cast<int>(axis_of(at_next))].add(term.coefficient, rest);
        }
        for (Axis b : kAxes) {
            out.entries_[static_cast<int>(a)][static_cast<int>(b)] = row[static_cast<int>(b)];
        }
    }
    return out;
}

CoefficientOperator coefficients_at(std::size_t site, const RotationProfile &thetas) {
    CoefficientOperator c = CoefficientOperator::base(thetas.size());
    while (c.site() < site) {
        c = recursion_step(c, thetas[c.site() + 1]);
    }
    return c;
}

PauliSum restrict_plus_x(const PauliSum &op, std::uint64_t sites) {
    PauliSum out(op.n_qubits());
    for (const auto &t : op.terms()) {
        if ((t.word.z_mask() & sites) != 0) {
            throw std::invalid_argument(
                fmt::format("word {} carries Y or Z on a site restricted to the +1 eigenspace of X", t.word.str()));
        }
        out.add(t.coefficient, PauliString(op.n_qubits(), t.word.x_mask() & ~sites, t.word.z_mask()));
    }
    return out;
}

std::array<Complex, 3> local_frame_coefficients(const PauliSum &op, std::size_t site) {
    const std::size_t n = op.n_qubits();
    std::array<Complex, 3> c{};
    for (const auto &t : op.terms()) {
        PauliString w = t.word;
        if (site + 1 < n) {
            w = conj_by_clifford(w, CliffordGate::CZ(site, site + 1));
        }
        if (w.support() != bit(site)) {
            throw std::invalid_argument(fmt::format("word {} is not a dressed single-site Pauli on site {}", w.str(), site));
        }
        c[static_cast<int>(axis_of(w.at(site)))] += t.coefficient * w.phase();
    }
    return c;
}

FrameGateReport frame_gate_check(std::size_t site, const RotationProfile &thetas) {
    const std::size_t n = thetas.size();
    if (n < 3 || site + 3 > n) {
        throw std::out_of_range(fmt::format("frame_gate_check site {} invalid for {} qubits", site, n));
    }
    FrameGateReport report;
    report.site = site;

    const CoefficientOperator here = coefficients_at(site, thetas);
    const CoefficientOperator next = recursion_step(here, thetas[site + 1]);
    const LogicalBar bar_here = reconstruct_logical_bar(here);
    const LogicalBar bar_next = reconstruct_logical_bar(next);

    for (Axis a : kAxes) {
        const int ai = static_cast<int>(a);
        report.via_recursion[ai] = local_frame_coefficients(restrict_plus_x(bar_next.op(a), bit(site + 1) - 1), site + 1);

        const auto local = local_frame_coefficients(restrict_plus_x(bar_here.op(a), bit(site) - 1), site);
        PauliSum abstract(1);
        for (Axis b : kAxes) {
            abstract.add(local[static_cast<int>(b)], PauliString::single(1, 0, axis_char(b)));
        }
        PauliSum moved = z_rotate_conjugate(conj_by_clifford(abstract, CliffordGate::H(0)), 0, thetas[site + 1]);
        for (Axis b : kAxes) {
            report.via_conjugation[ai][static_cast<int>(b)] = moved.coefficient_of(PauliString::single(1, 0, axis_char(b)));
        }
        for (int b = 0; b < 3; ++b) {
            report.max_coefficient_error = std::max(
                report.max_coefficient_error, std::abs(report.via_recursion[ai][b] - report.via_conjugation[ai][b]));
        }
    }
    return report;
}

}  // namespace acsqc
