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

#include "acsqc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace acsqc {
namespace {

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

void require_same_size(const PauliString &p, const PauliString &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument(
            fmt::format("Pauli size mismatch: {} vs {} qubits", p.n_qubits(), q.n_qubits()));
    }
}

void require_site(std::size_t n, std::size_t site) {
    if (site >= n) {
        throw std::out_of_range(fmt::format("site {} out of range for {} qubits", site, n));
    }
}

bool key_less(const PauliString &a, const PauliString &b) {
    if (a.x_mask() != b.x_mask()) {
        return a.x_mask() < b.x_mask();
    }
    return a.z_mask() < b.z_mask();
}

Complex i_pow(int e) {
    switch (e & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exponent)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask), phase_(((phase_exponent % 4) + 4) % 4) {
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument(fmt::format("PauliString supports at most {} qubits", kMaxQubits));
    }
    if (((x_mask | z_mask) & ~low_bits(n_qubits)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond n_qubits");
    }
}

PauliString PauliString::identity(std::size_t n_qubits) { return PauliString(n_qubits, 0, 0, 0); }

PauliString PauliString::single(std::size_t n_qubits, std::size_t site, char pauli) {
    return from_sparse(n_qubits, {{site, pauli}});
}

PauliString PauliString::from_sparse(
    std::size_t n_qubits, const std::vector<std::pair<std::size_t, char>> &factors, int phase_exponent) {
    PauliString result = identity(n_qubits).with_phase(phase_exponent);
    for (const auto &[site, c] : factors) {
        require_site(n_qubits, site);
        std::uint64_t bit = std::uint64_t{1} << site;
        PauliString factor;
        switch (c) {
            case 'I':
            case '_':
                continue;
            case 'X':
                factor = PauliString(n_qubits, bit, 0);
                break;
            case 'Y':
                factor = PauliString(n_qubits, bit, bit);
                break;
            case 'Z':
                factor = PauliString(n_qubits, 0, bit);
                break;
            default:
                throw std::invalid_argument(fmt::format("unknown Pauli '{}'", c));
        }
        result = result * factor;
    }
    return result;
}

PauliString PauliString::from_str(std::string_view text) {
    int phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (k >= kMaxQubits) {
            throw std::invalid_argument("Pauli text too long");
        }
        std::uint64_t bit = std::uint64_t{1} << k;
        switch (text[k]) {
            case '_':
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument(fmt::format("bad Pauli character '{}'", text[k]));
        }
    }
    return PauliString(text.size(), x, z, phase);
}

Complex PauliString::phase() const noexcept { return i_pow(phase_); }

std::size_t PauliString::weight() const noexcept { return static_cast<std::size_t>(std::popcount(support())); }

char PauliString::at(std::size_t site) const {
    require_site(n_qubits_, site);
    bool x = (x_mask_ >> site) & 1;
    bool z = (z_mask_ >> site) & 1;
    if (x && z) {
        return 'Y';
    }
    return x ? 'X' : (z ? 'Z' : 'I');
}

PauliString PauliString::with_phase(int phase_exponent) const {
    PauliString r = *this;
    r.phase_ = ((phase_exponent % 4) + 4) % 4;
    return r;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t k = 0; k < n_qubits_; ++k) {
        char c = at(k);
        out.push_back(c == 'I' ? '_' : c);
    }
    return out;
}

std::string PauliString::sparse_str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    if (is_identity_word()) {
        return out + "I";
    }
    bool first = true;
    for (std::size_t k = 0; k < n_qubits_; ++k) {
        char c = at(k);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            out.push_back(' ');
        }
        first = false;
        out += fmt::format("{}{}", c, k + 1);
    }
    return out;
}

PauliString pauli_mul(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    // Per-site mod-4 tally of the i factors produced by multiplying single-site Paulis.
    std::uint64_t x1 = p.x_mask();
    std::uint64_t z1 = p.z_mask();
    std::uint64_t x2 = q.x_mask();
    std::uint64_t z2 = q.z_mask();
    std::uint64_t nx = x1 ^ x2;
    std::uint64_t nz = z1 ^ z2;
    std::uint64_t x1z2 = x1 & z2;
    std::uint64_t anti = (x2 & z1) ^ x1z2;
    std::uint64_t cnt2 = (nx ^ nz ^ x1z2) & anti;
    int log_i = std::popcount(anti) + 2 * std::popcount(cnt2);
    return PauliString(p.n_qubits(), nx, nz, p.phase_exponent() + q.phase_exponent() + log_i);
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    std::uint64_t anti = (p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask());
    return (std::popcount(anti) & 1) == 0;
}

PauliString conj_by_clifford(const PauliString &p, const CliffordGate &gate) {
    const std::size_t n = p.n_qubits();
    require_site(n, gate.a);
    std::vector<std::size_t> sites{gate.a};
    if (gate.kind == CliffordKind::kCZ) {
        require_site(n, gate.b);
        if (gate.a == gate.b) {
            throw std::invalid_argument("CZ needs two distinct sites");
        }
        sites.push_back(gate.b);
    }

    auto image_x = [&](std::size_t site) -> PauliString {
        switch (gate.kind) {
            case CliffordKind::kH:
                return PauliString::single(n, site, 'Z');
            case CliffordKind::kS:
                return PauliString::single(n, site, 'Y');
            case CliffordKind::kCZ: {
                std::size_t other = site == gate.a ? gate.b : gate.a;
                return PauliString::from_sparse(n, {{site, 'X'}, {other, 'Z'}});
            }
        }
        return {};
    };
    auto image_z = [&](std::size_t site) -> PauliString {
        return gate.kind == CliffordKind::kH ? PauliString::single(n, site, 'X') : PauliString::single(n, site, 'Z');
    };

    std::uint64_t touched = 0;
    for (std::size_t s : sites) {
        touched |= std::uint64_t{1} << s;
    }
    // P = i^phase * rest * (factors on touched sites); the split introduces no phase.
    PauliString result(n, p.x_mask() & ~touched, p.z_mask() & ~touched, p.phase_exponent());
    for (std::size_t s : sites) {
        bool x = (p.x_mask() >> s) & 1;
        bool z = (p.z_mask() >> s) & 1;
        if (x && z) {
            // Y = i X Z
            result = result.with_phase(result.phase_exponent() + 1);
        }
        if (x) {
            result = result * image_x(s);
        }
        if (z) {
            result = result * image_z(s);
        }
    }
    return result;
}

std::pair<double, double> exact_cos_sin(double theta) {
    double quarter_turns = theta / (std::numbers::pi / 2);
    double nearest = std::round(quarter_turns);
    if (std::abs(quarter_turns - nearest) < 1e-14 * std::max(1.0, std::abs(nearest))) {
        switch (((static_cast<long long>(nearest) % 4) + 4) % 4) {
            case 0:
                return {1.0, 0.0};
            case 1:
                return {0.0, 1.0};
            case 2:
                return {-1.0, 0.0};
            default:
                return {0.0, -1.0};
        }
    }
    return {std::cos(theta), std::sin(theta)};
}

// ---------------------------------------------------------------------------
// PauliSum

PauliSum::PauliSum(const PauliString &word, Complex coefficient) : n_qubits_(word.n_qubits()) {
    add(coefficient, word);
}

void PauliSum::add(Complex coefficient, const PauliString &word) {
    if (word.n_qubits() != n_qubits_) {
        throw std::invalid_argument(
            fmt::format("PauliSum size mismatch: {} vs {} qubits", word.n_qubits(), n_qubits_));
    }
    Complex c = coefficient * word.phase();
    if (c == Complex{0, 0}) {
        return;
    }
    PauliString key = word.with_phase(0);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term &t, const PauliString &k) {
        return key_less(t.word, k);
    });
    if (it != terms_.end() && it->word.same_word(key)) {
        it->coefficient += c;
        if (it->coefficient == Complex{0, 0}) {
            terms_.erase(it);
        }
        return;
    }
    terms_.insert(it, Term{c, key});
}

Complex PauliSum::coefficient_of(const PauliString &word) const {
    PauliString key = word.with_phase(0);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term &t, const PauliString &k) {
        return key_less(t.word, k);
    });
    if (it != terms_.end() && it->word.same_word(key)) {
        // coefficient * word == (coefficient / phase) * (phase * word)
        return it->coefficient / word.phase();
    }
    return {0, 0};
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    if (n_qubits_ == 0 && terms_.empty()) {
        n_qubits_ = other.n_qubits_;
    }
    for (const auto &t : other.terms_) {
        add(t.coefficient, t.word);
    }
    return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &other) {
    if (n_qubits_ == 0 && terms_.empty()) {
        n_qubits_ = other.n_qubits_;
    }
    for (const auto &t : other.terms_) {
        add(-t.coefficient, t.word);
    }
    return *this;
}

PauliSum &PauliSum::operator*=(Complex scale) {
    if (scale == Complex{0, 0}) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coefficient *= scale;
    }
    return *this;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("PauliSum size mismatch in product");
    }
    PauliSum out(a.n_qubits());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            out.add(ta.coefficient * tb.coefficient, ta.word * tb.word);
        }
    }
    return out;
}

PauliSum PauliSum::pruned(double tol) const {
    PauliSum out(n_qubits_);
    for (const auto &t : terms_) {
        if (std::abs(t.coefficient) > tol) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(), [tol](const Term &t) { return std::abs(t.coefficient.imag()) <= tol; });
}

double PauliSum::max_abs_difference(const PauliSum &other) const {
    PauliSum diff = *this - other;
    double worst = 0;
    for (const auto &t : diff.terms()) {
        worst = std::max(worst, std::abs(t.coefficient));
    }
    return worst;
}

double PauliSum::one_norm() const {
    double total = 0;
    for (const auto &t : terms_) {
        total += std::abs(t.coefficient);
    }
    return total;
}

std::string PauliSum::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &t : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (t.coefficient.imag() == 0) {
            out += fmt::format("{:.6g}*", t.coefficient.real());
        } else {
            out += fmt::format("({:.6g}{:+.6g}i)*", t.coefficient.real(), t.coefficient.imag());
        }
        out += t.word.str().substr(1);
    }
    return out;
}

PauliSum conj_by_clifford(const PauliSum &p, const CliffordGate &gate) {
    PauliSum out(p.n_qubits());
    for (const auto &t : p.terms()) {
        out.add(t.coefficient, conj_by_clifford(t.word, gate));
    }
    return out;
}

PauliSum z_rotate_conjugate(const PauliString &p, std::size_t site, double theta) {
    require_site(p.n_qubits(), site);
    PauliSum out(p.n_qubits());
    if (((p.x_mask() >> site) & 1) == 0) {
        out.add(1.0, p);
        return out;
    }
    auto [c, s] = exact_cos_sin(theta);
    out.add(c, p);
    // -i Z_site p
    PauliString rotated = PauliString::single(p.n_qubits(), site, 'Z') * p;
    out.add(Complex{0, -s}, rotated);
    return out;
}

PauliSum z_rotate_conjugate(const PauliSum &p, std::size_t site, double theta) {
    PauliSum out(p.n_qubits());
    for (const auto &t : p.terms()) {
        out += t.coefficient * z_rotate_conjugate(t.word, site, theta);
    }
    return out;
}

}  // namespace acsqc
