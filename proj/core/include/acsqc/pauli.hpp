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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acsqc {

using Complex = std::complex<double>;

/// A signed Pauli word `i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}` on up to 64 sites.
///
/// Site `k` is stored at bit `k` of both masks. A site carrying X sets its x bit, Z sets its
/// z bit, and Y sets both; the Y factor is the Hermitian Pauli Y, so the phase exponent
/// alone decides Hermiticity (even exponent).
class PauliString {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliString() = default;
    PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exponent = 0);

    static PauliString identity(std::size_t n_qubits);
    static PauliString single(std::size_t n_qubits, std::size_t site, char pauli);
    static PauliString from_sparse(
        std::size_t n_qubits, const std::vector<std::pair<std::size_t, char>> &factors, int phase_exponent = 0);
    /// Parses text like "+XZ_", "-iY", "XIZ". Accepts `_` or `I` for identity.
    static PauliString from_str(std::string_view text);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::uint64_t x_mask() const noexcept { return x_mask_; }
    std::uint64_t z_mask() const noexcept { return z_mask_; }
    std::uint64_t support() const noexcept { return x_mask_ | z_mask_; }
    /// Power of i in [0, 4).
    int phase_exponent() const noexcept { return phase_; }
    Complex phase() const noexcept;
    bool is_hermitian() const noexcept { return (phase_ & 1) == 0; }
    bool is_identity_word() const noexcept { return support() == 0; }
    std::size_t weight() const noexcept;
    /// 'I', 'X', 'Y' or 'Z'.
    char at(std::size_t site) const;

    PauliString with_phase(int phase_exponent) const;
    PauliString negated() const { return with_phase(phase_ + 2); }
    /// Same masks, ignoring phase.
    bool same_word(const PauliString &other) const noexcept {
        return n_qubits_ == other.n_qubits_ && x_mask_ == other.x_mask_ && z_mask_ == other.z_mask_;
    }

    /// Stim-style rendering: sign prefix ("+", "-", "+i", "-i") then one char per site, `_` for identity.
    std::string str() const;
    /// Sparse rendering with 1-based site labels, e.g. "-X1 Z2 Y4". Identity renders as "+I".
    std::string sparse_str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::size_t n_qubits_ = 0;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
    int phase_ = 0;
};

/// Phase-exact product `p * q`. Throws std::invalid_argument on size mismatch.
PauliString pauli_mul(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) { return pauli_mul(p, q); }

/// True iff `p q = q p`. Throws std::invalid_argument on size mismatch.
bool commutes(const PauliString &p, const PauliString &q);

enum class CliffordKind { kH, kS, kCZ };

struct CliffordGate {
    CliffordKind kind;
    std::size_t a = 0;
    std::size_t b = 0;

    static CliffordGate H(std::size_t site) { return {CliffordKind::kH, site, 0}; }
    static CliffordGate S(std::size_t site) { return {CliffordKind::kS, site, 0}; }
    static CliffordGate CZ(std::size_t a, std::size_t b) { return {CliffordKind::kCZ, a, b}; }
};

/// Returns `U p U^dagger` with exact phase. Throws std::out_of_range for bad sites.
PauliString conj_by_clifford(const PauliString &p, const CliffordGate &gate);

/// cos and sin, snapped to exact values at integer multiples of pi/2.
std::pair<double, double> exact_cos_sin(double theta);

/// Complex-weighted sum of Pauli words. Words are stored phase-free (the phase is folded into
/// the coefficient), sorted by (x_mask, z_mask), and merged; exactly-zero terms are dropped.
class PauliSum {
   public:
    struct Term {
        Complex coefficient;
        PauliString word;
    };

    PauliSum() = default;
    explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}
    PauliSum(const PauliString &word, Complex coefficient = 1.0);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    void add(Complex coefficient, const PauliString &word);
    Complex coefficient_of(const PauliString &word) const;

    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator-=(const PauliSum &other);
    PauliSum &operator*=(Complex scale);
    friend PauliSum operator+(PauliSum a, const PauliSum &b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum &b) { return a -= b; }
    friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
    friend PauliSum operator*(const PauliSum &a, const PauliSum &b);

    /// Drops terms with |coefficient| <= tol.
    PauliSum pruned(double tol) const;
    /// All coefficients real within tol (every stored word is Hermitian).
    bool is_hermitian(double tol = 1e-12) const;
    /// Largest |coefficient| of `*this - other` over the union of words.
    double max_abs_difference(const PauliSum &other) const;
    /// Sum of |coefficient|; bounds the operator norm.
    double one_norm() const;

    std::string str() const;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<Term> terms_;
};

PauliSum conj_by_clifford(const PauliSum &p, const CliffordGate &gate);

/// Conjugation by U(theta) = exp(-i theta Z_site / 2):
/// `U p U^dagger = cos(theta) p + sin(theta) (-i Z_site p)` when p anticommutes with Z_site,
/// and `p` otherwise. In particular X -> cos X + sin Y.
PauliSum z_rotate_conjugate(const PauliString &p, std::size_t site, double theta);
PauliSum z_rotate_conjugate(const PauliSum &p, std::size_t site, double theta);

}  // namespace acsqc
