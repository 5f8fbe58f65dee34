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

#include <algorithm>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "acsqc/errors.hpp"
#include "acsqc/spectrum.hpp"
#include "acsqc/state_vector.hpp"
#include "oracles/dense_pauli.hpp"
#include "test_support.hpp"

using namespace acsqc;

namespace {

PauliString P(const char *text) { return PauliString::from_str(text); }

Eigen::VectorXd dense_eigenvalues(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

class ScopedCap {
   public:
    explicit ScopedCap(const char *value) { ::setenv("ACSQC_DENSE_CAP", value, 1); }
    ~ScopedCap() { ::unsetenv("ACSQC_DENSE_CAP"); }
};

}  // namespace

TEST(chain_stabilizer, examples) {
    EXPECT_EQ(chain_stabilizer(4, 0), P("XZ__"));
    EXPECT_EQ(chain_stabilizer(4, 1), P("ZXZ_"));
    EXPECT_EQ(chain_stabilizer(4, 2), P("_ZXZ"));
    EXPECT_EQ(chain_stabilizer(4, 3), P("__ZX"));
    EXPECT_EQ(chain_stabilizer(2, 1), P("ZX"));
    EXPECT_THROW(chain_stabilizer(4, 4), std::out_of_range);
}

TEST(rotated_field, is_rotated_x) {
    const double t = 0.6;
    const auto m = rotated_field(3, 1, t);
    EXPECT_NEAR(std::abs(m.coefficient_of(P("_X_")) - std::cos(t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.coefficient_of(P("_Y_")) + std::sin(t)), 0.0, 1e-15);
    const Eigen::MatrixXcd u = oracle::on_site(oracle::z_rotation(-t), 1, 3);
    const Eigen::MatrixXcd want = u * oracle::matrix_of(P("_X_")) * u.adjoint();
    EXPECT_LT((oracle::matrix_of(m) - want).norm(), 1e-12);
}

TEST(hamiltonian_spec, labels_and_validation) {
    const auto h = build_chain_h0(4, 2.0);
    EXPECT_EQ(h.term_count(), 3u);
    EXPECT_EQ(h.index_of("S2"), 1u);
    EXPECT_EQ(h.terms()[0].weight, -2.0);
    EXPECT_TRUE(h.terms_commute());
    EXPECT_THROW(h.index_of("S0"), std::out_of_range);

    HamiltonianSpec bad(2);
    EXPECT_THROW(bad.add_term("x", 1.0, PauliSum(P("X__"))), std::invalid_argument);
    EXPECT_THROW(bad.add_term("x", 1.0, PauliSum(P("iX_"))), std::invalid_argument);
    EXPECT_THROW(HamiltonianSpec(2, 0.0), std::invalid_argument);
    EXPECT_THROW(build_chain_h0(1), std::invalid_argument);
    EXPECT_THROW(build_twisted_chain(3, 1.0, RotationProfile::zeros(4)), std::invalid_argument);

    auto mixed = build_chain_h0(3);
    mixed.add_term("X1", -1.0, PauliSum(P("X__")));
    EXPECT_FALSE(mixed.terms_commute());
}

TEST(twisted_chain, zero_profile_matches_untwisted_words) {
    const auto twisted = build_twisted_chain(5, 1.0, RotationProfile::zeros(5));
    const auto plain = build_chain_h0(5);
    ASSERT_EQ(twisted.term_count(), plain.term_count());
    for (std::size_t k = 0; k < plain.term_count(); ++k) {
        EXPECT_EQ(twisted.terms()[k].op.max_abs_difference(plain.terms()[k].op), 0.0);
    }
}

TEST(twisted_chain, spectrum_matches_untwisted) {
    std::mt19937_64 rng(testkit::kSeed + 30);
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto plain = dense_eigenvalues(oracle::matrix_of(build_chain_h0(n)));
        for (int trial = 0; trial < 3; ++trial) {
            const auto h = build_twisted_chain(n, 1.0, testkit::random_profile(rng, n));
            ASSERT_TRUE(h.terms_commute());
            const auto twisted = dense_eigenvalues(oracle::matrix_of(h));
            ASSERT_LT((twisted - plain).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
        }
    }
}

TEST(spectrum, chain_and_prep_gaps) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto chain = low_spectrum(build_chain_h0(n, 1.5), 4);
        EXPECT_EQ(ground_degeneracy(chain.values), 2u);
        EXPECT_NEAR(chain.values[0], -1.5 * static_cast<double>(n - 1), 1e-10);
        EXPECT_NEAR(spectral_gap(chain.values), 3.0, 1e-10);

        const auto prep = low_spectrum(build_prep_chain(n), 3);
        EXPECT_EQ(ground_degeneracy(prep.values), 1u);
        EXPECT_NEAR(spectral_gap(prep.values), 2.0, 1e-10);
    }
}

TEST(spectrum, two_wire_block) {
    const auto h = build_two_qubit_h2();
    EXPECT_EQ(h.n_qubits(), 6u);
    EXPECT_EQ(h.term_count(), 4u);
    EXPECT_TRUE(h.terms_commute());
    EXPECT_EQ(h.terms()[h.index_of("K2a")].op.terms().front().word, P("ZXZ_Z_"));
    const auto s = low_spectrum(h, 8);
    EXPECT_EQ(ground_degeneracy(s.values), 4u);
    EXPECT_NEAR(spectral_gap(s.values), 2.0, 1e-10);
}

TEST(spectrum, eigenvectors_satisfy_eigen_equation) {
    std::mt19937_64 rng(testkit::kSeed + 31);
    const auto h = build_twisted_chain(5, 1.0, testkit::random_profile(rng, 5));
    const auto s = low_spectrum(h, 4, true);
    const Eigen::MatrixXcd m = oracle::matrix_of(h);
    for (Eigen::Index k = 0; k < 4; ++k) {
        EXPECT_LT((m * s.vectors.col(k) - s.values[k] * s.vectors.col(k)).norm(), 1e-10);
    }
    EXPECT_THROW(low_spectrum(h, 0), std::invalid_argument);
    EXPECT_THROW(low_spectrum(h, 33), std::invalid_argument);
}

TEST(apply_state, matches_dense_oracle) {
    std::mt19937_64 rng(testkit::kSeed + 32);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        HamiltonianSpec h(n);
        h.add_term("a", 0.7, testkit::random_hermitian_sum(rng, n, 3));
        h.add_term("b", -1.3, testkit::random_hermitian_sum(rng, n, 2));
        const Eigen::VectorXcd v = testkit::random_vector(rng, n);
        const Eigen::MatrixXcd m = oracle::matrix_of(h);
        ASSERT_LT((apply_state(h, v) - m * v).norm(), 1e-10 * (1 + v.norm()));
        ASSERT_LT((dense_matrix(h) - m).norm(), 1e-12);
        const Complex e = expectation(h.total(), v);
        ASSERT_LT(std::abs(e - v.dot(m * v)), 1e-10 * v.squaredNorm());
    }
}

TEST(compiled_operator, combine_is_linear) {
    std::mt19937_64 rng(testkit::kSeed + 33);
    const std::size_t n = 4;
    const auto a = testkit::random_hermitian_sum(rng, n, 5);
    const auto b = testkit::random_hermitian_sum(rng, n, 5);
    const CompiledOperator ca(a), cb(b);
    const std::pair<double, const CompiledOperator *> parts[] = {{0.25, &ca}, {-2.0, &cb}};
    const auto combined = CompiledOperator::combine(parts);
    const Eigen::VectorXcd v = testkit::random_vector(rng, n);
    const Eigen::MatrixXcd want = 0.25 * oracle::matrix_of(a) - 2.0 * oracle::matrix_of(b);
    EXPECT_LT((combined * v - want * v).norm(), 1e-10 * v.norm());
}

TEST(sector_restrict, splits_spectrum) {
    // The prep chain with the first field switched on commutes with S0 S2.
    const std::size_t n = 4;
    auto h = build_prep_chain(n);
    h.add_term("X1", -0.4, PauliSum(P("X___")));
    const PauliString sym = P("X_XZ");
    const auto plus = sector_restrict(h, sym, 1);
    const auto minus = sector_restrict(h, sym, -1);
    EXPECT_EQ(plus.sector_dimension() + minus.sector_dimension(), 16u);

    const Eigen::MatrixXcd basis = plus.basis();
    EXPECT_LT((basis.adjoint() * basis - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-12);
    EXPECT_LT((oracle::matrix_of(sym) * basis - basis).norm(), 1e-12);

    std::vector<double> merged;
    for (const auto *sector : {&plus, &minus}) {
        const auto vals = sector->low_spectrum(sector->sector_dimension()).values;
        merged.insert(merged.end(), vals.data(), vals.data() + vals.size());
    }
    std::sort(merged.begin(), merged.end());
    const auto full = dense_eigenvalues(oracle::matrix_of(h));
    for (Eigen::Index k = 0; k < full.size(); ++k) {
        EXPECT_NEAR(merged[static_cast<std::size_t>(k)], full[k], 1e-10);
    }

    std::mt19937_64 rng(testkit::kSeed + 34);
    const Eigen::VectorXcd v = testkit::random_vector(rng, n);
    const Eigen::MatrixXcd lifted = basis * plus.dense() * basis.adjoint();
    EXPECT_LT((plus.apply(v) - lifted * v).norm(), 1e-10 * v.norm());
}

TEST(sector_restrict, rejects_bad_symmetry) {
    const auto h = build_chain_h0(3);
    EXPECT_THROW(sector_restrict(h, P("X__"), 1), std::invalid_argument);
    EXPECT_THROW(sector_restrict(h, P("ZXZ"), 0), std::invalid_argument);
    EXPECT_THROW(sector_restrict(h, P("___"), 1), std::invalid_argument);
    EXPECT_THROW(sector_restrict(h, P("ZX"), 1), std::invalid_argument);
}

TEST(dense_cap, env_override) {
    EXPECT_EQ(dense_cap(), kDefaultDenseCap);
    {
        ScopedCap cap("3");
        EXPECT_EQ(dense_cap(), 3u);
        EXPECT_THROW(low_spectrum(build_chain_h0(4), 2), CapExceededError);
        EXPECT_NO_THROW(low_spectrum(build_chain_h0(3), 2));
    }
    {
        ScopedCap cap("zero");
        EXPECT_THROW(dense_cap(), std::invalid_argument);
    }
}
