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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles/dense_pauli.hpp"
#include "test_support.hpp"

using namespace acsqc;

namespace {

constexpr double kPi = std::numbers::pi;

PauliString P(const char *text) { return PauliString::from_str(text); }

// Projector onto the joint +1 space of every rotated stabilizer of the chain.
Eigen::MatrixXcd code_projector(const RotationProfile &thetas) {
    const std::size_t n = thetas.size();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Eigen::MatrixXcd t = oracle::matrix_of(rotated_stabilizer(n, i, thetas[i + 1]));
        proj = proj * (Eigen::MatrixXcd::Identity(dim, dim) + t) / 2.0;
    }
    return proj;
}

}  // namespace

TEST(recursion, base_case_is_delta) {
    auto c = CoefficientOperator::base(4);
    EXPECT_EQ(c.site(), 0u);
    for (Axis a : kAxes) {
        for (Axis b : kAxes) {
            if (a == b) {
                EXPECT_EQ(c.entry(a, b).coefficient_of(P("____")), Complex(1.0));
            } else {
                EXPECT_TRUE(c.entry(a, b).empty());
            }
        }
    }
}

TEST(recursion, first_step_moves_x_row) {
    const double t = 0.4;
    auto c = coefficients_at(1, RotationProfile({0, t, 0, 0}));
    EXPECT_TRUE(c.entry(Axis::kX, Axis::kX).empty());
    EXPECT_TRUE(c.entry(Axis::kX, Axis::kY).empty());
    EXPECT_EQ(c.entry(Axis::kX, Axis::kZ).coefficient_of(P("X___")), Complex(1.0));
    EXPECT_TRUE(c.satisfies_support_restriction());
}

TEST(recursion, zero_angles_shuffle_x_words) {
    const std::size_t n = 6;
    auto c = coefficients_at(4, RotationProfile::zeros(n));
    for (Axis a : kAxes) {
        for (Axis b : kAxes) {
            for (const auto &t : c.entry(a, b).terms()) {
                EXPECT_EQ(t.word.z_mask(), 0u);
                EXPECT_NEAR(std::abs(t.coefficient), 1.0, 1e-15);
            }
        }
    }
}

TEST(recursion, frozen_table_at_third_site) {
    const RotationProfile thetas({0, kPi / 4, kPi / 3, 0});
    const double c2 = std::cos(kPi / 4), s2 = std::sin(kPi / 4);
    const double c3 = std::cos(kPi / 3), s3 = std::sin(kPi / 3);
    const auto c = coefficients_at(2, thetas);
    ASSERT_TRUE(c.satisfies_support_restriction());

    struct Want {
        Axis alpha, beta;
        const char *word;
        double value;
    };
    const Want table[] = {
        {Axis::kX, Axis::kX, "X___", c3},
        {Axis::kX, Axis::kY, "X___", s3},
        {Axis::kX, Axis::kZ, nullptr, 0.0},
        {Axis::kY, Axis::kX, "XX__", -s3 * c2},
        {Axis::kY, Axis::kY, "XX__", c3 * c2},
        {Axis::kY, Axis::kZ, "XX__", s2},
        {Axis::kZ, Axis::kX, "_X__", s3 * s2},
        {Axis::kZ, Axis::kY, "_X__", -c3 * s2},
        {Axis::kZ, Axis::kZ, "_X__", c2},
    };
    for (const auto &w : table) {
        const PauliSum &e = c.entry(w.alpha, w.beta);
        if (w.word == nullptr) {
            EXPECT_TRUE(e.pruned(1e-14).empty());
            continue;
        }
        ASSERT_EQ(e.pruned(1e-14).size(), 1u) << axis_char(w.alpha) << axis_char(w.beta);
        EXPECT_NEAR(std::abs(e.coefficient_of(P(w.word)) - w.value), 0.0, 1e-14)
            << axis_char(w.alpha) << axis_char(w.beta);
    }
}

TEST(recursion, logical_bar_matches_dense_code_space) {
    // Every bar(alpha)_i acts on the code space exactly like bar(alpha)_0.
    std::mt19937_64 rng(testkit::kSeed + 20);
    for (std::size_t n : {3u, 4u, 5u}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto thetas = testkit::random_profile(rng, n);
            const Eigen::MatrixXcd proj = code_projector(thetas);
            const auto bar0 = reconstruct_logical_bar(CoefficientOperator::base(n));
            for (std::size_t i = 1; i + 2 <= n; ++i) {
                const auto bar = reconstruct_logical_bar(coefficients_at(i, thetas));
                for (Axis a : kAxes) {
                    const Eigen::MatrixXcd diff = oracle::matrix_of(bar.op(a)) - oracle::matrix_of(bar0.op(a));
                    ASSERT_LT((diff * proj).norm(), 1e-10) << "n=" << n << " i=" << i << " " << axis_char(a);
                }
            }
        }
    }
}

TEST(recursion, bounds) {
    EXPECT_THROW(coefficients_at(3, RotationProfile::zeros(4)), std::out_of_range);
    EXPECT_NO_THROW(coefficients_at(2, RotationProfile::zeros(4)));
}

TEST(restrict_plus_x, examples) {
    EXPECT_EQ(restrict_plus_x(PauliSum(P("XZ")), 0b01).coefficient_of(P("_Z")), Complex(1.0));
    auto id = restrict_plus_x(PauliSum(P("___")), 0b111);
    EXPECT_EQ(id.coefficient_of(P("___")), Complex(1.0));
    const double t = 0.3;
    PauliSum s = std::cos(t) * PauliSum(P("XX_")) + std::sin(t) * PauliSum(P("X_Y"));
    auto r = restrict_plus_x(s, 0b011);
    EXPECT_NEAR(std::abs(r.coefficient_of(P("___")) - std::cos(t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.coefficient_of(P("__Y")) - std::sin(t)), 0.0, 1e-15);
    EXPECT_THROW(restrict_plus_x(PauliSum(P("ZX")), 0b01), std::invalid_argument);
}

TEST(frame_gate_check, examples) {
    EXPECT_EQ(frame_gate_check(0, RotationProfile::zeros(4)).max_coefficient_error, 0.0);
    EXPECT_LE(frame_gate_check(0, RotationProfile({0, kPi / 2, 0, 0})).max_coefficient_error, 1e-12);
    EXPECT_THROW(frame_gate_check(2, RotationProfile::zeros(4)), std::out_of_range);
}

TEST(frame_gate_check, random_profiles_all_sites) {
    std::mt19937_64 rng(testkit::kSeed + 21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const auto thetas = testkit::random_profile(rng, n);
        for (std::size_t i = 0; i + 3 <= n; ++i) {
            const auto report = frame_gate_check(i, thetas);
            ASSERT_LE(report.max_coefficient_error, 1e-12) << "n=" << n << " site=" << i;
        }
    }
}
