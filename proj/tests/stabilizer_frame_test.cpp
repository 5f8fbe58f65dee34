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

#include "acsqc/stabilizer_frame.hpp"

#include <random>

#include <gtest/gtest.h>

#include "acsqc/errors.hpp"
#include "test_support.hpp"

using namespace acsqc;

namespace {

PauliString P(const char *text) { return PauliString::from_str(text); }

// Stabilizers Z_0..Z_{r-1} and logical pairs (X_j, Z_j) for j >= r, scrambled by random
// Cliffords. Always a valid frame.
StabilizerFrame random_frame(std::mt19937_64 &rng, std::size_t n, std::size_t r) {
    std::vector<PauliString> gens;
    std::vector<LogicalPair> logicals;
    for (std::size_t k = 0; k < n; ++k) {
        if (k < r) {
            gens.push_back(PauliString::single(n, k, 'Z'));
        } else {
            logicals.push_back({PauliString::single(n, k, 'X'), PauliString::single(n, k, 'Z')});
        }
    }
    std::uniform_int_distribution<std::size_t> site(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int step = 0; step < 6 * static_cast<int>(n); ++step) {
        const std::size_t a = site(rng);
        std::size_t b = site(rng);
        if (b == a) {
            b = (a + 1) % n;
        }
        const int k = kind(rng);
        const CliffordGate g = k == 0 ? CliffordGate::H(a) : k == 1 ? CliffordGate::S(a) : CliffordGate::CZ(a, b);
        for (auto &p : gens) {
            p = conj_by_clifford(p, g);
        }
        for (auto &[x, z] : logicals) {
            x = conj_by_clifford(x, g);
            z = conj_by_clifford(z, g);
        }
    }
    return frame_new(gens, logicals);
}

}  // namespace

TEST(frame_new, chain_frame) {
    auto f = frame_new({P("ZXZ"), P("_ZX")}, {{P("XZ_"), P("Z__")}});
    EXPECT_EQ(f.n_qubits(), 3u);
    EXPECT_EQ(f.generators().size(), 2u);
    EXPECT_NE(f.str().find("X1 Z2"), std::string::npos);
}

TEST(frame_new, rejects_bad_input) {
    EXPECT_THROW(frame_new({P("X"), P("Z")}, {}), FrameError);
    EXPECT_THROW(frame_new({P("XX"), P("XX")}, {}), FrameError);
    EXPECT_THROW(frame_new({P("ZZ"), P("XX"), P("-YY")}, {}), FrameError);
    EXPECT_THROW(frame_new({P("iZZ")}, {}), FrameError);
    EXPECT_THROW(frame_new({P("__")}, {}), FrameError);
    EXPECT_THROW(frame_new({P("Z_")}, {{P("X_"), P("_Z")}}), FrameError);
    EXPECT_THROW(frame_new({P("Z_")}, {{P("_X"), P("_X")}}), FrameError);
    EXPECT_THROW(frame_new({}, {}), FrameError);
    EXPECT_THROW(frame_new({P("Z_"), P("ZZZ")}, {}), FrameError);
}

TEST(frame_new, two_wire_frame) {
    // Sites (1a, 2a, 3a, 1b, 2b, 3b).
    auto f = frame_new({P("ZXZ_Z_"), P("_ZX___"), P("_Z_ZXZ"), P("____ZX")},
        {{P("XZ____"), P("Z_____")}, {P("___XZ_"), P("___Z__")}});
    EXPECT_EQ(f.logicals().size(), 2u);
}

TEST(symplectic_rank, counts_independent_words) {
    std::vector<PauliString> ops{P("XZ_"), P("ZX_"), P("YY_")};
    EXPECT_EQ(symplectic_rank(ops), 2u);
    std::vector<PauliString> more{P("X__"), P("_X_"), P("__X"), P("ZZZ")};
    EXPECT_EQ(symplectic_rank(more), 4u);
}

TEST(dragging_update, chain_first_step) {
    auto f = frame_new({P("ZXZ"), P("_ZX")}, {{P("XZ_"), P("Z__")}});
    auto g = dragging_update(f, 0, P("X__"));
    EXPECT_EQ(g.generators()[0], P("X__"));
    EXPECT_EQ(g.generators()[1], P("_ZX"));
    EXPECT_EQ(g.logicals()[0].x_op, P("XZ_"));
    EXPECT_EQ(g.logicals()[0].z_op, P("_XZ"));
}

TEST(dragging_update, prep_second_step) {
    // After the first step the frame holds S0, X1, S2, S3; X2 then consumes S2.
    auto f = frame_new({P("XZ__"), P("X___"), P("_ZXZ"), P("__ZX")}, {});
    auto g = dragging_update(f, 2, P("_X__"));
    EXPECT_EQ(g.generators()[0], P("X_XZ"));
    EXPECT_EQ(g.generators()[2], P("_X__"));
    EXPECT_EQ(canonicalize_logical(frame_new({g.generators()[1], g.generators()[2], g.generators()[3]}, {}),
                  g.generators()[0]),
        P("__XZ"));
}

TEST(dragging_update, two_wire_logical) {
    auto f = frame_new({P("ZXZ_Z_"), P("_ZX___"), P("_Z_ZXZ"), P("____ZX")},
        {{P("XZ____"), P("Z_____")}, {P("___XZ_"), P("___Z__")}});
    auto g = dragging_update(f, 1, P("_X____"));
    EXPECT_EQ(g.logicals()[0].x_op, P("X_X___"));
}

TEST(dragging_update, rejects_commuting_field) {
    auto f = frame_new({P("ZXZ"), P("_ZX")}, {{P("XZ_"), P("Z__")}});
    EXPECT_THROW(dragging_update(f, 1, P("X__")), FrameError);
    EXPECT_THROW(dragging_update(f, 5, P("X__")), FrameError);
    EXPECT_THROW(dragging_update(f, 0, P("iX__")), FrameError);
}

TEST(canonicalize_logical, examples) {
    auto f = frame_new({P("X_")}, {});
    EXPECT_EQ(canonicalize_logical(f, P("XZ")), P("_Z"));
    EXPECT_EQ(canonicalize_logical(f, P("__")), P("__"));
    auto h2 = frame_new({P("X_____"), P("_X____"), P("___X__"), P("____X_")}, {});
    EXPECT_EQ(canonicalize_logical(h2, P("_XZ__X")), P("__Z__X"));
    EXPECT_THROW(canonicalize_logical(f, P("Z_")), FrameError);
}

TEST(frame_properties, random_frames) {
    std::mt19937_64 rng(testkit::kSeed + 10);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const std::size_t r = 1 + trial % (n - 1);
        const auto f = random_frame(rng, n, r);
        ASSERT_EQ(f.generators().size() + f.logicals().size(), n);

        // Canonical forms are idempotent, never heavier, and stay in the same coset.
        for (const auto &[x, z] : f.logicals()) {
            for (const auto *op : {&x, &z}) {
                const auto c = canonicalize_logical(f, *op);
                ASSERT_EQ(canonicalize_logical(f, c), c);
                ASSERT_LE(c.weight(), op->weight());
                std::vector<PauliString> with = f.generators();
                with.push_back(c * *op);
                ASSERT_EQ(symplectic_rank(with), f.generators().size());
            }
        }

        // Dragging with a random field that anticommutes with some generator keeps a valid frame.
        const auto field = testkit::random_pauli(rng, n, true).with_phase(0);
        for (std::size_t g = 0; g < f.generators().size(); ++g) {
            if (commutes(field, f.generators()[g])) {
                continue;
            }
            const auto d = dragging_update(f, g, field);
            ASSERT_EQ(d.generators()[g], field);
            for (const auto &gen : d.generators()) {
                ASSERT_TRUE(commutes(gen, field));
            }
            for (const auto &[x, z] : d.logicals()) {
                ASSERT_TRUE(commutes(x, field));
                ASSERT_TRUE(commutes(z, field));
                ASSERT_FALSE(commutes(x, z));
            }
            break;
        }
    }
}
