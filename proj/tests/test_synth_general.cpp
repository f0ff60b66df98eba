// Copyright 2026 The gatesynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "gatesynth/simulate.hpp"
#include "gatesynth/synth_general.hpp"
#include "oracle.hpp"

namespace gatesynth {
namespace {

using testing::haar_u2;
using testing::haar_unitary;
using testing::svd_distance;

std::size_t bits(const char *s) { return std::stoul(s, nullptr, 2); }

TEST(TwoLevel, FactorizationReproducesInput) {
    std::mt19937_64 rng(71);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto dim = Eigen::Index{1} << n;
        for (int i = 0; i < 5; ++i) {
            const DenseUnitary u = haar_unitary(dim, rng);
            const TwoLevelDecomposition d = two_level_decompose(u);
            EXPECT_LE(d.rotations.size(), static_cast<std::size_t>(dim * (dim - 1) / 2));
            DenseUnitary acc = DenseUnitary::Identity(dim, dim);
            for (const TwoLevelRotation &t : d.rotations) {
                EXPECT_GT(t.x1, t.x2);
                acc = acc * embed_two_level(t, n);
            }
            DenseUnitary diag = DenseUnitary::Zero(dim, dim);
            for (Eigen::Index k = 0; k < dim; ++k) {
                EXPECT_NEAR(std::abs(d.phases[static_cast<std::size_t>(k)]), 1.0, 1e-12);
                diag(k, k) = d.phases[static_cast<std::size_t>(k)];
            }
            EXPECT_LE(svd_distance(acc * diag, u), static_cast<double>(dim) * 1e-12);
        }
    }
}

TEST(TwoLevel, IdentityHasNoRotations) {
    const TwoLevelDecomposition d = two_level_decompose(DenseUnitary::Identity(8, 8));
    EXPECT_TRUE(d.rotations.empty());
    for (const Complex &p : d.phases) EXPECT_NEAR(std::abs(p - Complex(1, 0)), 0, 1e-15);
}

TEST(TwoLevel, RejectsBadInput) {
    EXPECT_THROW(two_level_decompose(DenseUnitary::Identity(3, 3)), std::invalid_argument);
    DenseUnitary m = DenseUnitary::Identity(4, 4);
    m(0, 1) = 1.0;
    EXPECT_THROW(two_level_decompose(m), std::invalid_argument);
}

TEST(GrayPath, WorkedExample) {
    const std::vector<std::size_t> expect{bits("00111010"), bits("00111011"), bits("00111111"), bits("00110111"),
                                          bits("00100111")};
    EXPECT_EQ(gray_path(bits("00111010"), bits("00100111")), expect);
}

TEST(GrayPath, RandomPairsStepOneBit) {
    std::mt19937_64 rng(72);
    std::uniform_int_distribution<std::size_t> pick(0, 255);
    for (int i = 0; i < 500; ++i) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        if (a == b) b ^= 1;
        const auto p = gray_path(a, b);
        EXPECT_EQ(p.front(), a);
        EXPECT_EQ(p.back(), b);
        EXPECT_EQ(p.size(), static_cast<std::size_t>(std::popcount(a ^ b)) + 1);
        EXPECT_LE(p.size(), 9u);
        for (std::size_t k = 1; k < p.size(); ++k) EXPECT_EQ(std::popcount(p[k] ^ p[k - 1]), 1);
    }
    EXPECT_EQ(gray_path(4, 5), (std::vector<std::size_t>{4, 5}));
}

TEST(TwoLevelCircuit, MatchesEmbedding) {
    std::mt19937_64 rng(73);
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t x2 = 0; x2 < dim; ++x2) {
            for (std::size_t x1 = x2 + 1; x1 < dim; ++x1) {
                const TwoLevelRotation t{x1, x2, haar_u2(rng)};
                const Circuit c = synth_two_level(t, n);
                EXPECT_EQ(c.num_wires(), n);
                EXPECT_LE(svd_distance(simulate(c), embed_two_level(t, n)), 1e-9) << x1 << "," << x2;
            }
        }
    }
}

TEST(Unitary, EndToEndSmall) {
    std::mt19937_64 rng(74);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int i = 0; i < 5; ++i) {
            const DenseUnitary u = haar_unitary(Eigen::Index{1} << n, rng);
            const UnitarySynthesis s = synth_unitary(u);
            EXPECT_TRUE(s.circuit.ancillas().empty());
            EXPECT_TRUE(s.report.fully_basic());
            EXPECT_LE(svd_distance(simulate(s.circuit), u), 1e-9);
        }
    }
}

TEST(Unitary, MultiControlledNotNeedsOneRotation) {
    const DenseUnitary u = reference_controlled(2, pauli_x());
    EXPECT_EQ(two_level_decompose(u).rotations.size(), 1u);
    EXPECT_LE(svd_distance(simulate(synth_unitary(u).circuit), u), 1e-9);
}

}  // namespace
}  // namespace gatesynth
