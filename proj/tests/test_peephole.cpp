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

#include <random>

#include "gatesynth/peephole.hpp"
#include "gatesynth/simulate.hpp"
#include "oracle.hpp"

namespace gatesynth {
namespace {

using testing::haar_u2;
using testing::svd_distance;

// Circuits with many mergeable neighbours: gates drawn from a small pool of
// placements, sometimes repeated or followed by their inverse.
Circuit clustered_circuit(std::size_t n, std::size_t len, std::mt19937_64 &rng) {
    std::vector<Gate> pool;
    for (Wire t = 0; t < n; ++t) {
        pool.push_back(Gate::single(t, haar_u2(rng)));
        if (n >= 2) pool.push_back(Gate::cnot((t + 1) % n, t));
        if (n >= 3) pool.push_back(Gate({(t + 1) % static_cast<Wire>(n), (t + 2) % static_cast<Wire>(n)}, t, haar_u2(rng)));
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    Circuit c(n);
    for (std::size_t i = 0; i < len; ++i) {
        const Gate &g = pool[pick(rng)];
        c.add(g);
        if (coin(rng) == 0) c.add(g.adjoint());
        if (coin(rng) == 1) c.add(g.with_payload(haar_u2(rng)));
    }
    return c;
}

TEST(Merge, PreservesSemantics) {
    std::mt19937_64 rng(41);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int i = 0; i < 20; ++i) {
            const Circuit c = clustered_circuit(n, 40, rng);
            const Circuit m = merge_adjacent(c);
            EXPECT_LE(m.size(), c.size());
            EXPECT_LE(svd_distance(simulate(m), simulate(c)), 1e-9);
        }
    }
}

TEST(Merge, IsAFixpoint) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        const Circuit m = merge_adjacent(clustered_circuit(4, 50, rng));
        EXPECT_EQ(merge_adjacent(m), m);
    }
}

TEST(Merge, CancelsInversePairsAcrossDisjointGates) {
    Circuit c(3);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::single(2, make_ry(0.3)));
    c.add(Gate::cnot(0, 1));
    const Circuit m = merge_adjacent(c);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m.gates()[0].target(), 2u);
}

TEST(Merge, BlockedByInterveningGate) {
    Circuit c(2);
    c.add(Gate::single(0, make_ry(0.3)));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::single(0, make_ry(-0.3)));
    EXPECT_EQ(merge_adjacent(c).size(), 3u);
}

TEST(Merge, KeepsAncillas) {
    Circuit c(3);
    c.add_ancilla({1, 0, true});
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(0, 1));
    const Circuit m = merge_adjacent(c);
    EXPECT_TRUE(m.empty());
    EXPECT_EQ(m.ancillas(), c.ancillas());
}

TEST(CommuteWindow, PreservesSemantics) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        const Circuit c = clustered_circuit(4, 40, rng);
        const Circuit w = commute_window(c);
        EXPECT_EQ(w.size(), c.size());
        EXPECT_LE(svd_distance(simulate(w), simulate(c)), 1e-9);
        EXPECT_LE(merge_adjacent(w).size(), w.size());
    }
}

}  // namespace
}  // namespace gatesynth
