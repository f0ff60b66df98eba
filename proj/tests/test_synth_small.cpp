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

#include <numbers>
#include <random>

#include "gatesynth/errors.hpp"
#include "gatesynth/simulate.hpp"
#include "gatesynth/synth_small.hpp"
#include "oracle.hpp"

namespace gatesynth {
namespace {

using testing::haar_su2;
using testing::haar_u2;
using testing::kron_controlled;
using testing::svd_distance;
constexpr double kPi = std::numbers::pi;

testing::Dense oracle(std::size_t n, std::vector<Wire> ctl, Wire t, const Unitary2 &u) {
    return kron_controlled(n, ctl, t, u.matrix());
}

TEST(ControlledSu2, ExactAndSmall) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const Unitary2 w = haar_su2(rng);
        const Circuit c = synth_c_su2(w);
        EXPECT_LE(svd_distance(simulate(c), oracle(2, {0}, 1, w)), 1e-12);
        const SynthesisReport r = count_basic(c);
        EXPECT_LE(r.one_qubit, 3u);
        EXPECT_EQ(r.xor_count, 2u);
    }
}

TEST(ControlledPhase, Exact) {
    for (double d : {0.0, 0.3, -2.0, kPi}) {
        const Circuit c = synth_c_phase(d);
        EXPECT_LE(svd_distance(simulate(c), oracle(2, {0}, 1, make_ph(d))), 1e-12);
        EXPECT_EQ(count_basic(c).xor_count, 0u);
    }
}

TEST(ControlledU, AtMostSixGates) {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 200; ++i) {
        const Unitary2 u = haar_u2(rng);
        for (bool merge : {true, false}) {
            const Circuit c = synth_c_u(u, merge);
            const SynthesisReport r = count_basic(c);
            EXPECT_LE(r.one_qubit, 4u);
            EXPECT_LE(r.xor_count, 2u);
            EXPECT_LE(svd_distance(simulate(c), oracle(2, {0}, 1, u)), 1e-10);
        }
    }
}

TEST(ControlledU, SpecialPayloads) {
    for (const Unitary2 &u : {identity2(), pauli_x(), pauli_y(), pauli_z(), make_ph(1.0), make_rz(kPi), make_ry(kPi)}) {
        EXPECT_LE(svd_distance(simulate(synth_c_u(u)), oracle(2, {0}, 1, u)), 1e-10);
    }
    // The identity needs no gates at all once merged.
    EXPECT_TRUE(synth_c_u(identity2()).empty());
}

TEST(SymmetricForm, DetectsAndRejects) {
    const auto f = detect_symmetric_form(make_rz(0.4) * make_ry(1.2) * make_rz(0.4));
    ASSERT_TRUE(f.has_value());
    EXPECT_LE((make_rz(f->alpha) * make_ry(f->theta) * make_rz(f->alpha))
                  .distance(make_rz(0.4) * make_ry(1.2) * make_rz(0.4)),
              1e-12);
    EXPECT_FALSE(detect_symmetric_form(make_rz(0.4) * make_ry(1.2) * make_rz(-0.1)).has_value());
}

TEST(ControlledSymmetric, FourGates) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 50; ++i) {
        const Unitary2 sym = make_rz(ang(rng));
        const Unitary2 target = sym * make_ry(ang(rng)) * sym;
        const Circuit c = synth_c_ab(target);
        EXPECT_EQ(c.size(), 4u);
        EXPECT_LE(svd_distance(simulate(c), oracle(2, {0}, 1, target)), 1e-10);
        const Unitary2 v = target * pauli_x();
        const Circuit cv = synth_c_v(v);
        EXPECT_EQ(cv.size(), 3u);
        EXPECT_LE(svd_distance(simulate(cv), oracle(2, {0}, 1, v)), 1e-10);
    }
    EXPECT_THROW(synth_c_ab(make_rz(0.4) * make_ry(1.2) * make_rz(-0.1)), DomainError);
    EXPECT_THROW(synth_c_v(make_rz(0.4) * make_ry(1.2) * make_rz(-0.1)), DomainError);
}

TEST(DoublyControlled, NativeAndExpanded) {
    std::mt19937_64 rng(54);
    std::vector<Unitary2> payloads{pauli_x()};
    for (int i = 0; i < 100; ++i) payloads.push_back(haar_u2(rng));
    for (const Unitary2 &u : payloads) {
        const auto ref = oracle(3, {0, 1}, 2, u);
        const Circuit native = synth_cc_u(u);
        EXPECT_EQ(native.size(), 5u);
        EXPECT_LE(svd_distance(simulate(native), ref), 1e-10);
        const Circuit basic = expand_cc_u(u);
        const SynthesisReport r = count_basic(basic);
        EXPECT_EQ(r.one_qubit, 8u);
        EXPECT_EQ(r.xor_count, 8u);
        EXPECT_LE(svd_distance(simulate(basic), ref), 1e-10);
    }
}

TEST(Toffoli, ExactPlacementBothDirections) {
    for (bool reversed : {false, true}) {
        Circuit c(4);
        append_toffoli_exact(c, 3, 0, 2, reversed);
        EXPECT_LE(svd_distance(simulate(c), oracle(4, {0, 3}, 2, pauli_x())), 1e-12);
        EXPECT_TRUE(count_basic(c).fully_basic());
    }
    Circuit fwd(3), rev(3);
    append_toffoli_exact(fwd, 0, 1, 2, false);
    append_toffoli_exact(rev, 0, 1, 2, true);
    EXPECT_EQ(rev, fwd.inverse());
}

TEST(Congruent, SignOnlyOnIndexFive) {
    for (CongruentVariant v : {CongruentVariant::kRyQuarter, CongruentVariant::kRyThreeQuarter}) {
        const CongruentToffoli ct = synth_congruent_toffoli(v);
        const std::vector<int> expect{1, 1, 1, 1, 1, -1, 1, 1};
        EXPECT_EQ(ct.signs, expect);
        testing::Dense ref = oracle(3, {0, 1}, 2, pauli_x());
        for (int j = 0; j < 8; ++j) ref.col(j) *= expect[static_cast<std::size_t>(j)];
        EXPECT_LE(svd_distance(simulate(ct.circuit), ref), 1e-10);
        EXPECT_EQ(count_two_bit_gates(ct.circuit), 3u);
    }
}

TEST(Congruent, PlacementHelper) {
    // Outer control 3, inner control 1, target 0. The standalone network
    // (outer 1, inner 0) flips |101>: inner set, outer clear, target set.
    Circuit c(4);
    append_toffoli_congruent(c, 3, 1, 0);
    const DenseUnitary m = simulate(c);
    const DenseUnitary ref = oracle(4, {1, 3}, 0, pauli_x());
    for (std::size_t x = 0; x < 16; ++x) {
        const int outer = (x >> 0) & 1;
        const int inner = (x >> 2) & 1;
        const int target = (x >> 3) & 1;
        const double s = (outer == 0 && inner == 1 && target == 1) ? -1.0 : 1.0;
        const auto i = static_cast<Eigen::Index>(x);
        EXPECT_LE((m.col(i) - s * ref.col(i)).norm(), 1e-10) << x;
    }
}

TEST(Placement, MirrorIsAdjoint) {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 30; ++i) {
        const Unitary2 u = haar_u2(rng);
        Circuit fwd(3), mir(3);
        append_controlled(fwd, 2, 0, u);
        append_controlled_mirror(mir, 2, 0, u);
        EXPECT_LE(svd_distance(simulate(fwd), oracle(3, {2}, 0, u)), 1e-10);
        EXPECT_LE(svd_distance(simulate(mir), oracle(3, {2}, 0, u.adjoint())), 1e-10);
    }
}

}  // namespace
}  // namespace gatesynth
