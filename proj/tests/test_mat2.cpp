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

#include <cmath>
#include <numbers>
#include <random>

#include "gatesynth/errors.hpp"
#include "gatesynth/mat2.hpp"
#include "oracle.hpp"

namespace gatesynth {
namespace {

using testing::haar_su2;
using testing::haar_u2;
using testing::svd_distance;
constexpr double kPi = std::numbers::pi;

TEST(Unitary2, RejectsNonUnitary) {
    Matrix2 m;
    m << 1, 1, 0, 1;
    EXPECT_THROW(Unitary2::from_matrix(m), std::invalid_argument);
    m << std::nan(""), 0, 0, 1;
    EXPECT_THROW(Unitary2::from_matrix(m), std::invalid_argument);
}

TEST(Unitary2, NamedGates) {
    const Matrix2 x = pauli_x().matrix();
    EXPECT_EQ(x(0, 1), Complex(1, 0));
    EXPECT_EQ(x(1, 0), Complex(1, 0));
    // Ry(pi) sends |0> to -|1> in this convention.
    EXPECT_NEAR(std::abs(make_ry(kPi)(1, 0) - Complex(-1, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(make_rz(1.0)(0, 0) - std::polar(1.0, 0.5)), 0, 1e-15);
    EXPECT_NEAR(std::abs(make_ph(0.3)(1, 1) - std::polar(1.0, 0.3)), 0, 1e-15);
    EXPECT_NEAR(std::abs(make_phase_flip(0.7)(1, 1) - std::polar(1.0, 0.7)), 0, 1e-15);
    EXPECT_NEAR(std::abs(make_rx(0.4)(0, 1) - Complex(0, std::sin(0.2))), 0, 1e-15);
}

TEST(Euler, RoundTripRandom) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Unitary2 u = haar_u2(rng);
        const EulerDecomposition e = euler_zyz(u);
        EXPECT_LE(u.distance(e.reconstruct()), 1e-12);
        EXPECT_GE(e.theta, 0.0);
        EXPECT_LE(e.theta, kPi + 1e-15);
    }
}

TEST(Euler, DegenerateInputs) {
    for (const Unitary2 &u : {identity2(), pauli_x(), pauli_y(), pauli_z(), make_ph(2.0), make_rz(0.3),
                              make_ry(kPi), make_ry(-kPi), Unitary2(make_ph(kPi))}) {
        EXPECT_LE(u.distance(euler_zyz(u).reconstruct()), 1e-12);
    }
}

TEST(PhaseSplit, SpecialUnitaryPart) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const Unitary2 u = haar_u2(rng);
        const PhaseSplit p = su2_phase_split(u);
        EXPECT_NEAR(std::abs(p.w.det() - Complex(1, 0)), 0, 1e-12);
        EXPECT_LE(u.distance(make_ph(p.delta) * p.w), 1e-12);
    }
}

TEST(Abc, IdentitiesHold) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const Unitary2 w = haar_su2(rng);
        const AbcTriple t = abc_decompose(w);
        EXPECT_LE((t.a * t.b * t.c).distance(identity2()), 1e-12);
        EXPECT_LE((t.a * pauli_x() * t.b * pauli_x() * t.c).distance(w), 1e-12);
        for (const Unitary2 &f : {t.a, t.b, t.c}) {
            EXPECT_NEAR(std::abs(f.det() - Complex(1, 0)), 0, 1e-12);
        }
    }
}

TEST(Abc, RejectsNonSpecial) { EXPECT_THROW(abc_decompose(pauli_x()), DomainError); }

TEST(Root, PowersBackToInput) {
    std::mt19937_64 rng(14);
    for (int k = 1; k <= 6; ++k) {
        for (int i = 0; i < 50; ++i) {
            const Unitary2 u = haar_u2(rng);
            const Unitary2 v = unitary_root(u, k);
            Unitary2 p = v;
            for (int j = 0; j < k; ++j) p = p * p;
            EXPECT_LE(p.distance(u), 1e-11) << "k=" << k;
            EXPECT_LE(v.distance(identity2()), kPi / std::pow(2.0, k) + 1e-12);
        }
    }
}

TEST(Root, RejectsZeroOrder) { EXPECT_THROW(unitary_root(pauli_x(), 0), std::invalid_argument); }

TEST(Root, ScalarAndNegativeEigenvalues) {
    const Unitary2 m = make_ph(kPi);  // -I
    const Unitary2 v = unitary_root(m, 1);
    EXPECT_LE((v * v).distance(m), 1e-14);
    const Unitary2 x = unitary_root(pauli_x(), 1);
    EXPECT_LE((x * x).distance(pauli_x()), 1e-14);
}

TEST(Norm, MatchesSvd) {
    std::mt19937_64 rng(15);
    for (Eigen::Index d : {2, 4, 8, 32}) {
        for (int i = 0; i < 10; ++i) {
            const Eigen::MatrixXcd a = testing::haar_unitary(d, rng);
            const Eigen::MatrixXcd b = testing::haar_unitary(d, rng);
            EXPECT_NEAR(operator_distance(a, b), svd_distance(a, b), 1e-10);
        }
    }
    EXPECT_THROW(operator_distance(Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(4, 4)),
                 std::invalid_argument);
}

TEST(Norm, SmallDifferencesAreAccurate) {
    const Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(16, 16);
    Eigen::MatrixXcd b = a;
    b(3, 3) = std::polar(1.0, 1e-13);
    EXPECT_NEAR(operator_distance(a, b), 1e-13, 1e-15);
}

}  // namespace
}  // namespace gatesynth
