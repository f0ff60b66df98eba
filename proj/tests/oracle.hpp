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

// Independent reference implementations used by the tests. Nothing here
// calls into the simulator or the norm code under test.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gatesynth/circuit.hpp"

namespace gatesynth::testing {

using Cplx = std::complex<double>;
using Dense = Eigen::MatrixXcd;

inline Dense kron(const Dense &a, const Dense &b) {
    Dense out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// I + P_controls (x) (U - I)_target, assembled from Kronecker factors with
/// wire 0 leftmost.
inline Dense kron_controlled(std::size_t n, const std::vector<Wire> &controls, Wire target, const Eigen::Matrix2cd &u) {
    Dense proj1 = Dense::Zero(2, 2);
    proj1(1, 1) = 1.0;
    Dense m = Dense::Identity(1, 1);
    for (Wire w = 0; w < n; ++w) {
        Dense f = Dense::Identity(2, 2);
        if (w == target) {
            f = u - Eigen::Matrix2cd::Identity();
        } else {
            for (Wire c : controls) {
                if (c == w) f = proj1;
            }
        }
        m = kron(m, f);
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    return Dense::Identity(d, d) + m;
}

inline Dense kron_gate(const Gate &g, std::size_t n) {
    return kron_controlled(n, g.controls(), g.target(), g.payload().matrix());
}

/// Product of Kronecker-built gate matrices, latest gate leftmost.
inline Dense naive_simulate(const Circuit &c) {
    const Eigen::Index d = Eigen::Index{1} << c.num_wires();
    Dense acc = Dense::Identity(d, d);
    for (const Gate &g : c.gates()) {
        acc = kron_gate(g, c.num_wires()) * acc;
    }
    return acc;
}

/// Spectral norm of a - b via a full SVD.
inline double svd_distance(const Dense &a, const Dense &b) {
    Eigen::JacobiSVD<Dense> svd(a - b);
    return svd.singularValues()(0);
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the R-diagonal
/// phases folded back into Q.
inline Dense haar_unitary(Eigen::Index d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Dense z(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) z(i, j) = Cplx(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Dense> qr(z);
    Dense q = qr.householderQ();
    const Dense r = qr.matrixQR();
    for (Eigen::Index j = 0; j < d; ++j) {
        const Cplx p = r(j, j) / std::abs(r(j, j));
        q.col(j) *= p;
    }
    return q;
}

inline Unitary2 haar_u2(std::mt19937_64 &rng) {
    const Dense q = haar_unitary(2, rng);
    return Unitary2::from_matrix(Eigen::Matrix2cd(q));
}

inline Unitary2 haar_su2(std::mt19937_64 &rng) {
    Eigen::Matrix2cd q = haar_unitary(2, rng);
    q /= std::sqrt(q.determinant());
    return Unitary2::from_matrix(q);
}

}  // namespace gatesynth::testing
