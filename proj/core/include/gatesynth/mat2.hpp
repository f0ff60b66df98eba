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

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gatesynth/errors.hpp"

namespace gatesynth {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTol = 1e-10;

/// True iff ||M M^dag - I|| <= tol in the operator norm.
bool is_unitary(const Matrix2 &m, double tol = kUnitaryTol);

/// A validated 2x2 unitary. Every constructor that takes raw entries checks
/// finiteness and unitarity; products of Unitary2 values are trusted.
class Unitary2 {
   public:
    Unitary2() : m_(Matrix2::Identity()) {}

    static Unitary2 from_matrix(const Matrix2 &m, double tol = kUnitaryTol);
    static Unitary2 from_entries(Complex u00, Complex u01, Complex u10, Complex u11, double tol = kUnitaryTol);

    const Matrix2 &matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    Unitary2 adjoint() const { return Unitary2(m_.adjoint()); }
    Complex det() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }

    friend Unitary2 operator*(const Unitary2 &a, const Unitary2 &b) { return Unitary2(a.m_ * b.m_); }
    friend bool operator==(const Unitary2 &a, const Unitary2 &b) { return a.m_ == b.m_; }

    /// Spectral-norm distance ||this - other||.
    double distance(const Unitary2 &other) const;
    bool is_identity(double tol) const;

   private:
    explicit Unitary2(const Matrix2 &m) : m_(m) {}
    Matrix2 m_;
};

Unitary2 identity2();
Unitary2 pauli_x();
Unitary2 pauli_y();
Unitary2 pauli_z();
Unitary2 make_ry(double theta);
Unitary2 make_rz(double alpha);
Unitary2 make_ph(double delta);
/// Rx(theta) = [[cos, i sin], [i sin, cos]] of theta/2.
Unitary2 make_rx(double theta);
/// diag(1, e^{i phi}).
Unitary2 make_phase_flip(double phi);

/// U = Ph(delta) Rz(alpha) Ry(theta) Rz(beta).
struct EulerDecomposition {
    double delta = 0;
    double alpha = 0;
    double theta = 0;
    double beta = 0;

    Unitary2 reconstruct() const;
};

EulerDecomposition euler_zyz(const Unitary2 &u);

/// U = Ph(delta) W with det W = 1.
struct PhaseSplit {
    double delta = 0;
    Unitary2 w;
};

PhaseSplit su2_phase_split(const Unitary2 &u);

/// A B C = I and A X B X C = W, all three special unitary.
struct AbcTriple {
    Unitary2 a;
    Unitary2 b;
    Unitary2 c;
};

/// Throws DomainError unless |det W - 1| <= tol.
AbcTriple abc_decompose(const Unitary2 &w, double tol = kUnitaryTol);

/// The principal 2^k-th root: eigenphases are taken in (-pi, pi] and divided
/// by 2^k, so ||V - I|| <= pi / 2^k.
Unitary2 unitary_root(const Unitary2 &u, int k);

/// Spectral norm of (a - b). Throws std::invalid_argument on shape mismatch.
double operator_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// Largest singular value of m.
double spectral_norm(const Eigen::MatrixXcd &m);

}  // namespace gatesynth
