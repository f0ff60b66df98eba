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

#include "gatesynth/mat2.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gatesynth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Below this magnitude an entry's argument carries no information.
constexpr double kArgFloor = 1e-15;

double norm2x2(const Matrix2 &m) {
    // Largest singular value of a 2x2 matrix in closed form.
    const double f2 = m.squaredNorm();
    const Complex d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double disc = std::max(0.0, f2 * f2 - 4.0 * std::norm(d));
    return std::sqrt(std::max(0.0, 0.5 * (f2 + std::sqrt(disc))));
}

void require_finite(const Matrix2 &m) {
    for (int i = 0; i < 4; ++i) {
        const Complex z = m(i / 2, i % 2);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("matrix entry is not finite");
        }
    }
}

void require_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

// Principal argument in (-pi, pi].
double principal_arg(Complex z) {
    double a = std::arg(z);
    if (a <= -kPi) {
        a = kPi;
    }
    return a;
}

}  // namespace

bool is_unitary(const Matrix2 &m, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    for (int i = 0; i < 4; ++i) {
        const Complex z = m(i / 2, i % 2);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return norm2x2(m * m.adjoint() - Matrix2::Identity()) <= tol;
}

Unitary2 Unitary2::from_matrix(const Matrix2 &m, double tol) {
    require_finite(m);
    if (!is_unitary(m, tol)) {
        throw std::invalid_argument("matrix is not unitary");
    }
    return Unitary2(m);
}

Unitary2 Unitary2::from_entries(Complex u00, Complex u01, Complex u10, Complex u11, double tol) {
    Matrix2 m;
    m << u00, u01, u10, u11;
    return from_matrix(m, tol);
}

double Unitary2::distance(const Unitary2 &other) const { return norm2x2(m_ - other.m_); }

bool Unitary2::is_identity(double tol) const { return norm2x2(m_ - Matrix2::Identity()) <= tol; }

Unitary2 identity2() { return Unitary2(); }

Unitary2 pauli_x() { return Unitary2::from_entries(0, 1, 1, 0); }

Unitary2 pauli_y() { return Unitary2::from_entries(0, -kI, kI, 0); }

Unitary2 pauli_z() { return Unitary2::from_entries(1, 0, 0, -1); }

Unitary2 make_ry(double theta) {
    require_finite(theta, "rotation angle");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return Unitary2::from_entries(c, s, -s, c);
}

Unitary2 make_rz(double alpha) {
    require_finite(alpha, "rotation angle");
    return Unitary2::from_entries(std::polar(1.0, alpha / 2), 0, 0, std::polar(1.0, -alpha / 2));
}

Unitary2 make_ph(double delta) {
    require_finite(delta, "phase");
    const Complex p = std::polar(1.0, delta);
    return Unitary2::from_entries(p, 0, 0, p);
}

Unitary2 make_rx(double theta) {
    require_finite(theta, "rotation angle");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return Unitary2::from_entries(c, kI * s, kI * s, c);
}

Unitary2 make_phase_flip(double phi) {
    require_finite(phi, "phase");
    return Unitary2::from_entries(1, 0, 0, std::polar(1.0, phi));
}

Unitary2 EulerDecomposition::reconstruct() const {
    return make_ph(delta) * make_rz(alpha) * make_ry(theta) * make_rz(beta);
}

EulerDecomposition euler_zyz(const Unitary2 &u) {
    EulerDecomposition e;
    e.delta = principal_arg(u.det()) / 2;
    const Complex unphase = std::polar(1.0, -e.delta);
    const Complex a = u(0, 0) * unphase;
    const Complex b = u(0, 1) * unphase;
    e.theta = 2 * std::atan2(std::abs(b), std::abs(a));
    // W = [[a, b], [-b*, a*]] with a = e^{i(alpha+beta)/2} cos, b = e^{i(alpha-beta)/2} sin.
    const double arg_a = std::abs(a) < kArgFloor ? 0.0 : std::arg(a);
    const double arg_b = std::abs(b) < kArgFloor ? arg_a : std::arg(b);
    e.alpha = arg_a + arg_b;
    e.beta = arg_a - arg_b;
    return e;
}

PhaseSplit su2_phase_split(const Unitary2 &u) {
    const double delta = principal_arg(u.det()) / 2;
    return {delta, make_ph(-delta) * u};
}

AbcTriple abc_decompose(const Unitary2 &w, double tol) {
    if (std::abs(w.det() - 1.0) > tol) {
        throw DomainError("ABC decomposition requires a special unitary matrix (det = 1)");
    }
    const EulerDecomposition e = euler_zyz(w);
    return {
        make_rz(e.alpha) * make_ry(e.theta / 2),
        make_ry(-e.theta / 2) * make_rz(-(e.alpha + e.beta) / 2),
        make_rz((e.beta - e.alpha) / 2),
    };
}

Unitary2 unitary_root(const Unitary2 &u, int k) {
    if (k < 1) {
        throw std::invalid_argument("root order k must be at least 1");
    }
    const double scale = std::ldexp(1.0, -k);
    const Matrix2 &m = u.matrix();
    if (std::abs(m(0, 1)) < kArgFloor && std::abs(m(1, 0)) < kArgFloor && std::abs(m(0, 0) - m(1, 1)) < kArgFloor) {
        // Scalar (degenerate spectrum): the root is the scalar root.
        const Complex r = std::polar(1.0, principal_arg(m(0, 0)) * scale);
        return Unitary2::from_entries(r, 0, 0, r);
    }
    Eigen::ComplexSchur<Matrix2> schur(m);
    const Matrix2 &t = schur.matrixT();
    const Matrix2 &z = schur.matrixU();
    Matrix2 d = Matrix2::Zero();
    d(0, 0) = std::polar(1.0, principal_arg(t(0, 0)) * scale);
    d(1, 1) = std::polar(1.0, principal_arg(t(1, 1)) * scale);
    return Unitary2::from_matrix(z * d * z.adjoint());
}

double spectral_norm(const Eigen::MatrixXcd &m) {
    const Eigen::Index d = m.cols();
    if (d == 0 || m.rows() == 0) {
        return 0.0;
    }
    if (m.rows() == 2 && d == 2) {
        return norm2x2(m);
    }
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        return 0.0;
    }
    const Eigen::MatrixXcd g = (m / scale).adjoint() * (m / scale);
    if (d <= 1024) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
        return scale * std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
    // Power iteration on the Gram matrix for very large operands.
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(d) / std::sqrt(static_cast<double>(d));
    double lambda = 0.0;
    for (int it = 0; it < 500; ++it) {
        Eigen::VectorXcd w = g * v;
        const double n = w.norm();
        if (n == 0.0) {
            return 0.0;
        }
        v = w / n;
        if (std::abs(n - lambda) <= 1e-15 * n) {
            lambda = n;
            break;
        }
        lambda = n;
    }
    return scale * std::sqrt(lambda);
}

double operator_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw std::invalid_argument("operator_distance: operands must be square and of equal size");
    }
    return spectral_norm(a - b);
}

}  // namespace gatesynth
