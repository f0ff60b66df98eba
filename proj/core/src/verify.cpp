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

#include "gatesynth/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gatesynth {

namespace {

void require_same_shape(const DenseUnitary &a, const DenseUnitary &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrices have different dimensions");
    }
}

}  // namespace

bool equal_within(const DenseUnitary &a, const DenseUnitary &b, double eps) {
    return operator_distance(a, b) <= eps;
}

std::optional<double> equal_up_to_global_phase(const DenseUnitary &a, const DenseUnitary &b, double eps) {
    require_same_shape(a, b);
    const Complex overlap = (b.adjoint() * a).trace();
    double phi = std::abs(overlap) == 0.0 ? 0.0 : std::arg(overlap);
    if (phi <= -std::numbers::pi) {
        phi = std::numbers::pi;
    }
    if (operator_distance(a, b * std::polar(1.0, phi)) <= eps) {
        return phi;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> congruent_mod_phases(const DenseUnitary &a, const DenseUnitary &b, double eps) {
    require_same_shape(a, b);
    std::vector<int> signs(static_cast<std::size_t>(a.cols()), 1);
    DenseUnitary bd = b;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const double re = b.col(j).dot(a.col(j)).real();  // <b_j, a_j>
        if (re < 0) {
            signs[static_cast<std::size_t>(j)] = -1;
            bd.col(j) = -bd.col(j);
        }
    }
    if (operator_distance(a, bd) <= eps) {
        return signs;
    }
    return std::nullopt;
}

bool is_scalar(const Unitary2 &u, double tol) {
    Matrix2 diff = u.matrix() - u(0, 0) * Matrix2::Identity();
    return spectral_norm(diff) <= tol;
}

bool audit_lower_bound(const Circuit &c, std::size_t n, const Unitary2 &u) {
    if (is_scalar(u)) {
        throw DomainError("the lower bound does not apply to a scalar payload");
    }
    const SynthesisReport r = count_basic(c);
    if (!r.fully_basic()) {
        throw std::invalid_argument("audit needs a circuit of basic gates only");
    }
    return n == 0 || r.total_basic + 1 >= n;
}

}  // namespace gatesynth
