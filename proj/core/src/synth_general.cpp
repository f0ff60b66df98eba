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

#include "gatesynth/synth_general.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "gatesynth/peephole.hpp"

namespace gatesynth {

namespace {

// Givens steps whose off-diagonal entry is below this are skipped.
constexpr double kZeroTol = 1e-14;

std::size_t wire_count(const DenseUnitary &u) {
    const auto d = static_cast<std::size_t>(u.rows());
    if (u.rows() != u.cols() || d == 0 || !std::has_single_bit(d)) {
        throw std::invalid_argument("unitary must be square with a power-of-two dimension");
    }
    return static_cast<std::size_t>(std::countr_zero(d));
}

Wire wire_of_bit(std::size_t bit, std::size_t n) { return static_cast<Wire>(n - 1 - bit); }

// Gate on the wire where a and b differ, conditioned on every other wire
// holding its value in a. `payload` acts in the (bit = 0, bit = 1) basis.
void append_conditioned(Circuit &c, std::size_t a, std::size_t b, const Unitary2 &payload,
                        const QuadraticOptions &opts) {
    const std::size_t n = c.num_wires();
    const std::size_t diff = a ^ b;
    const Wire target = wire_of_bit(static_cast<std::size_t>(std::countr_zero(diff)), n);
    std::vector<Wire> controls;
    std::vector<Wire> flipped;
    for (Wire w = 0; w < n; ++w) {
        if (w == target) {
            continue;
        }
        controls.push_back(w);
        if (((a >> (n - 1 - w)) & 1) == 0) {
            flipped.push_back(w);
        }
    }
    for (Wire w : flipped) {
        c.add(Gate::single(w, pauli_x()));
    }
    append_mcu_exact(c, controls, target, payload, opts.crossover);
    for (Wire w : flipped) {
        c.add(Gate::single(w, pauli_x()));
    }
}

}  // namespace

TwoLevelDecomposition two_level_decompose(const DenseUnitary &u) {
    wire_count(u);
    const Eigen::Index d = u.rows();
    if (operator_distance(u * u.adjoint(), DenseUnitary::Identity(d, d)) > static_cast<double>(d) * kUnitaryTol) {
        throw std::invalid_argument("matrix is not unitary");
    }
    DenseUnitary m = u;
    TwoLevelDecomposition out;
    for (Eigen::Index j = 0; j + 1 < d; ++j) {
        for (Eigen::Index i = d - 1; i > j; --i) {
            const Complex a = m(j, j);
            const Complex b = m(i, j);
            if (std::abs(b) <= kZeroTol) {
                continue;
            }
            const double r = std::hypot(std::abs(a), std::abs(b));
            // G on rows (j, i) zeroes m(i, j); the recorded factor is G^dag.
            const Complex g00 = std::conj(a) / r, g01 = std::conj(b) / r;
            const Complex g10 = -b / r, g11 = a / r;
            for (Eigen::Index col = 0; col < d; ++col) {
                const Complex top = m(j, col);
                const Complex bot = m(i, col);
                m(j, col) = g00 * top + g01 * bot;
                m(i, col) = g10 * top + g11 * bot;
            }
            m(i, j) = 0;
            out.rotations.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                     Unitary2::from_entries(std::conj(g00), std::conj(g10), std::conj(g01),
                                                            std::conj(g11))});
        }
    }
    out.phases.resize(static_cast<std::size_t>(d));
    for (Eigen::Index k = 0; k < d; ++k) {
        const Complex z = m(k, k);
        out.phases[static_cast<std::size_t>(k)] = z / std::abs(z);
    }
    return out;
}

DenseUnitary embed_two_level(const TwoLevelRotation &t, std::size_t num_wires) {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_wires);
    DenseUnitary m = DenseUnitary::Identity(d, d);
    const auto lo = static_cast<Eigen::Index>(t.x2), hi = static_cast<Eigen::Index>(t.x1);
    m(lo, lo) = t.block(0, 0);
    m(lo, hi) = t.block(0, 1);
    m(hi, lo) = t.block(1, 0);
    m(hi, hi) = t.block(1, 1);
    return m;
}

std::vector<std::size_t> gray_path(std::size_t x1, std::size_t x2) {
    if (x1 == x2) {
        throw std::invalid_argument("gray path endpoints must differ");
    }
    std::vector<std::size_t> path{x1};
    std::size_t cur = x1;
    std::size_t diff = x1 ^ x2;
    while (diff != 0) {
        const std::size_t low = diff & (~diff + 1);
        cur ^= low;
        diff ^= low;
        path.push_back(cur);
    }
    return path;
}

Circuit synth_two_level(const TwoLevelRotation &t, std::size_t num_wires, const QuadraticOptions &opts) {
    if (t.x1 <= t.x2 || t.x1 >= (std::size_t{1} << num_wires)) {
        throw std::invalid_argument("two-level rotation needs x2 < x1 < 2^n");
    }
    const std::vector<std::size_t> path = gray_path(t.x1, t.x2);
    const std::size_t m = path.size();
    Circuit c(num_wires);
    // Walk x1's amplitude along the path until it sits next to x2.
    for (std::size_t i = 0; i + 2 < m; ++i) {
        append_conditioned(c, path[i], path[i + 1], pauli_x(), opts);
    }
    const std::size_t near = path[m - 2];
    // The block is ordered (x2, x1); flip it when x2 has the differing bit set.
    const bool x2_high = (t.x2 & (near ^ t.x2)) != 0;
    const Unitary2 payload = x2_high ? pauli_x() * t.block * pauli_x() : t.block;
    append_conditioned(c, near, t.x2, payload, opts);
    for (std::size_t i = m - 2; i-- > 0;) {
        append_conditioned(c, path[i], path[i + 1], pauli_x(), opts);
    }
    return opts.merge ? merge_adjacent(c) : c;
}

UnitarySynthesis synth_unitary(const DenseUnitary &u, const QuadraticOptions &opts) {
    const std::size_t n = wire_count(u);
    const TwoLevelDecomposition dec = two_level_decompose(u);
    Circuit c(n);
    // Diagonal first (rightmost factor), one conditioned phase per entry.
    for (std::size_t x = 0; x < dec.phases.size(); ++x) {
        const Complex p = dec.phases[x];
        if (std::abs(p - 1.0) <= kZeroTol) {
            continue;
        }
        const double phi = std::arg(p);
        const bool last_bit = (x & 1) != 0;
        const Unitary2 payload = last_bit ? make_phase_flip(phi) : pauli_x() * make_phase_flip(phi) * pauli_x();
        append_conditioned(c, x, x ^ 1, payload, opts);
    }
    QuadraticOptions inner = opts;
    inner.merge = false;
    for (auto it = dec.rotations.rbegin(); it != dec.rotations.rend(); ++it) {
        c.append(synth_two_level(*it, n, inner));
    }
    UnitarySynthesis out{opts.merge ? merge_adjacent(c) : c, {}};
    out.report = count_basic(out.circuit);
    out.report.method = "general";
    return out;
}

}  // namespace gatesynth
