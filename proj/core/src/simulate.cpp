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

#include "gatesynth/simulate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gatesynth {

namespace {

void require_sim_size(std::size_t n) {
    if (n > kMaxSimWires) {
        throw std::length_error("dense simulation is limited to " + std::to_string(kMaxSimWires) + " wires, got " +
                                std::to_string(n));
    }
}

std::size_t bit_of(Wire w, std::size_t n) { return std::size_t{1} << (n - 1 - w); }

}  // namespace

DenseUnitary reference_controlled(std::size_t m, const Unitary2 &u) {
    if (m > 12) {
        throw std::length_error("reference_controlled is limited to 12 controls");
    }
    const std::size_t dim = std::size_t{2} << m;
    DenseUnitary out = DenseUnitary::Identity(dim, dim);
    out.bottomRightCorner(2, 2) = u.matrix();
    return out;
}

namespace {

// A gate reduced to bit masks and real coefficients.
struct Kernel {
    std::size_t tbit = 0;
    std::size_t cmask = 0;
    double ar, ai, br, bi, cr, ci, dr, di;
};

Kernel make_kernel(const Gate &g, std::size_t num_wires) {
    if (g.max_wire() >= num_wires) {
        throw std::out_of_range("gate does not fit the register");
    }
    Kernel k;
    for (Wire c : g.controls()) {
        k.cmask |= bit_of(c, num_wires);
    }
    k.tbit = bit_of(g.target(), num_wires);
    const Matrix2 &u = g.payload().matrix();
    k.ar = u(0, 0).real(), k.ai = u(0, 0).imag(), k.br = u(0, 1).real(), k.bi = u(0, 1).imag();
    k.cr = u(1, 0).real(), k.ci = u(1, 0).imag(), k.dr = u(1, 1).real(), k.di = u(1, 1).imag();
    return k;
}

// Plain real arithmetic: std::complex multiplication carries NaN recovery
// code that dominates the inner loop.
void apply_kernel(const Kernel &k, double *col, std::size_t dim) {
    // Visit only indices with every control set and the target clear, by
    // walking the subsets of the remaining free bits.
    const std::size_t free = (dim - 1) & ~(k.tbit | k.cmask);
    std::size_t r = 0;
    do {
        const std::size_t i0 = r | k.cmask;
        double *p = col + 2 * i0;
        double *q = col + 2 * (i0 | k.tbit);
        const double xr = p[0], xi = p[1], yr = q[0], yi = q[1];
        p[0] = k.ar * xr - k.ai * xi + k.br * yr - k.bi * yi;
        p[1] = k.ar * xi + k.ai * xr + k.br * yi + k.bi * yr;
        q[0] = k.cr * xr - k.ci * xi + k.dr * yr - k.di * yi;
        q[1] = k.cr * xi + k.ci * xr + k.dr * yi + k.di * yr;
        r = (r - free) & free;
    } while (r != 0);
}

}  // namespace

void apply_gate(DenseUnitary &state, const Gate &g, std::size_t num_wires) {
    const Kernel k = make_kernel(g, num_wires);
    const std::size_t dim = std::size_t{1} << num_wires;
    if (static_cast<std::size_t>(state.rows()) != dim) {
        throw std::invalid_argument("state has the wrong number of rows");
    }
    for (Eigen::Index j = 0; j < state.cols(); ++j) {
        apply_kernel(k, reinterpret_cast<double *>(state.col(j).data()), dim);
    }
}

DenseUnitary embed_gate(const Gate &g, std::size_t num_wires) {
    require_sim_size(num_wires);
    const std::size_t dim = std::size_t{1} << num_wires;
    DenseUnitary m = DenseUnitary::Identity(dim, dim);
    apply_gate(m, g, num_wires);
    return m;
}

DenseUnitary simulate(const Circuit &c) {
    const std::size_t n = c.num_wires();
    require_sim_size(n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Kernel> kernels;
    kernels.reserve(c.size());
    for (const Gate &g : c.gates()) {
        kernels.push_back(make_kernel(g, n));
    }
    // Columns evolve independently; run the whole circuit over a block of
    // columns at a time so the block stays in cache.
    constexpr std::size_t kBlockBytes = std::size_t{1} << 19;
    const std::size_t block = std::max<std::size_t>(1, kBlockBytes / (dim * sizeof(Complex)));
    DenseUnitary m = DenseUnitary::Identity(dim, dim);
    for (std::size_t j0 = 0; j0 < dim; j0 += block) {
        const std::size_t j1 = std::min(dim, j0 + block);
        for (const Kernel &k : kernels) {
            for (std::size_t j = j0; j < j1; ++j) {
                apply_kernel(k, reinterpret_cast<double *>(m.col(static_cast<Eigen::Index>(j)).data()), dim);
            }
        }
    }
    return m;
}

AncillaBlock ancilla_block(const Circuit &c, const DenseUnitary &full) {
    const std::size_t n = c.num_wires();
    if (static_cast<std::size_t>(full.rows()) != (std::size_t{1} << n)) {
        throw std::invalid_argument("matrix does not match circuit width");
    }
    std::vector<bool> is_anc(n, false);
    for (const Ancilla &a : c.ancillas()) {
        is_anc[a.wire] = true;
    }
    std::vector<Wire> logical;
    for (Wire w = 0; w < n; ++w) {
        if (!is_anc[w]) {
            logical.push_back(w);
        }
    }
    const std::size_t l = logical.size();
    const std::size_t ldim = std::size_t{1} << l;
    std::vector<std::size_t> full_index(ldim, 0);
    for (std::size_t x = 0; x < ldim; ++x) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < l; ++k) {
            if ((x >> (l - 1 - k)) & 1) {
                idx |= bit_of(logical[k], n);
            }
        }
        full_index[x] = idx;  // ancilla bits stay at their initial value 0
    }
    std::vector<bool> inside(std::size_t{1} << n, false);
    for (std::size_t idx : full_index) {
        inside[idx] = true;
    }
    AncillaBlock out;
    out.block = DenseUnitary::Zero(ldim, ldim);
    for (std::size_t x = 0; x < ldim; ++x) {
        const auto col = full.col(full_index[x]);
        for (std::size_t y = 0; y < ldim; ++y) {
            out.block(y, x) = col(full_index[y]);
        }
        double outside = 0.0;
        for (Eigen::Index r = 0; r < col.size(); ++r) {
            if (!inside[r]) {
                outside += std::norm(col(r));
            }
        }
        out.leakage = std::max(out.leakage, std::sqrt(outside));
    }
    return out;
}

std::size_t basis_index(const std::vector<int> &bits) {
    std::size_t idx = 0;
    for (int b : bits) {
        idx = (idx << 1) | static_cast<std::size_t>(b != 0);
    }
    return idx;
}

}  // namespace gatesynth
