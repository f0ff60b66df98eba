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
#include <cstddef>

#include "gatesynth/circuit.hpp"

namespace gatesynth {

/// 2^n x 2^n matrix over the lexicographically ordered basis.
using DenseUnitary = Eigen::MatrixXcd;

/// Dense simulation refuses more wires than this.
inline constexpr std::size_t kMaxSimWires = 12;

/// Identity except for a final 2x2 block equal to U; m = 0 gives U itself.
DenseUnitary reference_controlled(std::size_t m, const Unitary2 &u);

/// Matrix of a single gate placed on an n-wire register.
DenseUnitary embed_gate(const Gate &g, std::size_t num_wires);

/// Left-multiplies `state` (rows indexed by basis states) by the gate.
void apply_gate(DenseUnitary &state, const Gate &g, std::size_t num_wires);

/// Product of all gates, first gate rightmost.
DenseUnitary simulate(const Circuit &c);

/// The action of a circuit restricted to inputs with every ancilla at its
/// initial value. `block` acts on the remaining wires (kept in order);
/// `leakage` is the largest amplitude norm that lands outside that subspace.
struct AncillaBlock {
    DenseUnitary block;
    double leakage = 0.0;
};

AncillaBlock ancilla_block(const Circuit &c, const DenseUnitary &full);

/// Index of a basis state given per-wire bits (wire 0 most significant).
std::size_t basis_index(const std::vector<int> &bits);

}  // namespace gatesynth
