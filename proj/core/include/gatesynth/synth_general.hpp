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

#include <cstddef>
#include <vector>

#include "gatesynth/simulate.hpp"
#include "gatesynth/synth_multi.hpp"

namespace gatesynth {

/// A unitary acting only on basis states x2 < x1. `block` is written in
/// ascending basis order: rows and columns are (x2, x1).
struct TwoLevelRotation {
    std::size_t x1 = 0;
    std::size_t x2 = 0;
    Unitary2 block;
};

struct TwoLevelDecomposition {
    /// U = rotations[0] * rotations[1] * ... * diag(phases).
    std::vector<TwoLevelRotation> rotations;
    std::vector<Complex> phases;
};

/// Column-by-column Givens elimination. Rotations that would be the
/// identity are skipped. Throws std::invalid_argument for non-unitary input.
TwoLevelDecomposition two_level_decompose(const DenseUnitary &u);

/// Dense matrix of a two-level rotation on an n-wire register.
DenseUnitary embed_two_level(const TwoLevelRotation &t, std::size_t num_wires);

/// Basis states from x1 to x2, flipping differing bits from the least
/// significant upwards; consecutive entries differ in one bit.
std::vector<std::size_t> gray_path(std::size_t x1, std::size_t x2);

/// A two-level rotation as NOT-conjugated (n-1)-controlled gates: 2m - 3 of
/// them for a path of m states.
Circuit synth_two_level(const TwoLevelRotation &t, std::size_t num_wires, const QuadraticOptions &opts = {});

struct UnitarySynthesis {
    Circuit circuit;
    SynthesisReport report;
};

/// Any n-wire unitary, exactly, with no extra wires.
UnitarySynthesis synth_unitary(const DenseUnitary &u, const QuadraticOptions &opts = {});

}  // namespace gatesynth
