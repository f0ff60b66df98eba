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

#include "gatesynth/circuit.hpp"

namespace gatesynth {

/// Gates this close to the identity are dropped by the merge pass.
inline constexpr double kMergeTol = 1e-12;

/// Folds together same-placement gates that have no intervening gate on any
/// of their wires (one-qubit runs, and controlled pairs such as XOR-XOR), and
/// deletes gates whose payload is within tol of the identity. Iterates to a
/// fixpoint. Only disjoint-support commutation is ever implied.
Circuit merge_adjacent(const Circuit &c, double tol = kMergeTol);

/// Moves each gate backwards past gates on disjoint wires when that makes it
/// literally adjacent to a gate it can merge with. Semantics are unchanged.
Circuit commute_window(const Circuit &c);

}  // namespace gatesynth
