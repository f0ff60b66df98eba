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

#include <optional>
#include <vector>

#include "gatesynth/circuit.hpp"

namespace gatesynth {

/// Controlled-W for special unitary W: C, XOR, B, XOR, A on the target.
/// Two wires, control 0. Throws DomainError unless det W = 1.
Circuit synth_c_su2(const Unitary2 &w);

/// Controlled global phase e^{i delta}, realised as diag(1, e^{i delta}) on
/// the control wire alone.
Circuit synth_c_phase(double delta);

/// Controlled-U for any U(2) in at most four one-qubit gates and two XORs.
/// With merge = false the raw six-gate network is returned.
Circuit synth_c_u(const Unitary2 &u, bool merge = true);

/// Parameters of W = Rz(alpha) Ry(theta) Rz(alpha).
struct SymmetricForm {
    double alpha = 0;
    double theta = 0;
};

/// Recognises W = Rz(alpha) Ry(theta) Rz(alpha) to within tol.
std::optional<SymmetricForm> detect_symmetric_form(const Unitary2 &w, double tol = 1e-9);

/// Controlled-W for W of symmetric form: two one-qubit gates and two XORs.
Circuit synth_c_ab(const Unitary2 &w);

/// Controlled-V for V = Rz(alpha) Ry(theta) Rz(alpha) sigma_x: two one-qubit
/// gates and a single XOR.
Circuit synth_c_v(const Unitary2 &v);

/// Doubly-controlled U from three controlled square roots and two XORs.
/// Three wires: controls 0 and 1, target 2.
Circuit synth_cc_u(const Unitary2 &u);

/// synth_cc_u lowered to basic gates and merged: eight one-qubit gates and
/// eight XORs for generic U.
Circuit expand_cc_u(const Unitary2 &u, bool merge = true);

enum class CongruentVariant { kRyQuarter, kRyThreeQuarter };

struct CongruentToffoli {
    Circuit circuit;
    /// s with simulate(circuit) = Toffoli * diag(s).
    std::vector<int> signs;
};

/// Toffoli up to a sign on one basis state (|101>), from three two-wire
/// gates and four one-qubit gates.
CongruentToffoli synth_congruent_toffoli(CongruentVariant variant);

// Placement helpers used by the larger constructions. All append to `c`
// without merging.

/// Controlled-U in the six-gate network.
void append_controlled(Circuit &c, Wire control, Wire target, const Unitary2 &u);

/// Controlled-U^dag as the mirror image (reversed, adjoint) of
/// append_controlled(u). Pairs of mirrored blocks cancel under merging.
void append_controlled_mirror(Circuit &c, Wire control, Wire target, const Unitary2 &u);

/// Exact Toffoli in sixteen basic gates; `reversed` emits the time-reversed
/// network (same matrix).
void append_toffoli_exact(Circuit &c, Wire c0, Wire c1, Wire target, bool reversed);

/// Toffoli up to signs, in six basic gates. `outer` controls the first and
/// last XOR, `inner` the middle one. The input with inner = 1, outer = 0,
/// target = 1 picks up a sign of -1.
void append_toffoli_congruent(Circuit &c, Wire outer, Wire inner, Wire target);

}  // namespace gatesynth
