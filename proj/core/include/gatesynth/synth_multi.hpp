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

#include <cstdint>
#include <string>
#include <vector>

#include "gatesynth/circuit.hpp"

namespace gatesynth {

/// Granularity of an emitted circuit: the construction's own gate set
/// (controlled roots, Toffolis) or fully lowered to one-qubit gates and XORs.
enum class Level { kNative, kBasic };

/// One term of the parity schedule over m controls. Bit k of `mask` refers to
/// control k; the controlled root is applied when the parity of the masked
/// controls is 1, as V for odd-weight masks and V^dag for even-weight ones.
struct GrayStep {
    std::uint64_t mask = 0;
    bool apply_dagger = false;
};

/// Binary-reflected sequence of all 2^m - 1 nonzero masks, starting at the
/// single first control.
std::vector<GrayStep> gray_schedule(std::size_t m);

/// Mask as a string with control 0 first, e.g. "110".
std::string mask_string(std::uint64_t mask, std::size_t m);

/// m-controlled U on m + 1 wires (target last) from 2^m - 1 controlled roots
/// of U and 2^m - 2 XORs. At Level::kBasic the roots are lowered and merged.
Circuit synth_graycode(std::size_t m, const Unitary2 &u, Level level = Level::kNative);

/// m-controlled NOT with m - 2 borrowed work wires, as 4(m - 2) Toffolis.
/// Controls are wires 0..m-1, the target is wire n-1, the work wires are the
/// m - 2 wires directly above the target. Work wires may hold any value and
/// are restored.
Circuit synth_mcx_ladder(std::size_t n, std::size_t m, Level level = Level::kNative);

/// (n-2)-controlled NOT with one borrowed wire, as 8(n - 5) Toffolis.
/// Controls are wires 0..n-3, the borrowed wire is n-2, the target n-1.
Circuit synth_mcx_split(std::size_t n, Level level = Level::kNative);

/// synth_mcx_split lowered to basic gates: the four Toffolis on the target
/// are exact, every other Toffoli is a sign-congruent network whose signs
/// cancel in pairs.
Circuit expand_mcx_split(std::size_t n, bool merge = true);

struct QuadraticOptions {
    /// Targets on 4 .. crossover-1 wires use the parity schedule instead of
    /// recursing. Values below 7 are raised to 7.
    std::size_t crossover = 9;
    bool merge = true;
};

/// (n-1)-controlled U on n wires, exact, with basic gates only and no extra
/// wires. Cost grows quadratically in n.
Circuit synth_mcu_quadratic(std::size_t n, const Unitary2 &u, const QuadraticOptions &opts = {});

/// Number of recursion levels kept for a tolerance: ceil(log2(pi / eps)),
/// or 0 when eps >= pi.
std::size_t approx_levels(double eps);

/// (n-1)-controlled U to within eps in operator distance: the quadratic
/// recursion cut after approx_levels(eps) levels, dropping a residual
/// controlled gate whose root is within pi / 2^k of the identity. If the
/// recursion reaches its exact floor first, the result is exact.
Circuit synth_mcu_approx(std::size_t n, const Unitary2 &u, double eps, const QuadraticOptions &opts = {});

/// (n-1)-controlled W for special unitary W on n wires, exact, linear cost.
/// Wire n-2 controls the three one-qubit factors and doubles as the borrowed
/// wire of the two (n-2)-controlled NOTs. Throws DomainError unless det W = 1.
Circuit synth_mcsu2_linear(std::size_t n, const Unitary2 &w, bool merge = true);

/// (n-2)-controlled U with a clean ancilla: controls 0..n-3, ancilla n-2
/// (starts and ends at 0), target n-1. Linear cost.
Circuit synth_mcu_ancilla(std::size_t n, const Unitary2 &u, bool merge = true);

/// The recursion behind synth_mcu_approx on arbitrary wires.
void append_mcu_truncated(Circuit &c, const std::vector<Wire> &controls, Wire target, const Unitary2 &u,
                          std::size_t levels, std::size_t crossover);

/// Rewrites every gate into one-qubit gates and XORs (exactly), then merges.
Circuit lower_to_basic(const Circuit &c, const QuadraticOptions &opts = {});

// Placement helpers. `level` selects Toffoli-level or basic output; nothing
// is merged.

/// Gray-code controlled-U on arbitrary wires.
void append_graycode(Circuit &c, const std::vector<Wire> &controls, Wire target, const Unitary2 &u, Level level);

/// Ladder multi-controlled NOT; needs controls.size() - 2 work wires.
void append_mcx_ladder(Circuit &c, const std::vector<Wire> &controls, Wire target, const std::vector<Wire> &work,
                       Level level);

/// Multi-controlled NOT with a single borrowed wire, for any number of
/// controls (small counts degrade to NOT, XOR or one Toffoli).
void append_mcx_one_spare(Circuit &c, const std::vector<Wire> &controls, Wire target, Wire spare, Level level);

/// Exact multi-controlled U on arbitrary wires in basic gates, no extra
/// wires (controlled-U, three-wire, parity schedule or quadratic recursion
/// by size).
void append_mcu_exact(Circuit &c, const std::vector<Wire> &controls, Wire target, const Unitary2 &u,
                      std::size_t crossover);

}  // namespace gatesynth
