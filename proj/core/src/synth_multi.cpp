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

#include "gatesynth/synth_multi.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gatesynth/peephole.hpp"
#include "gatesynth/synth_small.hpp"

namespace gatesynth {

namespace {

std::vector<Wire> iota_wires(Wire from, Wire to) {
    std::vector<Wire> out;
    for (Wire w = from; w < to; ++w) {
        out.push_back(w);
    }
    return out;
}

int top_bit(std::uint64_t mask) { return 63 - std::countl_zero(mask); }

// Lowers the Toffolis of `net` onto `c`: those aimed at `final_target` are
// exact, the rest sign-congruent. Other gates are copied.
void lower_toffoli_network(Circuit &c, const Circuit &net, Wire final_target) {
    for (const Gate &g : net.gates()) {
        if (!g.is_toffoli()) {
            c.add(g);
            continue;
        }
        const Wire lo = g.controls()[0];
        const Wire hi = g.controls()[1];
        if (g.target() == final_target) {
            // The time-reversed network merges better with its neighbours.
            append_toffoli_exact(c, lo, hi, g.target(), true);
        } else {
            // Outer control on the lower wire: the signs of mirrored pairs
            // then cancel (checked by simulation in the tests).
            append_toffoli_congruent(c, lo, hi, g.target());
        }
    }
}

void emit_network(Circuit &c, const Circuit &net, Wire final_target, Level level) {
    if (level == Level::kNative) {
        c.append(net);
    } else {
        lower_toffoli_network(c, net, final_target);
    }
}

void ladder_toffolis(Circuit &net, const std::vector<Wire> &ctl, Wire target, const std::vector<Wire> &work) {
    const std::size_t m = ctl.size();
    if (m == 0) {
        net.add(Gate::single(target, pauli_x()));
        return;
    }
    if (m == 1) {
        net.add(Gate::cnot(ctl[0], target));
        return;
    }
    if (m == 2) {
        net.add(Gate::toffoli(ctl[0], ctl[1], target));
        return;
    }
    if (work.size() < m - 2) {
        throw std::invalid_argument("ladder needs " + std::to_string(m - 2) + " work wires");
    }
    const Gate top = Gate::toffoli(ctl[m - 1], work[m - 3], target);
    std::vector<Gate> down;
    for (std::size_t j = m - 2; j >= 2; --j) {
        down.push_back(Gate::toffoli(ctl[j], work[j - 2], work[j - 1]));
    }
    const Gate inner = Gate::toffoli(ctl[0], ctl[1], work[0]);
    auto half = [&] {
        for (const Gate &g : down) {
            net.add(g);
        }
        net.add(inner);
        for (auto it = down.rbegin(); it != down.rend(); ++it) {
            net.add(*it);
        }
    };
    net.add(top);
    half();
    net.add(top);
    half();
}

void split_toffolis(Circuit &net, const std::vector<Wire> &ctl, Wire target, Wire spare) {
    const std::size_t k = ctl.size();
    if (k <= 2) {
        ladder_toffolis(net, ctl, target, {});
        return;
    }
    // Two halves over k + 2 wires: the first computes into the borrowed wire,
    // the second reads it back.
    const std::size_t wires = k + 2;
    const std::size_t m1 = wires / 2;
    const std::size_t m2 = wires - m1 - 1;
    const std::vector<Wire> c1(ctl.begin(), ctl.begin() + static_cast<std::ptrdiff_t>(m1));
    std::vector<Wire> c2(ctl.begin() + static_cast<std::ptrdiff_t>(m1), ctl.end());
    c2.push_back(spare);
    const std::size_t w1 = m1 >= 2 ? m1 - 2 : 0;
    const std::size_t w2 = m2 >= 2 ? m2 - 2 : 0;
    const std::vector<Wire> work1(ctl.end() - static_cast<std::ptrdiff_t>(w1), ctl.end());
    const std::vector<Wire> work2(ctl.begin() + static_cast<std::ptrdiff_t>(m1 - w2),
                                  ctl.begin() + static_cast<std::ptrdiff_t>(m1));
    for (int rep = 0; rep < 2; ++rep) {
        ladder_toffolis(net, c1, spare, work1);
        ladder_toffolis(net, c2, target, work2);
    }
}

void require_distinct(const std::vector<Wire> &controls, std::initializer_list<Wire> others) {
    std::vector<Wire> all = controls;
    all.insert(all.end(), others);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("wires of a multi-controlled gate must be distinct");
    }
}

}  // namespace

std::vector<GrayStep> gray_schedule(std::size_t m) {
    if (m == 0 || m > 63) {
        throw std::invalid_argument("gray schedule needs 1 <= m <= 63");
    }
    std::vector<GrayStep> out;
    const std::uint64_t count = (std::uint64_t{1} << m) - 1;
    out.reserve(count);
    for (std::uint64_t i = 1; i <= count; ++i) {
        const std::uint64_t g = i ^ (i >> 1);
        out.push_back({g, std::popcount(g) % 2 == 0});
    }
    return out;
}

std::string mask_string(std::uint64_t mask, std::size_t m) {
    std::string s(m, '0');
    for (std::size_t k = 0; k < m; ++k) {
        if ((mask >> k) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

void append_graycode(Circuit &c, const std::vector<Wire> &controls, Wire target, const Unitary2 &u, Level level) {
    const std::size_t m = controls.size();
    require_distinct(controls, {target});
    if (m == 0) {
        c.add(Gate::single(target, u));
        return;
    }
    const Unitary2 v = m == 1 ? u : unitary_root(u, static_cast<int>(m - 1));
    std::uint64_t prev = 0;
    for (const GrayStep &step : gray_schedule(m)) {
        if (prev != 0) {
            // Fold the flipped control into the wire carrying the parity.
            const int j = std::countr_zero(prev ^ step.mask);
            const int held = top_bit(prev);
            const int holder = top_bit(step.mask);
            if (holder == held) {
                c.add(Gate::cnot(controls[j], controls[holder]));
            } else {
                c.add(Gate::cnot(controls[held], controls[holder]));
            }
        }
        const Wire ctl = controls[top_bit(step.mask)];
        if (level == Level::kNative) {
            c.add(Gate({ctl}, target, step.apply_dagger ? v.adjoint() : v));
        } else if (step.apply_dagger) {
            append_controlled_mirror(c, ctl, target, v);
        } else {
            append_controlled(c, ctl, target, v);
        }
        prev = step.mask;
    }
}

Circuit synth_graycode(std::size_t m, const Unitary2 &u, Level level) {
    if (m < 2) {
        throw std::invalid_argument("gray-code construction needs at least two controls");
    }
    Circuit c(m + 1);
    append_graycode(c, iota_wires(0, static_cast<Wire>(m)), static_cast<Wire>(m), u, level);
    return level == Level::kBasic ? merge_adjacent(c) : c;
}

void append_mcx_ladder(Circuit &c, const std::vector<Wire> &controls, Wire target, const std::vector<Wire> &work,
                       Level level) {
    Circuit net(c.num_wires());
    ladder_toffolis(net, controls, target, work);
    emit_network(c, net, target, level);
}

Circuit synth_mcx_ladder(std::size_t n, std::size_t m, Level level) {
    if (n < 5 || m < 3 || 2 * m > n + 1) {
        throw std::invalid_argument("ladder needs n >= 5 and 3 <= m <= ceil(n/2)");
    }
    Circuit c(n);
    const Wire t = static_cast<Wire>(n - 1);
    append_mcx_ladder(c, iota_wires(0, static_cast<Wire>(m)), t, iota_wires(static_cast<Wire>(n - m + 1), t), level);
    return level == Level::kBasic ? merge_adjacent(c) : c;
}

void append_mcx_one_spare(Circuit &c, const std::vector<Wire> &controls, Wire target, Wire spare, Level level) {
    require_distinct(controls, {target, spare});
    Circuit net(c.num_wires());
    split_toffolis(net, controls, target, spare);
    emit_network(c, net, target, level);
}

Circuit synth_mcx_split(std::size_t n, Level level) {
    if (n < 7) {
        throw std::invalid_argument("split construction needs n >= 7");
    }
    Circuit c(n);
    append_mcx_one_spare(c, iota_wires(0, static_cast<Wire>(n - 2)), static_cast<Wire>(n - 1),
                         static_cast<Wire>(n - 2), level);
    return level == Level::kBasic ? merge_adjacent(c) : c;
}

Circuit expand_mcx_split(std::size_t n, bool merge) {
    if (n < 7) {
        throw std::invalid_argument("split construction needs n >= 7");
    }
    Circuit c(n);
    append_mcx_one_spare(c, iota_wires(0, static_cast<Wire>(n - 2)), static_cast<Wire>(n - 1),
                         static_cast<Wire>(n - 2), Level::kBasic);
    return merge ? merge_adjacent(c) : c;
}

void append_mcu_exact(Circuit &c, const std::vector<Wire> &controls, Wire target, const Unitary2 &u,
                      std::size_t crossover) {
    require_distinct(controls, {target});
    crossover = std::max<std::size_t>(crossover, 7);
    const std::size_t k = controls.size();
    if (k == 0) {
        c.add(Gate::single(target, u));
        return;
    }
    if (k == 1) {
        append_controlled(c, controls[0], target, u);
        return;
    }
    if (k == 2) {
        const Unitary2 v = unitary_root(u, 1);
        append_controlled(c, controls[1], target, v);
        c.add(Gate::cnot(controls[0], controls[1]));
        append_controlled_mirror(c, controls[1], target, v);
        c.add(Gate::cnot(controls[0], controls[1]));
        append_controlled(c, controls[0], target, v);
        return;
    }
    if (k + 1 < crossover) {
        append_graycode(c, controls, target, u, Level::kBasic);
        return;
    }
    // Peel off the last control: it carries a controlled root whose action
    // is toggled by an (k-1)-controlled NOT borrowing the target wire.
    const Unitary2 v = unitary_root(u, 1);
    const Wire last = controls.back();
    const std::vector<Wire> rest(controls.begin(), controls.end() - 1);
    append_controlled(c, last, target, v);
    append_mcx_one_spare(c, rest, last, target, Level::kBasic);
    append_controlled_mirror(c, last, target, v);
    append_mcx_one_spare(c, rest, last, target, Level::kBasic);
    append_mcu_exact(c, rest, target, v, crossover);
}

void append_mcu_truncated(Circuit &c, const std::vector<Wire> &controls, Wire target, const Unitary2 &u,
                          std::size_t levels, std::size_t crossover) {
    if (levels == 0) {
        // Residual root is within pi / 2^k of the identity; drop it.
        return;
    }
    const std::size_t k = controls.size();
    if (k <= 2 || k + 1 < std::max<std::size_t>(crossover, 7)) {
        append_mcu_exact(c, controls, target, u, crossover);
        return;
    }
    const Unitary2 v = unitary_root(u, 1);
    const Wire last = controls.back();
    const std::vector<Wire> rest(controls.begin(), controls.end() - 1);
    append_controlled(c, last, target, v);
    append_mcx_one_spare(c, rest, last, target, Level::kBasic);
    append_controlled_mirror(c, last, target, v);
    append_mcx_one_spare(c, rest, last, target, Level::kBasic);
    append_mcu_truncated(c, rest, target, v, levels - 1, crossover);
}

Circuit synth_mcu_quadratic(std::size_t n, const Unitary2 &u, const QuadraticOptions &opts) {
    if (n < 2) {
        throw std::invalid_argument("quadratic construction needs at least two wires");
    }
    Circuit c(n);
    append_mcu_exact(c, iota_wires(0, static_cast<Wire>(n - 1)), static_cast<Wire>(n - 1), u, opts.crossover);
    return opts.merge ? merge_adjacent(c) : c;
}

std::size_t approx_levels(double eps) {
    if (!(eps > 0) || !std::isfinite(eps)) {
        throw std::invalid_argument("tolerance must be positive and finite");
    }
    if (eps >= std::numbers::pi) {
        return 0;
    }
    return static_cast<std::size_t>(std::ceil(std::log2(std::numbers::pi / eps)));
}

Circuit synth_mcu_approx(std::size_t n, const Unitary2 &u, double eps, const QuadraticOptions &opts) {
    if (n < 2) {
        throw std::invalid_argument("approximate construction needs at least two wires");
    }
    Circuit c(n);
    append_mcu_truncated(c, iota_wires(0, static_cast<Wire>(n - 1)), static_cast<Wire>(n - 1), u, approx_levels(eps),
                         opts.crossover);
    return opts.merge ? merge_adjacent(c) : c;
}

Circuit synth_mcsu2_linear(std::size_t n, const Unitary2 &w, bool merge) {
    if (n < 3) {
        throw std::invalid_argument("linear special-unitary construction needs n >= 3");
    }
    const AbcTriple abc = abc_decompose(w);
    Circuit c(n);
    const Wire target = static_cast<Wire>(n - 1);
    const Wire pivot = static_cast<Wire>(n - 2);
    const std::vector<Wire> rest = iota_wires(0, pivot);
    append_controlled(c, pivot, target, abc.c);
    append_mcx_one_spare(c, rest, target, pivot, Level::kBasic);
    append_controlled(c, pivot, target, abc.b);
    append_mcx_one_spare(c, rest, target, pivot, Level::kBasic);
    append_controlled(c, pivot, target, abc.a);
    return merge ? merge_adjacent(c) : c;
}

Circuit synth_mcu_ancilla(std::size_t n, const Unitary2 &u, bool merge) {
    if (n < 3) {
        throw std::invalid_argument("ancilla construction needs n >= 3");
    }
    Circuit c(n);
    const Wire target = static_cast<Wire>(n - 1);
    const Wire anc = static_cast<Wire>(n - 2);
    c.add_ancilla({anc, 0, true});
    const std::vector<Wire> controls = iota_wires(0, anc);
    append_mcx_one_spare(c, controls, anc, target, Level::kBasic);
    append_controlled(c, anc, target, u);
    append_mcx_one_spare(c, controls, anc, target, Level::kBasic);
    return merge ? merge_adjacent(c) : c;
}

Circuit lower_to_basic(const Circuit &c, const QuadraticOptions &opts) {
    Circuit out(c.num_wires());
    for (const Ancilla &a : c.ancillas()) {
        out.add_ancilla(a);
    }
    for (const Gate &g : c.gates()) {
        const GateKind kind = g.kind();
        if (kind != GateKind::kControlledU) {
            out.add(g);
        } else if (g.is_toffoli()) {
            append_toffoli_exact(out, g.controls()[0], g.controls()[1], g.target(), false);
        } else {
            append_mcu_exact(out, g.controls(), g.target(), g.payload(), opts.crossover);
        }
    }
    return opts.merge ? merge_adjacent(out) : out;
}

}  // namespace gatesynth
