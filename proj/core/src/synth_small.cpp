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

#include "gatesynth/synth_small.hpp"

#include <cmath>
#include <numbers>

#include "gatesynth/peephole.hpp"

namespace gatesynth {

namespace {

constexpr double kPi = std::numbers::pi;

// Raw C, XOR, B, XOR, A sequence for special unitary w on (control -> target).
void append_su2_network(Circuit &c, Wire control, Wire target, const Unitary2 &w) {
    const AbcTriple abc = abc_decompose(w);
    c.add(Gate::single(target, abc.c));
    c.add(Gate::cnot(control, target));
    c.add(Gate::single(target, abc.b));
    c.add(Gate::cnot(control, target));
    c.add(Gate::single(target, abc.a));
}

Unitary2 control_phase_gate(double delta) { return make_rz(-delta) * make_ph(delta / 2); }

Circuit raw_controlled(const Unitary2 &u) {
    const PhaseSplit split = su2_phase_split(u);
    Circuit c(2);
    c.add(Gate::single(0, control_phase_gate(split.delta)));
    append_su2_network(c, 0, 1, split.w);
    return c;
}

}  // namespace

Circuit synth_c_su2(const Unitary2 &w) {
    Circuit c(2);
    append_su2_network(c, 0, 1, w);
    return c;
}

Circuit synth_c_phase(double delta) {
    Circuit c(2);
    c.add(Gate::single(0, control_phase_gate(delta)));
    return c;
}

Circuit synth_c_u(const Unitary2 &u, bool merge) {
    Circuit c = raw_controlled(u);
    return merge ? merge_adjacent(c) : c;
}

std::optional<SymmetricForm> detect_symmetric_form(const Unitary2 &w, double tol) {
    const Complex w00 = w(0, 0);
    SymmetricForm f;
    f.alpha = std::abs(w00) < 1e-15 ? 0.0 : std::arg(w00);
    f.theta = 2 * std::atan2(w(0, 1).real(), std::abs(w00));
    const Unitary2 rebuilt = make_rz(f.alpha) * make_ry(f.theta) * make_rz(f.alpha);
    if (rebuilt.distance(w) <= tol) {
        return f;
    }
    return std::nullopt;
}

Circuit synth_c_ab(const Unitary2 &w) {
    const auto form = detect_symmetric_form(w);
    if (!form) {
        throw DomainError("payload is not of the form Rz(a) Ry(t) Rz(a)");
    }
    const Unitary2 a = make_rz(form->alpha) * make_ry(form->theta / 2);
    Circuit c(2);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::single(1, a.adjoint()));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::single(1, a));
    return c;
}

Circuit synth_c_v(const Unitary2 &v) {
    const auto form = detect_symmetric_form(v * pauli_x());
    if (!form) {
        throw DomainError("payload is not of the form Rz(a) Ry(t) Rz(a) X");
    }
    const Unitary2 a = make_rz(form->alpha) * make_ry(form->theta / 2);
    Circuit c(2);
    c.add(Gate::single(1, a.adjoint()));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::single(1, a));
    return c;
}

Circuit synth_cc_u(const Unitary2 &u) {
    const Unitary2 v = unitary_root(u, 1);
    Circuit c(3);
    c.add(Gate({1}, 2, v));
    c.add(Gate::cnot(0, 1));
    c.add(Gate({1}, 2, v.adjoint()));
    c.add(Gate::cnot(0, 1));
    c.add(Gate({0}, 2, v));
    return c;
}

Circuit expand_cc_u(const Unitary2 &u, bool merge) {
    const Unitary2 v = unitary_root(u, 1);
    Circuit c(3);
    append_controlled(c, 1, 2, v);
    c.add(Gate::cnot(0, 1));
    append_controlled_mirror(c, 1, 2, v);
    c.add(Gate::cnot(0, 1));
    append_controlled(c, 0, 2, v);
    return merge ? merge_adjacent(c) : c;
}

CongruentToffoli synth_congruent_toffoli(CongruentVariant variant) {
    CongruentToffoli out{Circuit(3), std::vector<int>(8, 1)};
    out.signs[5] = -1;
    Circuit &c = out.circuit;
    if (variant == CongruentVariant::kRyQuarter) {
        append_toffoli_congruent(c, 1, 0, 2);
        return out;
    }
    // Same skeleton with controlled-Z in place of XOR; controlled-Z is
    // symmetric in its two wires.
    const Unitary2 b = make_ry(-3 * kPi / 4);
    c.add(Gate::single(2, b));
    c.add(Gate({1}, 2, pauli_z()));
    c.add(Gate::single(2, b.adjoint()));
    c.add(Gate({0}, 2, pauli_z()));
    c.add(Gate::single(2, b));
    c.add(Gate({1}, 2, pauli_z()));
    c.add(Gate::single(2, b.adjoint()));
    return out;
}

void append_controlled(Circuit &c, Wire control, Wire target, const Unitary2 &u) {
    c.append_mapped(raw_controlled(u), {control, target});
}

void append_controlled_mirror(Circuit &c, Wire control, Wire target, const Unitary2 &u) {
    c.append_mapped(raw_controlled(u).inverse(), {control, target});
}

void append_toffoli_exact(Circuit &c, Wire c0, Wire c1, Wire target, bool reversed) {
    static const Circuit forward = expand_cc_u(pauli_x());
    static const Circuit backward = forward.inverse();
    c.append_mapped(reversed ? backward : forward, {c0, c1, target});
}

void append_toffoli_congruent(Circuit &c, Wire outer, Wire inner, Wire target) {
    const Unitary2 a = make_ry(-kPi / 4);
    c.add(Gate::single(target, a));
    c.add(Gate::cnot(outer, target));
    c.add(Gate::single(target, a));
    c.add(Gate::cnot(inner, target));
    c.add(Gate::single(target, a.adjoint()));
    c.add(Gate::cnot(outer, target));
    c.add(Gate::single(target, a.adjoint()));
}

}  // namespace gatesynth
