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

#include "gatesynth/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gatesynth {

Gate::Gate(std::vector<Wire> controls, Wire target, Unitary2 payload)
    : controls_(std::move(controls)), target_(target), payload_(std::move(payload)) {
    std::sort(controls_.begin(), controls_.end());
    if (std::adjacent_find(controls_.begin(), controls_.end()) != controls_.end()) {
        throw std::invalid_argument("gate has a repeated control wire");
    }
    if (std::binary_search(controls_.begin(), controls_.end(), target_)) {
        throw std::invalid_argument("gate target is also a control");
    }
}

bool Gate::is_not_payload() const { return payload_.distance(pauli_x()) <= kKindTol; }

GateKind Gate::kind() const {
    if (controls_.empty()) {
        return GateKind::kOneQubit;
    }
    if (controls_.size() == 1 && is_not_payload()) {
        return GateKind::kXor;
    }
    return GateKind::kControlledU;
}

bool Gate::touches(Wire w) const {
    return w == target_ || std::binary_search(controls_.begin(), controls_.end(), w);
}

Wire Gate::max_wire() const {
    return controls_.empty() ? target_ : std::max(target_, controls_.back());
}

std::vector<Wire> Gate::wires() const {
    std::vector<Wire> out = controls_;
    out.insert(std::upper_bound(out.begin(), out.end(), target_), target_);
    return out;
}

Gate Gate::remapped(const std::vector<Wire> &map) const {
    auto at = [&](Wire w) {
        if (w >= map.size()) {
            throw std::out_of_range("wire map does not cover wire " + std::to_string(w));
        }
        return map[w];
    };
    std::vector<Wire> cs;
    cs.reserve(controls_.size());
    for (Wire c : controls_) {
        cs.push_back(at(c));
    }
    return Gate(std::move(cs), at(target_), payload_);
}

Circuit::Circuit(std::size_t num_wires) : num_wires_(num_wires) {
    if (num_wires == 0) {
        throw std::invalid_argument("a circuit needs at least one wire");
    }
}

void Circuit::add(Gate g) {
    if (g.max_wire() >= num_wires_) {
        throw std::out_of_range("gate wire " + std::to_string(g.max_wire()) + " outside circuit of " +
                                std::to_string(num_wires_) + " wires");
    }
    gates_.push_back(std::move(g));
}

void Circuit::add_ancilla(Ancilla a) {
    if (a.wire >= num_wires_) {
        throw std::out_of_range("ancilla wire outside circuit");
    }
    if (a.initial_value != 0) {
        throw std::invalid_argument("ancilla initial value must be 0");
    }
    for (const Ancilla &b : ancillas_) {
        if (b.wire == a.wire) {
            throw std::invalid_argument("ancilla declared twice");
        }
    }
    ancillas_.push_back(a);
}

void Circuit::append(const Circuit &other) {
    if (other.num_wires_ > num_wires_) {
        throw std::out_of_range("appended circuit has more wires");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::append_mapped(const Circuit &other, const std::vector<Wire> &map) {
    for (const Gate &g : other.gates_) {
        add(g.remapped(map));
    }
}

Circuit Circuit::inverse() const {
    Circuit out(num_wires_);
    out.ancillas_ = ancillas_;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->adjoint());
    }
    return out;
}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
    Circuit out(num_wires_);
    out.ancillas_ = ancillas_;
    for (Gate &g : gates) {
        out.add(std::move(g));
    }
    return out;
}

SynthesisReport count_basic(const Circuit &c) {
    SynthesisReport r;
    for (const Gate &g : c.gates()) {
        switch (g.kind()) {
            case GateKind::kOneQubit:
                ++r.one_qubit;
                break;
            case GateKind::kXor:
                ++r.xor_count;
                break;
            case GateKind::kControlledU:
                if (g.is_toffoli()) {
                    ++r.toffoli;
                } else {
                    ++r.controlled_v;
                }
                break;
        }
    }
    r.total_basic = r.one_qubit + r.xor_count;
    return r;
}

std::size_t count_two_bit_gates(const Circuit &c) {
    std::vector<bool> covered(c.num_wires(), false);
    std::size_t two = 0;
    for (const Gate &g : c.gates()) {
        if (g.controls().size() > 1) {
            throw std::invalid_argument("circuit has a gate on three or more wires");
        }
        if (g.controls().size() == 1) {
            ++two;
            covered[g.controls()[0]] = true;
            covered[g.target()] = true;
        }
    }
    for (const Gate &g : c.gates()) {
        if (g.controls().empty() && !covered[g.target()]) {
            throw std::invalid_argument("one-qubit gate on a wire with no two-wire gate");
        }
    }
    return two;
}

}  // namespace gatesynth
