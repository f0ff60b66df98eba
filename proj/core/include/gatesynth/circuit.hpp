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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gatesynth/mat2.hpp"

namespace gatesynth {

using Wire = std::uint32_t;

/// Payloads within this distance of sigma_x count as a NOT for tagging.
inline constexpr double kKindTol = 1e-12;

enum class GateKind { kOneQubit, kXor, kControlledU };

/// U applied to `target` when every control wire is 1. Controls are kept
/// sorted and duplicate-free.
class Gate {
   public:
    Gate(std::vector<Wire> controls, Wire target, Unitary2 payload);

    static Gate single(Wire target, Unitary2 u) { return Gate({}, target, std::move(u)); }
    static Gate cnot(Wire control, Wire target) { return Gate({control}, target, pauli_x()); }
    static Gate toffoli(Wire c0, Wire c1, Wire target) { return Gate({c0, c1}, target, pauli_x()); }

    const std::vector<Wire> &controls() const { return controls_; }
    Wire target() const { return target_; }
    const Unitary2 &payload() const { return payload_; }

    GateKind kind() const;
    bool is_not_payload() const;
    bool is_toffoli() const { return controls_.size() == 2 && is_not_payload(); }
    bool touches(Wire w) const;
    Wire max_wire() const;
    /// Wires in ascending order (controls and target).
    std::vector<Wire> wires() const;

    Gate adjoint() const { return Gate(controls_, target_, payload_.adjoint(), Unchecked{}); }
    Gate with_payload(Unitary2 u) const { return Gate(controls_, target_, std::move(u), Unchecked{}); }
    /// Relabels wire w as map[w].
    Gate remapped(const std::vector<Wire> &map) const;

    bool same_placement(const Gate &other) const {
        return target_ == other.target_ && controls_ == other.controls_;
    }
    friend bool operator==(const Gate &a, const Gate &b) {
        return a.same_placement(b) && a.payload_ == b.payload_;
    }

   private:
    struct Unchecked {};
    Gate(std::vector<Wire> controls, Wire target, Unitary2 payload, Unchecked)
        : controls_(std::move(controls)), target_(target), payload_(std::move(payload)) {}

    std::vector<Wire> controls_;
    Wire target_;
    Unitary2 payload_;
};

struct Ancilla {
    Wire wire = 0;
    int initial_value = 0;
    bool restored = true;

    friend bool operator==(const Ancilla &, const Ancilla &) = default;
};

/// Ordered gate list over a fixed number of wires. Wire 0 is the most
/// significant bit of a basis index.
class Circuit {
   public:
    explicit Circuit(std::size_t num_wires);

    std::size_t num_wires() const { return num_wires_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::vector<Ancilla> &ancillas() const { return ancillas_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    void add(Gate g);
    void add_ancilla(Ancilla a);
    void append(const Circuit &other);
    /// Appends `other` with its wire w relabelled as map[w].
    void append_mapped(const Circuit &other, const std::vector<Wire> &map);
    /// Gates in reverse order with adjoint payloads.
    Circuit inverse() const;
    /// Same wires and ancillas, different gate list.
    Circuit with_gates(std::vector<Gate> gates) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    std::size_t num_wires_;
    std::vector<Gate> gates_;
    std::vector<Ancilla> ancillas_;
};

/// Gate-count ledger. `total_basic` counts one-qubit gates and XORs only;
/// Toffolis and other controlled gates are listed separately and must be
/// expanded before a final count.
struct SynthesisReport {
    std::size_t one_qubit = 0;
    std::size_t xor_count = 0;
    std::size_t toffoli = 0;
    std::size_t controlled_v = 0;
    std::size_t total_basic = 0;
    std::optional<double> achieved_distance;
    std::string method;

    bool fully_basic() const { return toffoli == 0 && controlled_v == 0; }
};

SynthesisReport count_basic(const Circuit &c);

/// Number of two-wire gates once every one-qubit gate is absorbed into a
/// neighbouring two-wire gate. Throws if the circuit has gates on three or
/// more wires, or one-qubit gates on a wire no two-wire gate touches.
std::size_t count_two_bit_gates(const Circuit &c);

}  // namespace gatesynth
