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

#include "gatesynth/peephole.hpp"

#include <algorithm>
#include <optional>

namespace gatesynth {

namespace {

bool shares_wire(const Gate &a, const Gate &b) {
    for (Wire w : b.wires()) {
        if (a.touches(w)) {
            return true;
        }
    }
    return false;
}

// One sweep; returns true if anything changed.
bool merge_pass(const Circuit &in, std::vector<Gate> &out_gates, double tol) {
    std::vector<std::optional<Gate>> slots;
    slots.reserve(in.size());
    std::vector<std::vector<std::size_t>> stacks(in.num_wires());
    bool changed = false;

    auto remove = [&](std::size_t k) {
        for (Wire w : slots[k]->wires()) {
            stacks[w].pop_back();
        }
        slots[k].reset();
    };

    for (const Gate &g : in.gates()) {
        if (g.payload().is_identity(tol)) {
            changed = true;
            continue;
        }
        const std::vector<Wire> wires = g.wires();
        auto &tstack = stacks[g.target()];
        if (!tstack.empty()) {
            const std::size_t k = tstack.back();
            bool on_top = slots[k]->same_placement(g);
            for (Wire w : wires) {
                on_top = on_top && stacks[w].back() == k;
            }
            if (on_top) {
                changed = true;
                Unitary2 product = g.payload() * slots[k]->payload();
                if (product.is_identity(tol)) {
                    remove(k);
                } else {
                    slots[k] = slots[k]->with_payload(std::move(product));
                }
                continue;
            }
        }
        for (Wire w : wires) {
            stacks[w].push_back(slots.size());
        }
        slots.emplace_back(g);
    }
    out_gates.clear();
    for (auto &s : slots) {
        if (s) {
            out_gates.push_back(std::move(*s));
        }
    }
    return changed;
}

}  // namespace

Circuit merge_adjacent(const Circuit &c, double tol) {
    Circuit cur = c;
    std::vector<Gate> gates;
    while (merge_pass(cur, gates, tol)) {
        cur = cur.with_gates(std::move(gates));
        gates = {};
    }
    return cur;
}

Circuit commute_window(const Circuit &c) {
    std::vector<Gate> out;
    out.reserve(c.size());
    for (const Gate &g : c.gates()) {
        // Latest earlier gate that shares a wire with g.
        std::size_t k = out.size();
        while (k > 0 && !shares_wire(out[k - 1], g)) {
            --k;
        }
        if (k > 0 && k < out.size() && out[k - 1].same_placement(g)) {
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(k), g);
        } else {
            out.push_back(g);
        }
    }
    return c.with_gates(std::move(out));
}

}  // namespace gatesynth
