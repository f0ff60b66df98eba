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

#include "gatesynth/simulate.hpp"

namespace gatesynth {

/// operator_distance(a, b) <= eps.
bool equal_within(const DenseUnitary &a, const DenseUnitary &b, double eps);

/// The phase phi with a ~ e^{i phi} b, if ||a - e^{i phi} b|| <= eps.
/// phi is estimated as arg tr(b^dag a), which is exact whenever a is a phase
/// multiple of b; the returned phi lies in (-pi, pi].
std::optional<double> equal_up_to_global_phase(const DenseUnitary &a, const DenseUnitary &b, double eps);

/// A sign vector s with ||a - b diag(s)|| <= eps, if one exists.
std::optional<std::vector<int>> congruent_mod_phases(const DenseUnitary &a, const DenseUnitary &b, double eps);

/// True iff U is within 1e-10 of u00 * I.
bool is_scalar(const Unitary2 &u, double tol = 1e-10);

/// A nonscalar n-wire controlled gate needs at least n - 1 basic operations;
/// returns whether the fully expanded circuit respects that. Throws
/// DomainError for scalar U and std::invalid_argument if `c` still contains
/// non-basic gates.
bool audit_lower_bound(const Circuit &c, std::size_t n, const Unitary2 &u);

}  // namespace gatesynth
