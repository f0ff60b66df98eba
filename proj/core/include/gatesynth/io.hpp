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

#include <filesystem>
#include <string>
#include <string_view>

#include "gatesynth/simulate.hpp"

namespace gatesynth {

/// Shortest decimal text that parses back to the same double (at most 17
/// significant digits).
std::string format_real(double x);

/// Circuit text format:
///
///   # comment
///   qubits <n>
///   ancilla <wire> init=0 restored=<true|false>
///   gate targets=<t> controls=<c1,c2,...|-> u=<X|Y|Z|RY(t)|RZ(a)|PH(d)|json>
///
/// Payloads are written by name only when the name regenerates the exact
/// same matrix, so format -> parse reproduces every entry bit for bit.
std::string format_circuit(const Circuit &c);

/// Throws ParseError with the offending line number.
Circuit parse_circuit(std::string_view text);

Circuit read_circuit_file(const std::filesystem::path &path);
void write_circuit_file(const std::filesystem::path &path, const Circuit &c);

/// {"rows": [[[re,im],[re,im]],[[re,im],[re,im]]]}
std::string unitary2_to_json(const Unitary2 &u);
Unitary2 unitary2_from_json(std::string_view text);

/// {"n": k, "rows": [[[re,im], ...], ...]} with 2^k rows.
std::string dense_to_json(const DenseUnitary &u);
DenseUnitary dense_from_json(std::string_view text);

/// Single-line JSON object.
std::string report_to_json(const SynthesisReport &r);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace gatesynth
