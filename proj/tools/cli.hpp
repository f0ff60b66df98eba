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

#include <iosfwd>
#include <string>
#include <vector>

#include "gatesynth/circuit.hpp"

namespace gatesynth::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kMalformedInput = 2,
    kIncompatible = 3,
};

/// Runs one command line (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Plain-text circuit picture: one row per wire, one column per gate.
std::string draw_circuit(const Circuit &c);

}  // namespace gatesynth::cli
