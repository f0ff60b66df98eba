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

#include <stdexcept>
#include <string>

namespace gatesynth {

/// Raised when textual or JSON input cannot be parsed into a well-formed
/// object (bad syntax, non-finite numbers, non-unitary matrices, bad wires).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised when a synthesizer is handed a target outside its domain, e.g. a
/// non-special-unitary payload for a routine that needs det = 1.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace gatesynth
