// Copyright 2026 The homprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMPROD_ERRORS_H
#define HOMPROD_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homprod {

/// Operand shapes do not line up (vector length, matrix sizes, qubit counts).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric argument is outside the domain of the operation.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A structural precondition on an input object failed (not self-orthogonal, singular, not good, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested enumeration exceeds the configured work budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Distance queries need at least one logical qubit.
struct NoLogicalsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {
    }
    size_t line;
};

}  // namespace homprod

#endif
