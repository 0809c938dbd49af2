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

#ifndef HOMPROD_IO_H
#define HOMPROD_IO_H

#include <string>
#include <string_view>

#include "homprod/bit_matrix.h"
#include "homprod/chain_complex.h"
#include "homprod/circuit.h"
#include "homprod/css_code.h"
#include "homprod/gf4.h"

namespace homprod {

/// Text formats. Lines starting with '#' and blank lines are ignored by every parser; errors are ParseError with
/// the 1-based line number.
///
///   GF2 <rows> <cols>            followed by <rows> lines of <cols> characters from {0, 1}
///   GF4 <rows> <cols>            followed by <rows> lines over {0, 1, w, W} (w = omega, W = omega^2)
///   CSS n=<n>                    followed by the Z-check matrix and then the X-check matrix, both GF2 blocks
///   QUBITS <n>                   then "INIT q <tag> [partner]" for every non-data qubit, then "CNOT c t" lines

std::string format_matrix(const BitMatrix &m);
BitMatrix parse_matrix(std::string_view text);

/// A GF2 block preceded by "# boundary H=<h>".
std::string format_boundary(const BoundaryOperator &d);
/// Parses a GF2 block and validates it as a boundary operator (PreconditionError if delta^2 != 0).
BoundaryOperator parse_boundary(std::string_view text);

std::string format_gf4_matrix(const Gf4Matrix &m);
Gf4Matrix parse_gf4_matrix(std::string_view text);

std::string format_css(const CssCode &c);
CssCode parse_css(std::string_view text);

std::string format_circuit(const EncodingCircuit &c);
EncodingCircuit parse_circuit(std::string_view text);

/// Whole-file helpers; throw std::runtime_error naming the path on I/O failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view contents);

}  // namespace homprod

#endif
