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

#ifndef HOMPROD_CSS_CODE_H
#define HOMPROD_CSS_CODE_H

#include <optional>
#include <vector>

#include "homprod/bit_matrix.h"
#include "homprod/chain_complex.h"

namespace homprod {

/// A CSS code given by Z-check rows `a_z` and X-check rows `a_x` on n qubits. Rows may be dependent.
struct CssCode {
    size_t n = 0;
    BitMatrix a_z;
    BitMatrix a_x;
    size_t k = 0;
    size_t w = 0;
    std::optional<size_t> d_z;
    std::optional<size_t> d_x;

    /// Checks a_z a_x^T = 0 and fills in k and w. Throws PreconditionError on failure.
    static CssCode from_checks(BitMatrix a_z, BitMatrix a_x);

    size_t z_check_count() const {
        return a_z.rows();
    }
    size_t x_check_count() const {
        return a_x.rows();
    }
};

/// A_X = delta, A_Z = delta^T.
CssCode code_from_complex(const BoundaryOperator &d);

/// delta = sum_ij U_ij a^i (a^j)^T = A U A^T with the basis vectors as the columns of A.
BoundaryOperator boundary_from_checks(const Basis &basis, const BitMatrix &u);

/// Max row and column weight over both check matrices.
size_t stabilizer_weight(const CssCode &c);

/// Indices of a maximal independent subset of rows, lowest index first.
std::vector<size_t> independent_checks(const BitMatrix &checks);

/// The seven-qubit Steane code basis a^1, a^2, a^3 (columns of the 7 x 3 generator table).
Basis steane_basis();

}  // namespace homprod

#endif
