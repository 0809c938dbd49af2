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

#include "homprod/css_code.h"

#include <algorithm>

#include "homprod/errors.h"

namespace homprod {

CssCode CssCode::from_checks(BitMatrix a_z, BitMatrix a_x) {
    if (a_z.cols() != a_x.cols()) {
        throw DimensionError("check matrices act on different qubit counts");
    }
    if (!(a_z * a_x.transposed()).is_zero()) {
        throw PreconditionError("Z and X checks do not commute");
    }
    CssCode c;
    c.n = a_z.cols();
    c.k = c.n - rank(a_z) - rank(a_x);
    c.a_z = std::move(a_z);
    c.a_x = std::move(a_x);
    c.w = stabilizer_weight(c);
    return c;
}

CssCode code_from_complex(const BoundaryOperator &d) {
    return CssCode::from_checks(d.matrix().transposed(), d.matrix());
}

BoundaryOperator boundary_from_checks(const Basis &basis, const BitMatrix &u) {
    size_t m = basis.dim();
    if (u.rows() != m || u.cols() != m) {
        throw DimensionError("U must be m x m for an m-vector basis");
    }
    const BitMatrix &rows = basis.vectors();
    if (!(rows * rows.transposed()).is_zero()) {
        throw PreconditionError("check basis is not self-orthogonal");
    }
    if (!is_invertible(u)) {
        throw PreconditionError("U is singular");
    }
    BitMatrix a = rows.transposed();
    return BoundaryOperator(a * u * rows);
}

size_t stabilizer_weight(const CssCode &c) {
    return std::max({c.a_z.max_row_weight(), c.a_z.max_col_weight(), c.a_x.max_row_weight(),
                     c.a_x.max_col_weight()});
}

std::vector<size_t> independent_checks(const BitMatrix &checks) {
    SpanBuilder span(checks.cols());
    std::vector<size_t> out;
    for (size_t r = 0; r < checks.rows(); ++r) {
        if (span.insert(checks.row(r))) {
            out.push_back(r);
        }
    }
    return out;
}

Basis steane_basis() {
    // Rows of the 7 x 3 table transposed: each string below is one column a^i.
    return Basis::from_rows(BitMatrix::from_strings({
        "1000111",
        "0101011",
        "0011101",
    }));
}

}  // namespace homprod
