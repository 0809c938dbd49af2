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

#ifndef HOMPROD_HOMOLOGICAL_PRODUCT_H
#define HOMPROD_HOMOLOGICAL_PRODUCT_H

#include <optional>

#include "homprod/chain_complex.h"

namespace homprod {

/// partial = delta_1 (x) I + I (x) delta_2 on the product basis i (x) j, index i * n2 + j.
struct ProductComplex {
    BoundaryOperator partial;
    BoundaryOperator first;
    BoundaryOperator second;
};

ProductComplex product(const BoundaryOperator &d1, const BoundaryOperator &d2);

/// Reshapes a product-space vector into an n1 x n2 matrix (row-major), and back.
BitMatrix as_matrix(const BitVector &v, size_t n1, size_t n2);
BitVector as_vector(const BitMatrix &m);

struct KunnethReport {
    size_t h_partial;
    size_t h_first;
    size_t h_second;
    bool dimension_identity;
    /// Filled in only when n1 * n2 <= the cap.
    std::optional<size_t> dim_ker_partial;
    std::optional<size_t> dim_cycles_sum;
    std::optional<bool> subspace_identity;
};

/// H(partial) against H(delta_1) H(delta_2), and ker partial against ker delta_1 (x) ker delta_2 + im partial.
KunnethReport kunneth_report(const ProductComplex &p, size_t cap = 400);

/// Representatives h_1^i (x) h_2^j of a basis of ker partial / im partial.
/// Throws NoLogicalsError when either factor has no homology.
Basis logical_basis(const ProductComplex &p);

/// Greedy complement of im delta inside ker delta (representatives of the homology classes).
Basis homology_representatives(const BoundaryOperator &d);

}  // namespace homprod

#endif
