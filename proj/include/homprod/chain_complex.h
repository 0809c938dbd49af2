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

#ifndef HOMPROD_CHAIN_COMPLEX_H
#define HOMPROD_CHAIN_COMPLEX_H

#include <random>
#include <vector>

#include "homprod/bit_matrix.h"

namespace homprod {

/// Square matrix delta over GF(2) with delta * delta = 0 (a single-sector chain complex).
class BoundaryOperator {
   public:
    /// Validates squareness and delta^2 = 0; throws PreconditionError otherwise.
    explicit BoundaryOperator(BitMatrix delta);

    const BitMatrix &matrix() const {
        return delta_;
    }
    size_t dim() const {
        return delta_.rows();
    }
    size_t rank() const {
        return rank_;
    }
    /// dim ker - dim im = dim - 2 rank.
    size_t hom_dim() const {
        return hom_dim_;
    }
    BoundaryOperator transposed() const;

    bool operator==(const BoundaryOperator &other) const {
        return delta_ == other.delta_;
    }

   private:
    BitMatrix delta_;
    size_t rank_;
    size_t hom_dim_;
};

/// Blocks of sizes (h, l, l) with an identity in block position (2, 3).
BoundaryOperator canonical_boundary(size_t h, size_t l);

/// Uniform over all m x m boundary operators with homological dimension h: U delta_0 U^-1, U uniform in GL(m).
BoundaryOperator random_boundary(size_t m, size_t h, std::mt19937_64 &rng);

size_t homological_dimension(const BoundaryOperator &d);

/// An invertible U with delta = U delta_0 U^-1. Columns are: a complement of im delta inside ker delta, the
/// canonical image basis, then preimages of the image basis vectors.
BitMatrix canonical_witness(const BoundaryOperator &d);

/// ker delta has no nonzero vector supported on coordinates [m_prime, M).
bool is_good(const BoundaryOperator &d, size_t m_prime);

/// The operator induced by W delta on V / S, where V = span(e_0..e_{m'-1}) and S = W delta(span(e_{m'}..e_{M-1})).
struct ReducedOperator {
    BoundaryOperator delta_prime;
    /// Coordinates of V whose unit vectors represent the quotient basis (lowest-index first).
    std::vector<size_t> coset_lift;
    /// Reduced echelon basis of S inside V (length-m' vectors).
    Basis s_gt_basis;
    size_t m_prime;

    /// Coordinates of the coset x + S in the quotient basis, for x in V.
    BitVector project(const BitVector &x) const;
    /// The representative sum_i y_i e_{coset_lift[i]}.
    BitVector lift(const BitVector &y) const;
    /// K x m' matrix of the projection V -> V'.
    BitMatrix quotient_map() const;
};

/// Throws PreconditionError unless is_good(d, m_prime).
ReducedOperator reduced_boundary(const BoundaryOperator &d, size_t m_prime);

}  // namespace homprod

#endif
