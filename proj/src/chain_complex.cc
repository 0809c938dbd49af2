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

#include "homprod/chain_complex.h"

#include "homprod/errors.h"

namespace homprod {

BoundaryOperator::BoundaryOperator(BitMatrix delta) : delta_(std::move(delta)) {
    if (delta_.rows() != delta_.cols()) {
        throw PreconditionError("boundary operator must be square");
    }
    if (!(delta_ * delta_).is_zero()) {
        throw PreconditionError("boundary operator must satisfy delta^2 = 0");
    }
    rank_ = homprod::rank(delta_);
    hom_dim_ = delta_.rows() - 2 * rank_;
}

BoundaryOperator BoundaryOperator::transposed() const {
    return BoundaryOperator(delta_.transposed());
}

BoundaryOperator canonical_boundary(size_t h, size_t l) {
    BitMatrix m(h + 2 * l, h + 2 * l);
    for (size_t j = 0; j < l; ++j) {
        m.set(h + j, h + l + j);
    }
    return BoundaryOperator(std::move(m));
}

BoundaryOperator random_boundary(size_t m, size_t h, std::mt19937_64 &rng) {
    if (h > m || (m - h) % 2 != 0) {
        throw InvalidParameter("random_boundary needs m - h even and non-negative");
    }
    BitMatrix u = random_invertible(m, rng);
    BitMatrix u_inv = *inverse(u);
    return BoundaryOperator(u * canonical_boundary(h, (m - h) / 2).matrix() * u_inv);
}

size_t homological_dimension(const BoundaryOperator &d) {
    return d.hom_dim();
}

BitMatrix canonical_witness(const BoundaryOperator &d) {
    const BitMatrix &delta = d.matrix();
    size_t m = d.dim();
    Basis ker = kernel_basis(delta);
    Basis im = image_basis(delta);
    Basis homology = complement_in(im, ker);

    std::vector<BitVector> columns;
    for (size_t i = 0; i < homology.dim(); ++i) {
        columns.push_back(homology.vector(i));
    }
    for (size_t i = 0; i < im.dim(); ++i) {
        columns.push_back(im.vector(i));
    }
    for (size_t i = 0; i < im.dim(); ++i) {
        columns.push_back(*solve(delta, im.vector(i)));
    }
    return BitMatrix::from_columns(columns, m);
}

bool is_good(const BoundaryOperator &d, size_t m_prime) {
    if (m_prime > d.dim()) {
        throw InvalidParameter("m_prime exceeds the operator dimension");
    }
    Basis ker = kernel_basis(d.matrix());
    return rank(ker.vectors().submatrix(0, 0, ker.dim(), m_prime)) == ker.dim();
}

BitVector ReducedOperator::project(const BitVector &x) const {
    if (x.size() != m_prime) {
        throw DimensionError("vector is not in V");
    }
    SpanBuilder span(m_prime);
    for (size_t i = 0; i < s_gt_basis.dim(); ++i) {
        span.insert(s_gt_basis.vector(i));
    }
    BitVector r = span.reduce(x);
    BitVector y(coset_lift.size());
    for (size_t i = 0; i < coset_lift.size(); ++i) {
        if (r.get(coset_lift[i])) {
            y.set(i);
        }
    }
    return y;
}

BitVector ReducedOperator::lift(const BitVector &y) const {
    if (y.size() != coset_lift.size()) {
        throw DimensionError("vector is not in V'");
    }
    BitVector x(m_prime);
    for (size_t i : y.support()) {
        x.set(coset_lift[i]);
    }
    return x;
}

BitMatrix ReducedOperator::quotient_map() const {
    std::vector<BitVector> cols;
    for (size_t j = 0; j < m_prime; ++j) {
        cols.push_back(project(BitVector::unit(m_prime, j)));
    }
    return BitMatrix::from_columns(cols, coset_lift.size());
}

ReducedOperator reduced_boundary(const BoundaryOperator &d, size_t m_prime) {
    if (!is_good(d, m_prime)) {
        throw PreconditionError("reduced_boundary needs a good boundary operator");
    }
    size_t m = d.dim();
    const BitMatrix &delta = d.matrix();

    // S = W delta(V^>): the top m' entries of columns m'..m-1.
    BitMatrix s_rows = delta.submatrix(0, m_prime, m_prime, m - m_prime).transposed();
    EchelonForm e = reduced_row_echelon(s_rows);
    Basis s_basis = Basis::from_rows(e.reduced.submatrix(0, 0, e.pivots.size(), m_prime));

    std::vector<bool> is_pivot(m_prime, false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<size_t> lift;
    for (size_t j = 0; j < m_prime; ++j) {
        if (!is_pivot[j]) {
            lift.push_back(j);
        }
    }

    ReducedOperator out{BoundaryOperator(BitMatrix(lift.size(), lift.size())), lift, s_basis, m_prime};
    BitMatrix reduced(lift.size(), lift.size());
    for (size_t c = 0; c < lift.size(); ++c) {
        BitVector image = delta.col(lift[c]);
        BitVector top(m_prime);
        for (size_t i = 0; i < m_prime; ++i) {
            if (image.get(i)) {
                top.set(i);
            }
        }
        BitVector y = out.project(top);
        for (size_t r : y.support()) {
            reduced.set(r, c);
        }
    }
    out.delta_prime = BoundaryOperator(std::move(reduced));
    return out;
}

}  // namespace homprod
