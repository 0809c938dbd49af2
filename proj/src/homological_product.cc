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

#include "homprod/homological_product.h"

#include "homprod/errors.h"

namespace homprod {

ProductComplex product(const BoundaryOperator &d1, const BoundaryOperator &d2) {
    BitMatrix partial = kron(d1.matrix(), BitMatrix::identity(d2.dim()));
    partial ^= kron(BitMatrix::identity(d1.dim()), d2.matrix());
    return ProductComplex{BoundaryOperator(std::move(partial)), d1, d2};
}

BitMatrix as_matrix(const BitVector &v, size_t n1, size_t n2) {
    if (v.size() != n1 * n2) {
        throw DimensionError("vector length is not n1 * n2");
    }
    BitMatrix m(n1, n2);
    for (size_t i : v.support()) {
        m.set(i / n2, i % n2);
    }
    return m;
}

BitVector as_vector(const BitMatrix &m) {
    BitVector v(m.rows() * m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c : m.row(r).support()) {
            v.set(r * m.cols() + c);
        }
    }
    return v;
}

KunnethReport kunneth_report(const ProductComplex &p, size_t cap) {
    KunnethReport report{};
    report.h_partial = p.partial.hom_dim();
    report.h_first = p.first.hom_dim();
    report.h_second = p.second.hom_dim();
    report.dimension_identity = report.h_partial == report.h_first * report.h_second;

    size_t n = p.partial.dim();
    if (n > cap) {
        return report;
    }
    Basis ker = kernel_basis(p.partial.matrix());
    Basis ker1 = kernel_basis(p.first.matrix());
    Basis ker2 = kernel_basis(p.second.matrix());
    Basis im = image_basis(p.partial.matrix());

    SpanBuilder sum(n);
    for (size_t i = 0; i < ker1.dim(); ++i) {
        for (size_t j = 0; j < ker2.dim(); ++j) {
            sum.insert(kron(ker1.vector(i), ker2.vector(j)));
        }
    }
    for (size_t i = 0; i < im.dim(); ++i) {
        sum.insert(im.vector(i));
    }
    bool contained = true;
    for (size_t i = 0; i < ker.dim(); ++i) {
        contained = contained && sum.contains(ker.vector(i));
    }
    report.dim_ker_partial = ker.dim();
    report.dim_cycles_sum = sum.dim();
    report.subspace_identity = contained && sum.dim() == ker.dim();
    return report;
}

Basis homology_representatives(const BoundaryOperator &d) {
    return complement_in(image_basis(d.matrix()), kernel_basis(d.matrix()));
}

Basis logical_basis(const ProductComplex &p) {
    if (p.first.hom_dim() == 0 || p.second.hom_dim() == 0) {
        throw NoLogicalsError("a factor has trivial homology, so the product has no logical qubits");
    }
    Basis h1 = homology_representatives(p.first);
    Basis h2 = homology_representatives(p.second);
    BitMatrix reps(0, p.partial.dim());
    for (size_t i = 0; i < h1.dim(); ++i) {
        for (size_t j = 0; j < h2.dim(); ++j) {
            reps.append_row(kron(h1.vector(i), h2.vector(j)));
        }
    }
    return Basis::from_rows(std::move(reps));
}

}  // namespace homprod
