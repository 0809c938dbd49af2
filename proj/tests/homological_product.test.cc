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

#include "gtest/gtest.h"
#include "homprod/css_code.h"
#include "homprod/errors.h"
#include "test_util.h"

using namespace homprod;
using namespace homprod::testing;

namespace {

BoundaryOperator random_small(std::mt19937_64 &rng, size_t max_m) {
    size_t m = 1 + rng() % max_m;
    size_t h = m % 2 + 2 * (rng() % ((m - m % 2) / 2 + 1));
    return random_boundary(m, h, rng);
}

}  // namespace

TEST(homological_product, matches_naive_kron_sum) {
    std::mt19937_64 rng(59);
    for (size_t trial = 0; trial < 100; ++trial) {
        BoundaryOperator a = random_small(rng, 7);
        BoundaryOperator b = random_small(rng, 7);
        ProductComplex p = product(a, b);
        size_t n1 = a.dim(), n2 = b.dim();
        Rows left = naive_kron(to_rows(a.matrix()), n1, naive_identity(n2), n2);
        Rows right = naive_kron(naive_identity(n1), n1, to_rows(b.matrix()), n2);
        Rows expected(left.size());
        for (size_t i = 0; i < left.size(); ++i) {
            expected[i] = left[i] ^ right[i];
        }
        ASSERT_EQ(to_rows(p.partial.matrix()), expected);
    }
}

TEST(homological_product, structural_identities) {
    std::mt19937_64 rng(61);
    for (size_t trial = 0; trial < 200; ++trial) {
        BoundaryOperator a = random_small(rng, 8);
        BoundaryOperator b = random_small(rng, 8);
        ProductComplex p = product(a, b);
        ASSERT_TRUE((p.partial.matrix() * p.partial.matrix()).is_zero());
        ASSERT_EQ(p.partial.hom_dim(), a.hom_dim() * b.hom_dim());
        size_t w1 = code_from_complex(a).w, w2 = code_from_complex(b).w;
        ASSERT_LE(code_from_complex(p.partial).w, w1 + w2);
        KunnethReport rep = kunneth_report(p);
        ASSERT_TRUE(rep.dimension_identity);
        if (rep.subspace_identity) {
            ASSERT_TRUE(*rep.subspace_identity);
            ASSERT_EQ(rep.dim_ker_partial, rep.dim_cycles_sum);
        }
    }
}

TEST(homological_product, logical_basis_spans_homology) {
    std::mt19937_64 rng(67);
    for (size_t trial = 0; trial < 50; ++trial) {
        BoundaryOperator a = random_boundary(5, 1 + 2 * (rng() % 2), rng);
        BoundaryOperator b = random_boundary(4, 2 * (1 + rng() % 2), rng);
        ProductComplex p = product(a, b);
        Basis logical = logical_basis(p);
        ASSERT_EQ(logical.dim(), p.partial.hom_dim());
        // Each representative is a cycle, and together with im partial they are independent.
        SpanBuilder sb(p.partial.dim());
        Basis im = image_basis(p.partial.matrix());
        for (size_t i = 0; i < im.dim(); ++i) {
            sb.insert(im.vector(i));
        }
        for (size_t i = 0; i < logical.dim(); ++i) {
            ASSERT_TRUE((p.partial.matrix() * logical.vector(i)).is_zero());
            ASSERT_TRUE(sb.insert(logical.vector(i)));
        }
    }
}

TEST(homological_product, no_homology_throws) {
    std::mt19937_64 rng(71);
    ProductComplex p = product(random_boundary(4, 0, rng), random_boundary(3, 1, rng));
    ASSERT_EQ(p.partial.hom_dim(), 0);
    ASSERT_THROW(logical_basis(p), NoLogicalsError);
}

TEST(homological_product, reshape_round_trip) {
    BitVector v = BitVector::from_string("100001");
    BitMatrix m = as_matrix(v, 2, 3);
    ASSERT_EQ(m, BitMatrix::from_strings({"100", "001"}));
    ASSERT_EQ(as_vector(m), v);
}

TEST(homological_product, steane_squared_has_one_logical) {
    BoundaryOperator s = boundary_from_checks(steane_basis(), BitMatrix::identity(3));
    ProductComplex p = product(s, s);
    CssCode c = code_from_complex(p.partial);
    ASSERT_EQ(c.n, 49);
    ASSERT_EQ(c.k, 1);
    ASSERT_LE(c.w, 8);
}
