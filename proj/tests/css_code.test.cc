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

#include "gtest/gtest.h"
#include "homprod/errors.h"
#include "test_util.h"

using namespace homprod;
using namespace homprod::testing;

TEST(css_code, steane_basis_is_self_orthogonal) {
    Basis b = steane_basis();
    ASSERT_EQ(b.dim(), 3);
    ASSERT_EQ(b.ambient_dim(), 7);
    for (size_t i = 0; i < 3; ++i) {
        ASSERT_EQ(b.vector(i).weight(), 4);
        for (size_t j = 0; j < 3; ++j) {
            ASSERT_FALSE(dot(b.vector(i), b.vector(j)));
        }
    }
}

TEST(css_code, steane_parameters) {
    BoundaryOperator d = boundary_from_checks(steane_basis(), BitMatrix::identity(3));
    CssCode c = code_from_complex(d);
    ASSERT_EQ(c.n, 7);
    ASSERT_EQ(c.k, 1);
    ASSERT_EQ(c.w, 4);
    ASSERT_EQ(stabilizer_weight(c), 4);
    auto [dz, dx] = naive_distance(d.matrix());
    ASSERT_EQ(dz, 3);
    ASSERT_EQ(dx, 3);
}

TEST(css_code, boundary_from_checks_matches_outer_products) {
    std::mt19937_64 rng(47);
    Basis b = steane_basis();
    for (size_t trial = 0; trial < 30; ++trial) {
        BitMatrix u = random_invertible(3, rng);
        BoundaryOperator d = boundary_from_checks(b, u);
        BitMatrix expected(7, 7);
        for (size_t i = 0; i < 3; ++i) {
            for (size_t j = 0; j < 3; ++j) {
                if (!u.get(i, j)) {
                    continue;
                }
                for (size_t p = 0; p < 7; ++p) {
                    for (size_t q = 0; q < 7; ++q) {
                        if (b.vector(i).get(p) && b.vector(j).get(q)) {
                            expected.flip(p, q);
                        }
                    }
                }
            }
        }
        ASSERT_EQ(d.matrix(), expected);
        ASSERT_EQ(d.hom_dim(), 1);
    }
}

TEST(css_code, code_from_complex_is_orthogonal) {
    std::mt19937_64 rng(53);
    for (size_t trial = 0; trial < 100; ++trial) {
        size_t m = 2 + rng() % 10;
        size_t h = m % 2 + 2 * (rng() % ((m - m % 2) / 2));
        BoundaryOperator d = random_boundary(m, h, rng);
        CssCode c = code_from_complex(d);
        ASSERT_TRUE((c.a_z * c.a_x.transposed()).is_zero());
        ASSERT_EQ(c.k, c.n - naive_rank(to_rows(c.a_z)) - naive_rank(to_rows(c.a_x)));
        ASSERT_EQ(c.k, d.hom_dim());
        ASSERT_EQ(c.a_x, d.matrix());
        ASSERT_EQ(c.a_z, d.matrix().transposed());
    }
}

TEST(css_code, from_checks_rejects_non_commuting) {
    ASSERT_THROW(CssCode::from_checks(BitMatrix::from_strings({"110"}), BitMatrix::from_strings({"100"})),
                 PreconditionError);
    CssCode c = CssCode::from_checks(BitMatrix::from_strings({"1100", "0011"}), BitMatrix::from_strings({"1111"}));
    ASSERT_EQ(c.k, 1);
    ASSERT_EQ(c.w, 4);
}

TEST(css_code, independent_checks) {
    BitMatrix m = BitMatrix::from_strings({"1100", "0110", "1010", "0001", "0001"});
    ASSERT_EQ(independent_checks(m), (std::vector<size_t>{0, 1, 3}));
}
