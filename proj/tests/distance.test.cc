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

#include "homprod/distance.h"

#include "gtest/gtest.h"
#include "homprod/css_code.h"
#include "homprod/errors.h"
#include "homprod/homological_product.h"
#include "test_util.h"

using namespace homprod;
using namespace homprod::testing;

namespace {

BoundaryOperator random_small(std::mt19937_64 &rng, size_t min_m, size_t max_m, bool need_homology = true) {
    while (true) {
        size_t m = min_m + rng() % (max_m - min_m + 1);
        size_t h = m % 2 + 2 * (rng() % ((m - m % 2) / 2 + 1));
        if (h > 0 || !need_homology) {
            return random_boundary(m, h, rng);
        }
    }
}

bool is_nontrivial_cycle(const BitMatrix &delta, const BitVector &x) {
    if (!(delta * x).is_zero()) {
        return false;
    }
    return !in_span(x, image_basis(delta));
}

}  // namespace

TEST(distance, matches_exhaustive_enumeration) {
    std::mt19937_64 rng(73);
    for (size_t trial = 0; trial < 300; ++trial) {
        BoundaryOperator d = random_small(rng, 1, 14);
        DistanceResult r = distance(d);
        auto [dz, dx] = naive_distance(d.matrix());
        ASSERT_EQ(r.d_z, dz) << d.matrix().str();
        ASSERT_EQ(r.d_x, dx) << d.matrix().str();
        ASSERT_EQ(r.witness_z.weight(), dz);
        ASSERT_EQ(r.witness_x.weight(), dx);
        ASSERT_TRUE(is_nontrivial_cycle(d.matrix(), r.witness_z));
        ASSERT_TRUE(is_nontrivial_cycle(d.matrix().transposed(), r.witness_x));
    }
}

TEST(distance, products_match_exhaustive_enumeration) {
    std::mt19937_64 rng(79);
    for (size_t trial = 0; trial < 40; ++trial) {
        ProductComplex p = product(random_small(rng, 2, 4), random_small(rng, 2, 4));
        DistanceResult r = distance(p.partial);
        auto [dz, dx] = naive_distance(p.partial.matrix());
        ASSERT_EQ(r.d_z, dz);
        ASSERT_EQ(r.d_x, dx);
    }
}

TEST(distance, parallel_result_is_identical) {
    std::mt19937_64 rng(83);
    for (size_t trial = 0; trial < 30; ++trial) {
        BoundaryOperator d = random_small(rng, 8, 20);
        DistanceResult one = distance(d);
        for (size_t threads : {2, 3, 8}) {
            DistanceResult many = distance_parallel(d, threads);
            ASSERT_EQ(many.d_z, one.d_z);
            ASSERT_EQ(many.d_x, one.d_x);
            ASSERT_EQ(many.witness_z, one.witness_z);
            ASSERT_EQ(many.witness_x, one.witness_x);
        }
    }
}

TEST(distance, steane_and_steane_squared) {
    BoundaryOperator s = boundary_from_checks(steane_basis(), BitMatrix::identity(3));
    DistanceResult r = distance(s);
    ASSERT_EQ(r.d_z, 3);
    ASSERT_EQ(r.d_x, 3);
    DistanceResult sq = distance_parallel(product(s, s).partial, 2);
    ASSERT_EQ(sq.d_z, 7);
    ASSERT_EQ(sq.d_x, 7);
}

TEST(distance, asymmetric_u_gives_nine) {
    BoundaryOperator s = boundary_from_checks(steane_basis(), BitMatrix::identity(3));
    BoundaryOperator t = boundary_from_checks(steane_basis(), BitMatrix::from_strings({"110", "010", "001"}));
    DistanceResult r = distance_parallel(product(t, s).partial, 2);
    ASSERT_EQ(r.d_z, 9);
    ASSERT_EQ(r.d_x, 9);
}

TEST(distance, upper_bound_search) {
    std::mt19937_64 rng(89);
    for (size_t trial = 0; trial < 100; ++trial) {
        BoundaryOperator d = random_small(rng, 2, 14);
        auto [dz, dx] = naive_distance(d.matrix());
        (void)dx;
        auto below = distance_upper_bound(d, dz - 1);
        ASSERT_FALSE(below.has_value());
        auto at = distance_upper_bound(d, dz);
        ASSERT_TRUE(at.has_value());
        ASSERT_LE(at->weight(), dz);
        ASSERT_TRUE(is_nontrivial_cycle(d.matrix(), *at));
    }
}

TEST(distance, min_nonzero_weight_matches_naive) {
    std::mt19937_64 rng(97);
    for (size_t trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng() % 14;
        BitMatrix gen = BitMatrix::uniform_random(1 + rng() % n, n, rng);
        if (naive_rank(to_rows(gen)) == 0) {
            continue;
        }
        Basis span = row_space_basis(gen);
        Rows rows = to_rows(gen);
        size_t best = SIZE_MAX;
        for (uint64_t c = 1; c < (uint64_t{1} << rows.size()); ++c) {
            uint64_t v = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                if ((c >> i) & 1) {
                    v ^= rows[i];
                }
            }
            if (v) {
                best = std::min<size_t>(best, std::popcount(v));
            }
        }
        SectorSearch s = min_nonzero_weight(span);
        ASSERT_EQ(s.weight, best);
        ASSERT_EQ(s.witness.weight(), best);
        ASSERT_TRUE(in_span(s.witness, span));
    }
    ASSERT_THROW(min_nonzero_weight(Basis(5)), InvalidParameter);
}

TEST(distance, budget_is_enforced) {
    std::mt19937_64 rng(101);
    BoundaryOperator d = random_boundary(40, 10, rng);
    SearchOptions tiny;
    tiny.budget = 16;
    ASSERT_THROW(distance(d, tiny), ResourceError);
    // Huge homology must be refused up front rather than exhausting memory.
    ASSERT_THROW(distance(BoundaryOperator(BitMatrix(60, 60))), ResourceError);
}

TEST(distance, no_homology_is_rejected) {
    std::mt19937_64 rng(103);
    ASSERT_THROW(distance(random_boundary(6, 0, rng)), NoLogicalsError);
}

TEST(distance, css_distance_on_plain_code) {
    // The [[4,2,2]] code.
    CssCode c = CssCode::from_checks(BitMatrix::from_strings({"1111"}), BitMatrix::from_strings({"1111"}));
    DistanceResult r = css_distance(c);
    ASSERT_EQ(r.d_z, 2);
    ASSERT_EQ(r.d_x, 2);
}
