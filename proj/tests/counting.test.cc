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

#include "homprod/counting.h"

#include <set>

#include "gtest/gtest.h"
#include "homprod/errors.h"
#include "test_util.h"

using namespace homprod;
using namespace homprod::testing;

namespace {

// Column j of row r of an n x n matrix packed row-major into one integer: bit r * n + j.
Rows unpack(uint64_t code, size_t rows, size_t cols) {
    Rows out(rows);
    for (size_t r = 0; r < rows; ++r) {
        out[r] = (code >> (r * cols)) & ((uint64_t{1} << cols) - 1);
    }
    return out;
}

std::vector<uint64_t> rank_census(size_t a, size_t b) {
    std::vector<uint64_t> out(std::min(a, b) + 1, 0);
    for (uint64_t code = 0; code < (uint64_t{1} << (a * b)); ++code) {
        out[naive_rank(unpack(code, a, b))]++;
    }
    return out;
}

bool naive_good(const BoundaryOperator &d, size_t m_prime) {
    Rows rows = to_rows(d.matrix());
    for (uint64_t tail = 1; tail < (uint64_t{1} << (d.dim() - m_prime)); ++tail) {
        if (naive_apply(rows, tail << m_prime) == 0) {
            return false;
        }
    }
    return true;
}

/// Every cycle of delta_1 (x) I + I (x) delta_2, as an M x M matrix (row-major reshape).
std::vector<Rows> product_cycles(const BoundaryOperator &d1, const BoundaryOperator &d2) {
    size_t m = d1.dim();
    Rows partial = naive_kron(to_rows(d1.matrix()), m, naive_identity(m), m);
    Rows right = naive_kron(naive_identity(m), m, to_rows(d2.matrix()), m);
    for (size_t i = 0; i < partial.size(); ++i) {
        partial[i] ^= right[i];
    }
    std::vector<Rows> out;
    for (uint64_t x = 0; x < (uint64_t{1} << (m * m)); ++x) {
        if (naive_apply(partial, x) == 0) {
            out.push_back(unpack(x, m, m));
        }
    }
    return out;
}

}  // namespace

TEST(counting, rank_formula_matches_enumeration) {
    for (size_t a = 0; a <= 4; ++a) {
        for (size_t b = 0; b <= 4; ++b) {
            auto census = rank_census(a, b);
            for (size_t r = 0; r <= 4; ++r) {
                uint64_t expected = r < census.size() ? census[r] : 0;
                ASSERT_EQ(count_rank_matrices(a, b, r).value, expected) << a << " " << b << " " << r;
            }
        }
    }
    ASSERT_EQ(count_rank_matrices(3, 3, 3).value, 168);
}

TEST(counting, rank_formula_is_exact_beyond_64_bits) {
    // |GL(40, 2)| = prod_{i<40} (2^40 - 2^i) computed independently.
    BigInt expected = 1;
    for (size_t i = 0; i < 40; ++i) {
        expected *= (BigInt(1) << 40) - (BigInt(1) << i);
    }
    ASSERT_EQ(count_rank_matrices(40, 40, 40).value, expected);
}

TEST(counting, extension_formula_matches_enumeration) {
    std::mt19937_64 rng(127);
    for (size_t cap = 1; cap <= 4; ++cap) {
        for (size_t a = 0; a <= cap; ++a) {
            for (size_t r = 0; r <= a; ++r) {
                // A random a x a matrix of rank exactly r.
                Rows x;
                do {
                    x = unpack(rng(), a, a);
                } while (naive_rank(x) != r);
                std::vector<uint64_t> census(cap + 1, 0);
                uint64_t free_bits = cap * cap - a * a;
                for (uint64_t fill = 0; fill < (uint64_t{1} << free_bits); ++fill) {
                    Rows y(cap, 0);
                    uint64_t bits = fill;
                    for (size_t i = 0; i < cap; ++i) {
                        for (size_t j = 0; j < cap; ++j) {
                            bool v;
                            if (i < a && j < a) {
                                v = (x[i] >> j) & 1;
                            } else {
                                v = bits & 1;
                                bits >>= 1;
                            }
                            y[i] |= uint64_t(v) << j;
                        }
                    }
                    census[naive_rank(y)]++;
                }
                for (size_t big_r = r; big_r <= cap; ++big_r) {
                    ASSERT_EQ(count_extensions(a, r, cap, big_r).value, census[big_r])
                        << a << " " << r << " " << cap << " " << big_r;
                }
            }
        }
    }
    ASSERT_EQ(count_extensions(1, 1, 2, 2).value, 4);
    ASSERT_THROW(count_extensions(3, 1, 2, 2), InvalidParameter);
    ASSERT_THROW(count_extensions(2, 3, 4, 4), InvalidParameter);
}

TEST(counting, kernel_formula_matches_enumeration) {
    std::mt19937_64 rng(131);
    for (size_t l = 0; l <= 2; ++l) {
        for (size_t h = 0; 2 * l + h <= 4; ++h) {
            size_t m = 2 * l + h;
            if (m == 0) {
                continue;
            }
            BoundaryOperator d1 = random_boundary(m, h, rng);
            BoundaryOperator d2 = random_boundary(m, h, rng);
            std::vector<uint64_t> census(m + 1, 0);
            for (const auto &cycle : product_cycles(d1, d2)) {
                census[naive_rank(cycle)]++;
            }
            for (size_t r = 0; r <= m; ++r) {
                ASSERT_EQ(count_kernel_by_rank(l, h, r).value, census[r]) << l << " " << h << " " << r;
            }
        }
    }
    ASSERT_EQ(count_kernel_by_rank(1, 1, 1).value, 9);
}

TEST(counting, gamma_formula_matches_enumeration) {
    std::mt19937_64 rng(137);
    for (size_t m = 2; m <= 4; ++m) {
        for (size_t h = m % 2; h + 2 <= m; h += 2) {
            size_t m_prime = m - 1;
            for (size_t rep = 0; rep < 3; ++rep) {
                BoundaryOperator d1 = random_boundary(m, h, rng);
                BoundaryOperator d2 = random_boundary(m, h, rng);
                if (!naive_good(d1, m_prime) || !naive_good(d2, m_prime)) {
                    --rep;
                    continue;
                }
                std::set<uint64_t> blocks[8];
                for (const auto &cycle : product_cycles(d1, d2)) {
                    Rows block(m_prime);
                    uint64_t key = 0;
                    for (size_t i = 0; i < m_prime; ++i) {
                        block[i] = cycle[i] & ((uint64_t{1} << m_prime) - 1);
                        key |= block[i] << (i * m_prime);
                    }
                    blocks[naive_rank(block)].insert(key);
                }
                for (size_t big_r = 0; big_r <= m_prime; ++big_r) {
                    ASSERT_EQ(gamma_count(m, h, m_prime, big_r).value, blocks[big_r].size())
                        << m << " " << h << " " << big_r;
                }
            }
        }
    }
}

TEST(counting, library_oracles_agree_with_formulas) {
    for (size_t a = 1; a <= 3; ++a) {
        auto dist = brute_rank_distribution(a, 3);
        for (size_t r = 0; r < dist.size(); ++r) {
            ASSERT_EQ(dist[r], count_rank_matrices(a, 3, r).value);
        }
    }
    for (auto kind : {CountKind::Rank, CountKind::Extensions, CountKind::Kernel, CountKind::Gamma}) {
        std::vector<size_t> params;
        switch (kind) {
            case CountKind::Rank:
                params = {3, 4, 2};
                break;
            case CountKind::Extensions:
                params = {2, 1, 4, 3};
                break;
            case CountKind::Kernel:
                params = {1, 2, 2};
                break;
            case CountKind::Gamma:
                params = {4, 2, 3, 1};
                break;
        }
        ASSERT_EQ(exact_count(kind, params).value, brute_count(kind, params, 5).value) << count_kind_name(kind);
        ASSERT_EQ(parse_count_kind(count_kind_name(kind)), kind);
    }
    ASSERT_THROW(parse_count_kind("nope"), InvalidParameter);
    ASSERT_THROW(exact_count(CountKind::Rank, {1, 2}), InvalidParameter);
}

TEST(counting, oracle_budget) {
    ASSERT_THROW(brute_rank_distribution(6, 6), ResourceError);
}

TEST(counting, gamma_rejects_bad_parameters) {
    ASSERT_THROW(gamma_count(5, 2, 4, 1), InvalidParameter);
    ASSERT_THROW(gamma_count(6, 2, 3, 1), InvalidParameter);
}

TEST(counting, bound_diagnostics) {
    auto e = extension_bound_diagnostic(6, 3, 8, 5);
    ASSERT_TRUE(e.within_slack);
    ASSERT_GT(e.log2_value, 0);
    auto z = kernel_bound_diagnostic(4, 2, 3);
    ASSERT_TRUE(z.within_slack);
}
