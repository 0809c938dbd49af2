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

#include "homprod/gf4.h"

#include <set>

#include "gtest/gtest.h"
#include "homprod/errors.h"

using namespace homprod;

namespace {

// Reference field: a + b x over GF(2) modulo x^2 + x + 1, encoded as (b << 1) | a.
int ref_mul(int p, int q) {
    int a0 = p & 1, a1 = p >> 1, b0 = q & 1, b1 = q >> 1;
    int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
    // x^2 = x + 1.
    c0 += c2;
    c1 += c2;
    return (c0 & 1) | ((c1 & 1) << 1);
}

int ref_conj(int p) {
    return ref_mul(p, p);
}

using RefMatrix = std::vector<std::vector<int>>;

RefMatrix to_ref(const Gf4Matrix &m) {
    RefMatrix out(m.rows(), std::vector<int>(m.cols()));
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m.get(r, c).code();
        }
    }
    return out;
}

int ref_inverse(int p) {
    for (int q = 1; q < 4; ++q) {
        if (ref_mul(p, q) == 1) {
            return q;
        }
    }
    return 0;
}

size_t ref_rank(RefMatrix m) {
    size_t rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && rank < m.size(); ++c) {
        size_t p = rank;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[rank]);
        int inv = ref_inverse(m[rank][c]);
        for (auto &e : m[rank]) {
            e = ref_mul(e, inv);
        }
        for (size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][c]) {
                int f = m[r][c];
                for (size_t j = 0; j < cols; ++j) {
                    m[r][j] ^= ref_mul(f, m[rank][j]);
                }
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<int> ref_apply(const RefMatrix &m, const std::vector<int> &x) {
    std::vector<int> out(m.size(), 0);
    for (size_t r = 0; r < m.size(); ++r) {
        for (size_t c = 0; c < x.size(); ++c) {
            out[r] ^= ref_mul(m[r][c], x[c]);
        }
    }
    return out;
}

uint64_t encode(const std::vector<int> &x) {
    uint64_t code = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        code |= uint64_t(x[i]) << (2 * i);
    }
    return code;
}

std::vector<int> decode(uint64_t code, size_t n) {
    std::vector<int> x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = (code >> (2 * i)) & 3;
    }
    return x;
}

/// Minimum weight of a cycle outside the image, by enumerating all 4^n vectors.
size_t ref_distance(const Gf4Matrix &delta) {
    RefMatrix m = to_ref(delta);
    size_t n = delta.rows();
    std::vector<bool> image(size_t{1} << (2 * n), false);
    for (uint64_t y = 0; y < image.size(); ++y) {
        image[encode(ref_apply(m, decode(y, n)))] = true;
    }
    size_t best = SIZE_MAX;
    for (uint64_t x = 1; x < image.size(); ++x) {
        auto v = decode(x, n);
        if (image[x] || encode(ref_apply(m, v)) != 0) {
            continue;
        }
        size_t w = 0;
        for (int e : v) {
            w += e != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

TEST(gf4, field_tables_match_polynomial_arithmetic) {
    for (int a = 0; a < 4; ++a) {
        ASSERT_EQ(Gf4(a).conj().code(), ref_conj(a));
        ASSERT_EQ(Gf4(a).conj().conj(), Gf4(a));
        for (int b = 0; b < 4; ++b) {
            ASSERT_EQ((Gf4(a) + Gf4(b)).code(), a ^ b);
            ASSERT_EQ((Gf4(a) * Gf4(b)).code(), ref_mul(a, b));
            // Conjugation is a field automorphism.
            ASSERT_EQ((Gf4(a) * Gf4(b)).conj(), Gf4(a).conj() * Gf4(b).conj());
            ASSERT_EQ((Gf4(a) + Gf4(b)).conj(), Gf4(a).conj() + Gf4(b).conj());
        }
    }
    ASSERT_EQ(Gf4::one() + Gf4::omega() + Gf4::omega_squared(), Gf4::zero());
    ASSERT_EQ(Gf4::omega() * Gf4::omega(), Gf4::omega_squared());
    for (int a = 1; a < 4; ++a) {
        ASSERT_EQ(Gf4(a) * Gf4(a).inverse(), Gf4::one());
    }
    ASSERT_THROW(Gf4::zero().inverse(), InvalidParameter);
}

TEST(gf4, symbols_round_trip) {
    for (char c : std::string("01wW")) {
        ASSERT_EQ(Gf4::from_symbol(c).symbol(), c);
    }
    ASSERT_THROW(Gf4::from_symbol('2'), std::invalid_argument);
    Gf4Vector v = Gf4Vector::from_string("0wW1w");
    ASSERT_EQ(v.str(), "0wW1w");
    ASSERT_EQ(v.weight(), 4);
    ASSERT_EQ(v.scaled(Gf4::omega()).str(), "0W1wW");
    ASSERT_EQ(v.conj().str(), "0Ww1W");
}

TEST(gf4, scalar_multiples_keep_weight) {
    std::mt19937_64 rng(107);
    for (size_t trial = 0; trial < 100; ++trial) {
        Gf4Vector v(1 + rng() % 70);
        for (size_t i = 0; i < v.size(); ++i) {
            v.set(i, Gf4(uint8_t(rng() & 3)));
        }
        for (int c = 1; c < 4; ++c) {
            ASSERT_EQ(v.scaled(Gf4(c)).weight(), v.weight());
        }
    }
}

TEST(gf4, hermitian_inner_matches_definition) {
    std::mt19937_64 rng(109);
    for (size_t trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 20;
        Gf4Vector f(n), g(n);
        int expected = 0;
        for (size_t i = 0; i < n; ++i) {
            int a = rng() & 3, b = rng() & 3;
            f.set(i, Gf4(a));
            g.set(i, Gf4(b));
            expected ^= ref_mul(ref_conj(a), b);
        }
        ASSERT_EQ(hermitian_inner(f, g).code(), expected);
    }
}

TEST(gf4, matrix_product_and_rank_match_reference) {
    std::mt19937_64 rng(113);
    for (size_t trial = 0; trial < 100; ++trial) {
        size_t r = 1 + rng() % 7, k = 1 + rng() % 7, c = 1 + rng() % 7;
        Gf4Matrix a(r, k), b(k, c);
        for (size_t i = 0; i < r; ++i) {
            for (size_t j = 0; j < k; ++j) {
                a.set(i, j, Gf4(uint8_t(rng() & 3)));
            }
        }
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < c; ++j) {
                b.set(i, j, Gf4(uint8_t(rng() & 3)));
            }
        }
        RefMatrix ra = to_ref(a), rb = to_ref(b), rp = to_ref(a * b);
        for (size_t i = 0; i < r; ++i) {
            for (size_t j = 0; j < c; ++j) {
                int s = 0;
                for (size_t t = 0; t < k; ++t) {
                    s ^= ref_mul(ra[i][t], rb[t][j]);
                }
                ASSERT_EQ(rp[i][j], s);
            }
        }
        ASSERT_EQ(rank(a), ref_rank(ra));
        Gf4Matrix ker = kernel_basis(a);
        ASSERT_EQ(ker.rows(), k - ref_rank(ra));
        for (size_t i = 0; i < ker.rows(); ++i) {
            ASSERT_TRUE((a * ker.row(i)).is_zero());
        }
        ASSERT_EQ(a.adjoint().adjoint(), a);
    }
}

TEST(gf4, selfadjoint_invertible_census) {
    for (size_t m : {2, 3}) {
        std::set<std::string> expected;
        for (uint64_t code = 0; code < (uint64_t{1} << (2 * m * m)); ++code) {
            RefMatrix u(m, std::vector<int>(m));
            bool adjoint = true;
            for (size_t i = 0; i < m * m; ++i) {
                u[i / m][i % m] = (code >> (2 * i)) & 3;
            }
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = 0; j < m; ++j) {
                    adjoint = adjoint && u[i][j] == ref_conj(u[j][i]);
                }
            }
            if (adjoint && ref_rank(u) == m) {
                std::string s;
                for (const auto &row : u) {
                    for (int e : row) {
                        s += "01wW"[e];
                    }
                }
                expected.insert(s);
            }
        }
        auto got = enumerate_selfadjoint_invertible(m);
        std::set<std::string> got_set;
        for (const auto &u : got) {
            std::string s;
            for (size_t i = 0; i < m; ++i) {
                s += u.row(i).str();
            }
            got_set.insert(s);
        }
        ASSERT_EQ(got.size(), got_set.size());
        ASSERT_EQ(got_set, expected);
    }
    ASSERT_EQ(enumerate_selfadjoint_invertible(2).size(), 10);
    ASSERT_EQ(enumerate_selfadjoint_invertible(3).size(), 280);
    ASSERT_THROW(enumerate_selfadjoint_invertible(4), ResourceError);
}

TEST(gf4, boundary_from_checks_is_valid) {
    ASSERT_TRUE(is_self_orthogonal(five_qubit_basis()));
    ASSERT_TRUE(is_self_orthogonal(steane_basis_gf4()));
    for (const auto &u : enumerate_selfadjoint_invertible(2)) {
        Gf4Boundary d = gf4_boundary_from_checks(five_qubit_basis(), u);
        ASSERT_EQ(d.matrix().adjoint(), d.matrix());
        ASSERT_TRUE((d.matrix() * d.matrix()).is_zero());
        ASSERT_EQ(d.hom_dim(), 1);
        ASSERT_EQ(d.check_weight(), 4);
    }
    for (const auto &u : enumerate_selfadjoint_invertible(3)) {
        Gf4Boundary d = gf4_boundary_from_checks(steane_basis_gf4(), u);
        ASSERT_TRUE((d.matrix().adjoint() * d.matrix()).is_zero());
        ASSERT_EQ(d.hom_dim(), 1);
    }
}

TEST(gf4, boundary_validation) {
    ASSERT_THROW(Gf4Boundary(Gf4Matrix::identity(2)), PreconditionError);
    // Square-zero but not self-adjoint.
    ASSERT_THROW(Gf4Boundary(Gf4Matrix::from_strings({"0w", "00"})), PreconditionError);
}

TEST(gf4, distance_matches_reference_enumeration) {
    for (const auto &u : enumerate_selfadjoint_invertible(2)) {
        Gf4Boundary d = gf4_boundary_from_checks(five_qubit_basis(), u);
        auto r = gf4_distance(d);
        ASSERT_EQ(r.d, ref_distance(d.matrix()));
        ASSERT_EQ(r.d, 3);
        ASSERT_EQ(r.witness.weight(), 3);
    }
    auto us = enumerate_selfadjoint_invertible(3);
    for (size_t i = 0; i < us.size(); i += 40) {
        Gf4Boundary d = gf4_boundary_from_checks(steane_basis_gf4(), us[i]);
        ASSERT_EQ(gf4_distance(d).d, ref_distance(d.matrix()));
    }
}

TEST(gf4, five_qubit_squared) {
    auto us = enumerate_selfadjoint_invertible(2);
    Gf4Boundary a = gf4_boundary_from_checks(five_qubit_basis(), us[0]);
    Gf4Boundary b = gf4_boundary_from_checks(five_qubit_basis(), us[7]);
    Gf4Boundary p = gf4_product(a, b);
    ASSERT_EQ(p.dim(), 25);
    ASSERT_EQ(p.hom_dim(), 1);
    ASSERT_LE(p.check_weight(), 8);
    ASSERT_TRUE((p.matrix() * p.matrix()).is_zero());
    ASSERT_EQ(p.matrix(), kron(a.matrix(), Gf4Matrix::identity(5)) + kron(Gf4Matrix::identity(5), b.matrix()));
    auto r = gf4_distance(p);
    ASSERT_EQ(r.d, 5);
    SearchOptions two;
    two.threads = 2;
    auto r2 = gf4_distance(p, two);
    ASSERT_EQ(r2.d, 5);
    ASSERT_EQ(r2.witness, r.witness);
    ASSERT_FALSE(gf4_distance_upper_bound(p, 4).has_value());
    ASSERT_TRUE(gf4_distance_upper_bound(p, 5).has_value());
}

TEST(gf4, budget_is_enforced) {
    SearchOptions tiny;
    tiny.budget = 8;
    Gf4Boundary d = gf4_boundary_from_checks(five_qubit_basis(), enumerate_selfadjoint_invertible(2)[0]);
    ASSERT_THROW(gf4_distance(d, tiny), ResourceError);
    ASSERT_THROW(gf4_distance(Gf4Boundary(Gf4Matrix(40, 40))), ResourceError);
}
