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

#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "homprod/errors.h"
#include "homprod/homological_product.h"

namespace homprod {

namespace {

BigInt pow2(size_t e) {
    return BigInt(1) << e;
}

// Plain-integer rank count, shared by every formula.
BigInt rank_count(size_t a, size_t b, size_t r) {
    if (r > std::min(a, b)) {
        return 0;
    }
    BigInt num = 1;
    BigInt gl = 1;
    for (size_t i = 0; i < r; ++i) {
        num *= (pow2(a) - pow2(i)) * (pow2(b) - pow2(i));
        gl *= pow2(r) - pow2(i);
    }
    return num / gl;
}

// Signed variant for expressions like r - 2f that may go negative.
BigInt rank_count_signed(long a, long b, long r) {
    if (a < 0 || b < 0 || r < 0) {
        return 0;
    }
    return rank_count(size_t(a), size_t(b), size_t(r));
}

BigInt extensions(size_t a, size_t r, size_t cap_a, size_t cap_r) {
    BigInt total = 0;
    size_t add = cap_a - a;
    for (size_t z = r; z <= std::min(cap_r, a); ++z) {
        // Rows: clear the part inside the row space of X, the rest must have rank z - r.
        BigInt rows = pow2(add * r) * rank_count_signed(long(add), long(a - r), long(z - r));
        // Columns: the same argument on the transpose of the cap_a x a intermediate matrix.
        BigInt cols = pow2(add * z) * rank_count_signed(long(cap_a - z), long(add), long(cap_r - z));
        total += rows * cols;
    }
    return total;
}

BigInt kernel_by_rank(size_t l, size_t h, size_t r) {
    BigInt total = 0;
    for (size_t f = 0; 2 * f <= r && f <= l; ++f) {
        size_t side = h + l - f;
        total += rank_count(l, l, f) * pow2(2 * f * (h + l) - f * f) * rank_count_signed(long(side), long(side), long(r - 2 * f));
    }
    return total;
}

void check_budget(uint64_t log2_size, const std::string &what) {
    if (log2_size >= 63 || (uint64_t{1} << log2_size) > ORACLE_BUDGET) {
        throw ResourceError(what + " enumeration needs 2^" + std::to_string(log2_size) +
                            " cases, over the oracle budget of 2^28");
    }
}

// Rank of a matrix given as row bitmasks.
size_t mask_rank(std::vector<uint64_t> rows) {
    size_t rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == 0) {
            continue;
        }
        ++rank;
        uint64_t pivot = rows[i] & (~rows[i] + 1);
        for (size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[j] & pivot) {
                rows[j] ^= rows[i];
            }
        }
    }
    return rank;
}

// Calls fn(v) for every vector in the span of `basis`, in Gray order starting from zero.
template <typename Fn>
void for_each_in_span(const Basis &basis, Fn fn) {
    BitVector v(basis.ambient_dim());
    fn(v);
    uint64_t total = uint64_t{1} << basis.dim();
    for (uint64_t i = 1; i < total; ++i) {
        v ^= basis.vector(std::countr_zero(i));
        fn(v);
    }
}

std::vector<uint64_t> reshape_rows(const BitVector &v, size_t rows, size_t cols, size_t keep_rows,
                                   size_t keep_cols) {
    std::vector<uint64_t> out(keep_rows, 0);
    for (size_t i = 0; i < keep_rows; ++i) {
        for (size_t j = 0; j < keep_cols; ++j) {
            if (v.get(i * cols + j)) {
                out[i] |= uint64_t{1} << j;
            }
        }
    }
    (void)rows;
    return out;
}

Basis product_kernel(const BoundaryOperator &d1, const BoundaryOperator &d2) {
    Basis ker = kernel_basis(product(d1, d2).partial.matrix());
    check_budget(ker.dim(), "kernel");
    return ker;
}

BoundaryOperator random_good(size_t m, size_t h, size_t m_prime, std::mt19937_64 &rng) {
    for (;;) {
        BoundaryOperator d = random_boundary(m, h, rng);
        if (is_good(d, m_prime)) {
            return d;
        }
    }
}

void need_params(const std::vector<size_t> &params, size_t n, const std::string &kind) {
    if (params.size() != n) {
        throw InvalidParameter(kind + " count takes " + std::to_string(n) + " parameters");
    }
}

BigInt at(const std::vector<BigInt> &dist, size_t i) {
    return i < dist.size() ? dist[i] : BigInt(0);
}

double log2_big(const BigInt &x) {
    if (x == 0) {
        return -INFINITY;
    }
    // Shift into double range first so huge counts do not overflow.
    size_t bits = msb(x);
    if (bits < 1000) {
        return std::log2(x.convert_to<double>());
    }
    BigInt top = x >> (bits - 60);
    return std::log2(top.convert_to<double>()) + double(bits - 60);
}

}  // namespace

ExactCount count_rank_matrices(size_t a, size_t b, size_t r) {
    return {rank_count(a, b, r), "rank", {a, b, r}};
}

ExactCount count_extensions(size_t a, size_t r, size_t cap_a, size_t cap_r) {
    if (r > a || a > cap_a || r > cap_r) {
        throw InvalidParameter("count_extensions needs r <= a <= A and r <= R");
    }
    return {extensions(a, r, cap_a, cap_r), "ext", {a, r, cap_a, cap_r}};
}

ExactCount count_kernel_by_rank(size_t l, size_t h, size_t r) {
    return {kernel_by_rank(l, h, r), "kernel", {l, h, r}};
}

ExactCount gamma_count(size_t m, size_t h, size_t m_prime, size_t cap_r) {
    if (h > m || (m - h) % 2 != 0) {
        throw InvalidParameter("gamma_count needs m - h even and non-negative");
    }
    size_t l = (m - h) / 2;
    if (m_prime > m || m - m_prime > l) {
        throw InvalidParameter("gamma_count needs M - L <= M' <= M");
    }
    size_t l_prime = l - (m - m_prime);
    size_t k = 2 * l_prime + h;
    BigInt total = 0;
    for (size_t r = 0; r <= std::min(k, cap_r); ++r) {
        total += kernel_by_rank(l_prime, h, r) * extensions(k, r, m_prime, cap_r);
    }
    return {total, "gamma", {m, h, m_prime, cap_r}};
}

std::vector<BigInt> brute_rank_distribution(size_t a, size_t b) {
    check_budget(a * b, "rank");
    std::vector<BigInt> dist(std::min(a, b) + 1, 0);
    std::vector<uint64_t> rows(a);
    for (uint64_t bits = 0; bits < (uint64_t{1} << (a * b)); ++bits) {
        for (size_t i = 0; i < a; ++i) {
            rows[i] = (bits >> (i * b)) & ((uint64_t{1} << b) - 1);
        }
        dist[mask_rank(rows)] += 1;
    }
    return dist;
}

std::vector<BigInt> brute_extension_distribution(const BitMatrix &x, size_t cap_a) {
    size_t a = x.rows();
    if (x.cols() != a || a > cap_a || cap_a > 8) {
        throw InvalidParameter("extension oracle needs a square X no larger than the target (at most 8)");
    }
    size_t free_bits = cap_a * cap_a - a * a;
    check_budget(free_bits, "extension");
    std::vector<BigInt> dist(cap_a + 1, 0);
    std::vector<uint64_t> base(cap_a, 0);
    for (size_t i = 0; i < a; ++i) {
        for (size_t j = 0; j < a; ++j) {
            if (x.get(i, j)) {
                base[i] |= uint64_t{1} << j;
            }
        }
    }
    // Free positions in row-major order, skipping the fixed top-left block.
    std::vector<std::pair<size_t, size_t>> cells;
    for (size_t i = 0; i < cap_a; ++i) {
        for (size_t j = 0; j < cap_a; ++j) {
            if (i >= a || j >= a) {
                cells.emplace_back(i, j);
            }
        }
    }
    std::vector<uint64_t> rows(cap_a);
    for (uint64_t bits = 0; bits < (uint64_t{1} << free_bits); ++bits) {
        rows = base;
        for (size_t c = 0; c < cells.size(); ++c) {
            if ((bits >> c) & 1) {
                rows[cells[c].first] |= uint64_t{1} << cells[c].second;
            }
        }
        dist[mask_rank(rows)] += 1;
    }
    return dist;
}

std::vector<BigInt> brute_kernel_census(const BoundaryOperator &d1, const BoundaryOperator &d2) {
    size_t m1 = d1.dim();
    size_t m2 = d2.dim();
    if (m2 > 64) {
        throw InvalidParameter("kernel census supports factors of dimension at most 64");
    }
    Basis ker = product_kernel(d1, d2);
    std::vector<BigInt> dist(std::min(m1, m2) + 1, 0);
    for_each_in_span(ker, [&](const BitVector &v) { dist[mask_rank(reshape_rows(v, m1, m2, m1, m2))] += 1; });
    return dist;
}

std::vector<BigInt> brute_gamma_census(const BoundaryOperator &d1, const BoundaryOperator &d2, size_t m_prime) {
    size_t m1 = d1.dim();
    size_t m2 = d2.dim();
    if (m_prime > std::min(m1, m2) || m_prime > 8) {
        throw InvalidParameter("gamma census needs m' <= min(M1, M2) and m' <= 8");
    }
    Basis ker = product_kernel(d1, d2);
    std::set<uint64_t> seen;
    std::vector<BigInt> dist(m_prime + 1, 0);
    for_each_in_span(ker, [&](const BitVector &v) {
        auto rows = reshape_rows(v, m1, m2, m_prime, m_prime);
        uint64_t key = 0;
        for (size_t i = 0; i < m_prime; ++i) {
            key |= rows[i] << (i * m_prime);
        }
        if (seen.insert(key).second) {
            dist[mask_rank(rows)] += 1;
        }
    });
    return dist;
}

CountKind parse_count_kind(const std::string &name) {
    if (name == "rank") {
        return CountKind::Rank;
    }
    if (name == "ext") {
        return CountKind::Extensions;
    }
    if (name == "kernel") {
        return CountKind::Kernel;
    }
    if (name == "gamma") {
        return CountKind::Gamma;
    }
    throw InvalidParameter("unknown count kind '" + name + "' (expected rank, ext, kernel or gamma)");
}

std::string count_kind_name(CountKind kind) {
    switch (kind) {
        case CountKind::Rank:
            return "rank";
        case CountKind::Extensions:
            return "ext";
        case CountKind::Kernel:
            return "kernel";
        case CountKind::Gamma:
            return "gamma";
    }
    return "";
}

ExactCount exact_count(CountKind kind, const std::vector<size_t> &params) {
    switch (kind) {
        case CountKind::Rank:
            need_params(params, 3, "rank");
            return count_rank_matrices(params[0], params[1], params[2]);
        case CountKind::Extensions:
            need_params(params, 4, "ext");
            return count_extensions(params[0], params[1], params[2], params[3]);
        case CountKind::Kernel:
            need_params(params, 3, "kernel");
            return count_kernel_by_rank(params[0], params[1], params[2]);
        case CountKind::Gamma:
            need_params(params, 4, "gamma");
            return gamma_count(params[0], params[1], params[2], params[3]);
    }
    throw InvalidParameter("unknown count kind");
}

ExactCount brute_count(CountKind kind, const std::vector<size_t> &params, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ExactCount out{0, count_kind_name(kind), params};
    switch (kind) {
        case CountKind::Rank:
            need_params(params, 3, "rank");
            out.value = at(brute_rank_distribution(params[0], params[1]), params[2]);
            return out;
        case CountKind::Extensions: {
            need_params(params, 4, "ext");
            size_t a = params[0];
            size_t r = params[1];
            if (r > a || a > params[2] || r > params[3]) {
                throw InvalidParameter("count_extensions needs r <= a <= A and r <= R");
            }
            // A random rank-r matrix: the canonical one conjugated by random invertibles on both sides.
            BitMatrix x(a, a);
            for (size_t i = 0; i < r; ++i) {
                x.set(i, i);
            }
            if (a > 0) {
                x = random_invertible(a, rng) * x * random_invertible(a, rng);
            }
            out.value = at(brute_extension_distribution(x, params[2]), params[3]);
            return out;
        }
        case CountKind::Kernel: {
            need_params(params, 3, "kernel");
            auto d = canonical_boundary(params[1], params[0]);
            out.value = at(brute_kernel_census(d, d), params[2]);
            return out;
        }
        case CountKind::Gamma: {
            need_params(params, 4, "gamma");
            size_t m = params[0];
            size_t h = params[1];
            size_t m_prime = params[2];
            gamma_count(m, h, m_prime, params[3]);  // parameter validation
            auto d1 = random_good(m, h, m_prime, rng);
            auto d2 = random_good(m, h, m_prime, rng);
            out.value = at(brute_gamma_census(d1, d2, m_prime), params[3]);
            return out;
        }
    }
    throw InvalidParameter("unknown count kind");
}

BoundDiagnostic extension_bound_diagnostic(size_t a, size_t r, size_t cap_a, size_t cap_r, double slack) {
    double value = log2_big(count_extensions(a, r, cap_a, cap_r).value);
    double ra = double(a);
    double rr = double(r);
    double big_a = double(cap_a);
    double big_r = double(cap_r);
    double estimate = (2 * big_a - ra) * big_r - ra * rr - big_r * big_r + (rr + big_r) * (rr + big_r) / 4;
    return {value, estimate, value <= estimate + slack};
}

BoundDiagnostic kernel_bound_diagnostic(size_t l, size_t h, size_t r, double slack) {
    double value = log2_big(count_kernel_by_rank(l, h, r).value);
    double sum = 0;
    for (size_t f = 0; 2 * f <= r && f <= l; ++f) {
        double df = double(f);
        sum += std::exp2(-2 * df * df + 2 * df * (double(r) - double(h)));
    }
    double dr = double(r);
    double estimate = 2 * double(h + l) * dr - dr * dr + std::log2(sum);
    return {value, estimate, value <= estimate + slack};
}

}  // namespace homprod
