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

#ifndef HOMPROD_COUNTING_H
#define HOMPROD_COUNTING_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "homprod/chain_complex.h"

namespace homprod {

using BigInt = boost::multiprecision::cpp_int;

/// An exact count together with the query that produced it.
struct ExactCount {
    BigInt value;
    std::string kind;
    std::vector<size_t> params;

    std::string str() const {
        return value.str();
    }
};

/// Number of a x b GF(2) matrices of rank exactly r:
/// prod_{i<r} (2^a - 2^i)(2^b - 2^i) / |GL(r, 2)|, and 0 when r > min(a, b).
ExactCount count_rank_matrices(size_t a, size_t b, size_t r);

/// Number of rank-R matrices Y (cap_a x cap_a) containing a fixed rank-r matrix X (a x a) in their top-left corner.
/// Computed in two steps: add the missing rows (rank r -> z), then the missing columns (rank z -> R).
/// Throws InvalidParameter unless r <= a <= cap_a and r <= cap_r.
ExactCount count_extensions(size_t a, size_t r, size_t cap_a, size_t cap_r);

/// Z(r): the number of rank-r matrices in ker(delta_1 (x) I + I (x) delta_2) when both factors have
/// dim im = l and dim ker = l + h. Summed over the rank f of the off-diagonal block of a kernel element.
ExactCount count_kernel_by_rank(size_t l, size_t h, size_t r);

/// Gamma(R): the number of rank-R reduced cycles (top-left m' x m' blocks of cycles) for good factors with
/// M = m, homological dimension h. Uses the reduced parameters L' = L - (M - M'), K = 2M' - M:
/// Gamma(R) = sum_r Z_{L', h}(r) * E_{K, r}^{M', R}.
ExactCount gamma_count(size_t m, size_t h, size_t m_prime, size_t cap_r);

/// Enumeration limit for every brute-force oracle.
constexpr uint64_t ORACLE_BUDGET = uint64_t{1} << 28;

/// Rank distribution over all a x b matrices; index = rank.
std::vector<BigInt> brute_rank_distribution(size_t a, size_t b);

/// Rank distribution over all cap_a x cap_a extensions of the given a x a matrix; index = rank.
std::vector<BigInt> brute_extension_distribution(const BitMatrix &x, size_t cap_a);

/// Rank distribution of the M x M reshapes of every element of ker(delta_1 (x) I + I (x) delta_2).
std::vector<BigInt> brute_kernel_census(const BoundaryOperator &d1, const BoundaryOperator &d2);

/// Rank distribution of the distinct top-left m' x m' blocks of cycles of the product.
std::vector<BigInt> brute_gamma_census(const BoundaryOperator &d1, const BoundaryOperator &d2, size_t m_prime);

enum class CountKind { Rank, Extensions, Kernel, Gamma };

/// Parses "rank", "ext", "kernel", "gamma".
CountKind parse_count_kind(const std::string &name);
std::string count_kind_name(CountKind kind);

/// The exact formula for `kind`. Parameters: rank (a, b, r); ext (a, r, A, R); kernel (l, h, r);
/// gamma (m, h, m', R).
ExactCount exact_count(CountKind kind, const std::vector<size_t> &params);

/// The same quantity by exhaustive enumeration. Extensions use a random rank-r matrix X and gamma uses a random
/// pair of good boundary operators, both drawn from `seed`. Throws ResourceError above ORACLE_BUDGET.
ExactCount brute_count(CountKind kind, const std::vector<size_t> &params, uint64_t seed = 1);

/// Compares an exact count with an asymptotic 2^exponent estimate from the analysis.
struct BoundDiagnostic {
    double log2_value;
    double log2_estimate;
    /// value <= 2^(estimate + slack).
    bool within_slack;
};

/// Default slack (in bits) used by the diagnostics.
constexpr double BOUND_SLACK_BITS = 4.0;

/// E_{a,r}^{A,R} against (2A - a)R - ar - R^2 + (r + R)^2 / 4.
BoundDiagnostic extension_bound_diagnostic(size_t a, size_t r, size_t cap_a, size_t cap_r,
                                           double slack = BOUND_SLACK_BITS);
/// Z(r) against 2(H+L)r - r^2 + log2 sum_f 2^(-2f^2 + 2f(r - H)).
BoundDiagnostic kernel_bound_diagnostic(size_t l, size_t h, size_t r, double slack = BOUND_SLACK_BITS);

}  // namespace homprod

#endif
