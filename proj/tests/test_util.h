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

#ifndef HOMPROD_TESTS_TEST_UTIL_H
#define HOMPROD_TESTS_TEST_UTIL_H

// Deliberately naive reference implementations. They share no code with the library: matrices are
// plain vectors of row bitmasks (column j is bit j), and everything is done by exhaustive enumeration.

#include <bit>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "homprod/bit_matrix.h"

namespace homprod::testing {

using Rows = std::vector<uint64_t>;

inline Rows to_rows(const BitMatrix &m) {
    Rows out(m.rows(), 0);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                out[r] |= uint64_t{1} << c;
            }
        }
    }
    return out;
}

inline uint64_t to_mask(const BitVector &v) {
    uint64_t out = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out |= uint64_t(v.get(i)) << i;
    }
    return out;
}

inline Rows naive_transpose(const Rows &m, size_t cols) {
    Rows out(cols, 0);
    for (size_t r = 0; r < m.size(); ++r) {
        for (size_t c = 0; c < cols; ++c) {
            if ((m[r] >> c) & 1) {
                out[c] |= uint64_t{1} << r;
            }
        }
    }
    return out;
}

/// Bit i of the result is the parity of row i AND x.
inline uint64_t naive_apply(const Rows &m, uint64_t x) {
    uint64_t out = 0;
    for (size_t r = 0; r < m.size(); ++r) {
        out |= uint64_t(std::popcount(m[r] & x) & 1) << r;
    }
    return out;
}

inline size_t naive_rank(Rows m) {
    size_t rank = 0;
    for (size_t bit = 0; bit < 64; ++bit) {
        size_t pivot = rank;
        while (pivot < m.size() && !((m[pivot] >> bit) & 1)) {
            ++pivot;
        }
        if (pivot == m.size()) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r != rank && ((m[r] >> bit) & 1)) {
                m[r] ^= m[rank];
            }
        }
        ++rank;
    }
    return rank;
}

/// Rank by elimination on a byte-per-entry copy; no width limit.
inline size_t naive_rank_wide(const BitMatrix &m) {
    std::vector<std::vector<uint8_t>> a(m.rows(), std::vector<uint8_t>(m.cols()));
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            a[r][c] = m.get(r, c);
        }
    }
    size_t rank = 0;
    for (size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
        size_t p = rank;
        while (p < a.size() && !a[p][c]) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (size_t r = 0; r < a.size(); ++r) {
            if (r != rank && a[r][c]) {
                for (size_t j = c; j < m.cols(); ++j) {
                    a[r][j] ^= a[rank][j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

/// Membership table of the column space of an n x n operator (indexed by vector mask), n <= 20.
inline std::vector<bool> naive_image(const Rows &m, size_t n) {
    std::vector<bool> in(size_t{1} << n, false);
    for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
        in[naive_apply(m, y)] = true;
    }
    return in;
}

/// Minimum weight of x with m x = 0 and x outside the image of m; SIZE_MAX if none.
inline size_t naive_sector_distance(const Rows &m, size_t n) {
    auto image = naive_image(m, n);
    size_t best = std::numeric_limits<size_t>::max();
    for (uint64_t x = 1; x < (uint64_t{1} << n); ++x) {
        if (naive_apply(m, x) == 0 && !image[x]) {
            best = std::min<size_t>(best, std::popcount(x));
        }
    }
    return best;
}

/// Exhaustive d_z (cycles of delta) and d_x (cycles of delta^T).
inline std::pair<size_t, size_t> naive_distance(const BitMatrix &delta) {
    Rows m = to_rows(delta);
    return {naive_sector_distance(m, delta.cols()), naive_sector_distance(naive_transpose(m, delta.cols()), delta.cols())};
}

/// Random delta with delta^2 = 0 by rejection: only for tiny sizes.
inline BitMatrix random_square(size_t n, std::mt19937_64 &rng) {
    BitMatrix m(n, n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

inline Rows naive_kron(const Rows &a, size_t ac, const Rows &b, size_t bc) {
    Rows out(a.size() * b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            for (size_t p = 0; p < ac; ++p) {
                for (size_t q = 0; q < bc; ++q) {
                    if (((a[i] >> p) & 1) && ((b[j] >> q) & 1)) {
                        out[i * b.size() + j] |= uint64_t{1} << (p * bc + q);
                    }
                }
            }
        }
    }
    return out;
}

inline Rows naive_identity(size_t n) {
    Rows out(n);
    for (size_t i = 0; i < n; ++i) {
        out[i] = uint64_t{1} << i;
    }
    return out;
}

}  // namespace homprod::testing

#endif
