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

#ifndef HOMPROD_DISTANCE_H
#define HOMPROD_DISTANCE_H

#include <cstdint>
#include <optional>

#include "homprod/bit_matrix.h"
#include "homprod/chain_complex.h"
#include "homprod/css_code.h"

namespace homprod {

struct SearchOptions {
    /// Maximum number of vectors a single sector sweep may visit.
    uint64_t budget = uint64_t{1} << 32;
    /// 0 means std::thread::hardware_concurrency().
    size_t threads = 1;
};

/// Result of one sector: the minimum weight over span(kernel) \ span(image).
struct SectorSearch {
    size_t weight = 0;
    BitVector witness;
    uint64_t cosets_scanned = 0;
    uint64_t steps = 0;
};

struct DistanceResult {
    size_t d_z = 0;
    size_t d_x = 0;
    BitVector witness_z;
    BitVector witness_x;
    uint64_t cosets_scanned = 0;
    uint64_t steps = 0;
    double wall_seconds = 0;
};

/// Exact minimum weight over span(kernel) \ span(image), image a subspace of kernel.
///
/// The kernel is split as image (+) span(h_1..h_H) with the h_i chosen greedily from the kernel basis. Each of
/// the 2^H - 1 nontrivial coset labels is scanned by walking rep + span(image) in Gray-code order, one generator
/// XOR per step. Ties on weight go to the lexicographically smallest vector, so the witness does not depend on
/// the thread count.
SectorSearch min_weight_outside(const Basis &kernel, const Basis &image, const SearchOptions &options = {});

/// The first vector of the same scan with weight <= bound, or nullopt once every coset is exhausted.
std::optional<BitVector> first_outside_at_most(const Basis &kernel, const Basis &image, size_t bound,
                                               const SearchOptions &options = {});

/// Minimum weight of a nonzero vector of span(basis). Throws InvalidParameter on an empty basis.
SectorSearch min_nonzero_weight(const Basis &span, const SearchOptions &options = {});

/// d_z over ker delta \ im delta and d_x over ker delta^T \ im delta^T, single-threaded.
DistanceResult distance(const BoundaryOperator &d, const SearchOptions &options = {});

/// Same result as distance(), spread over `threads` workers.
DistanceResult distance_parallel(const BoundaryOperator &d, size_t threads, SearchOptions options = {});

/// First nontrivial cycle (ker delta \ im delta) with weight <= bound, in scan order.
std::optional<BitVector> distance_upper_bound(const BoundaryOperator &d, size_t bound,
                                              const SearchOptions &options = {});

/// d_z over ker A_X \ rowspace(A_Z), d_x over ker A_Z \ rowspace(A_X).
DistanceResult css_distance(const CssCode &code, const SearchOptions &options = {});

}  // namespace homprod

#endif
