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

#ifndef HOMPROD_GRAY_SWEEP_H
#define HOMPROD_GRAY_SWEEP_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace homprod::detail {

/// Vectors are flat word arrays of `planes * words_per_plane` words: plane p occupies words
/// [p * words_per_plane, (p + 1) * words_per_plane). A position is nonzero when any plane has its bit set.
/// GF(2) uses one plane; GF(4) uses two (low bit, high bit of the element code).
struct SweepProblem {
    size_t length = 0;
    size_t planes = 1;
    size_t words_per_plane = 0;
    /// Binary generators of the subspace added to every representative.
    std::vector<std::vector<uint64_t>> generators;
    /// One representative per scanned coset, scanned in order.
    std::vector<std::vector<uint64_t>> coset_reps;
};

struct SweepResult {
    bool found = false;
    size_t weight = std::numeric_limits<size_t>::max();
    std::vector<uint64_t> vector;
    uint64_t cosets_scanned = 0;
    uint64_t steps = 0;
};

/// Number of top generator bits fixed per work chunk (capped by the generator count).
constexpr size_t CHUNK_BITS = 8;

/// Total vectors visited by a full sweep; saturates at UINT64_MAX.
uint64_t sweep_size(const SweepProblem &problem);

/// Minimum weight over all scanned cosets; ties broken by the position-wise lexicographic order.
SweepResult sweep_minimum(const SweepProblem &problem, size_t threads);

/// The first vector in scan order (coset, then Gray order) with weight <= bound.
SweepResult sweep_first_at_most(const SweepProblem &problem, size_t bound, size_t threads);

/// Every element of rep + span(generators), in scan order. For tests and small instances.
std::vector<std::vector<uint64_t>> sweep_enumerate(const SweepProblem &problem, size_t coset);

/// Position-wise lexicographic comparison (element code = sum_p bit_p << p).
bool position_lex_less(const uint64_t *a, const uint64_t *b, size_t planes, size_t words_per_plane);

size_t resolve_threads(size_t requested);

}  // namespace homprod::detail

#endif
