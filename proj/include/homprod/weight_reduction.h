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

#ifndef HOMPROD_WEIGHT_REDUCTION_H
#define HOMPROD_WEIGHT_REDUCTION_H

#include <cstdint>
#include <span>
#include <vector>

#include "homprod/css_code.h"

namespace homprod {

enum class CheckType { Z, X };

/// Replaces Z-check `stab` with support T by the two checks T1 + a and T2 + a (T2 = T \ T1) on a new qubit
/// a = n. The first half stays at index `stab`, the second half is appended. Every X-check with odd overlap
/// on T1 gains X on a, which keeps the checks commuting; k is unchanged.
/// Throws PreconditionError unless t1 is a nonempty proper subset of T.
CssCode z_split(const CssCode &c, size_t stab, std::span<const size_t> t1);

/// z_split with the roles of the Z- and X-checks exchanged.
CssCode x_split(const CssCode &c, size_t stab, std::span<const size_t> t1);

/// Largest check (row) weight over both check matrices.
size_t max_check_weight(const CssCode &c);

enum class SplitStrategy { RoundRobin, Random };

enum class HalfRule { FirstHalf, LeastConflict };

struct SplitStep {
    CheckType type;
    size_t stab;
    std::vector<size_t> t1;
};

/// Histories include the starting code as entry 0, so they hold steps.size() + 1 values.
struct SplitTrace {
    std::vector<SplitStep> steps;
    std::vector<size_t> weight_history;
    std::vector<size_t> n_history;
    bool reached = false;
};

struct ReductionResult {
    CssCode code;
    SplitTrace trace;
};

/// Splits checks until max_check_weight <= w_target or max_steps splits were made (0 means 64 n).
/// The input is first cut down to a maximal independent set of checks of each type (lowest index first); the
/// stabilizer group is unchanged and step indices refer to the cut-down code.
/// Round-robin alternates phases: split the heaviest Z-check (lowest index on ties) until every Z-check is within
/// target, then the same for X-checks, and repeat. Random picks a uniformly random over-weight check.
/// T1 always has ceil(|T|/2) elements. LeastConflict takes the subset (first in lexicographic order) that pushes
/// the fewest opposite-type checks past the target, then the fewest opposite-type checks overall; supports
/// above 16 fall back to the first half. FirstHalf takes the first ceil(|T|/2) support positions (Random shuffles
/// first). Qubit degrees are not reduced by splitting, so only check weights are targeted.
/// Throws InvalidParameter if w_target < 3 (a weight-3 check cannot be split into lighter ones).
ReductionResult reduce_weights(const CssCode &c, size_t w_target, SplitStrategy strategy, size_t max_steps = 0,
                               uint64_t seed = 1, HalfRule rule = HalfRule::LeastConflict);

}  // namespace homprod

#endif
