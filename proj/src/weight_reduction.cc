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

#include "homprod/weight_reduction.h"

#include <algorithm>
#include <random>

#include "homprod/errors.h"

namespace homprod {

namespace {

BitMatrix widened(const BitMatrix &m) {
    BitMatrix out(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c : m.row(r).support()) {
            out.set(r, c);
        }
    }
    return out;
}

// Splits row `stab` of `split` and patches `other` so that the two families still commute.
void split_rows(BitMatrix &split, BitMatrix &other, size_t stab, std::span<const size_t> t1) {
    if (stab >= split.rows()) {
        throw PreconditionError("check index " + std::to_string(stab) + " is out of range");
    }
    BitVector t = split.row(stab);
    BitVector first(t.size());
    for (size_t q : t1) {
        if (q >= t.size() || !t.get(q)) {
            throw PreconditionError("T1 must lie inside the support of the split check");
        }
        if (first.get(q)) {
            throw PreconditionError("T1 lists a qubit twice");
        }
        first.set(q);
    }
    if (first.is_zero() || first == t) {
        throw PreconditionError("T1 must be a nonempty proper subset of the check support");
    }
    size_t n = t.size();
    split = widened(split);
    other = widened(other);
    BitVector half1(n + 1);
    BitVector half2(n + 1);
    for (size_t q : t.support()) {
        (first.get(q) ? half1 : half2).set(q);
    }
    half1.set(n);
    half2.set(n);
    split.set_row(stab, half1);
    split.append_row(half2);
    for (size_t r = 0; r < other.rows(); ++r) {
        size_t overlap = 0;
        for (size_t q : first.support()) {
            overlap += other.get(r, q);
        }
        if (overlap % 2 == 1) {
            other.set(r, n);
        }
    }
}

const BitMatrix &checks_of(const CssCode &c, CheckType type) {
    return type == CheckType::Z ? c.a_z : c.a_x;
}

// Heaviest check of the given type above the target; lowest index on ties.
std::optional<size_t> heaviest(const BitMatrix &m, size_t w_target) {
    std::optional<size_t> best;
    size_t best_w = w_target;
    for (size_t r = 0; r < m.rows(); ++r) {
        size_t w = m.row_weight(r);
        if (w > best_w) {
            best = r;
            best_w = w;
        }
    }
    return best;
}

// Larger checks fall back to the first half: C(16, 8) = 12870 subsets is the most we try.
constexpr size_t MAX_EXHAUSTIVE_SUPPORT = 16;

// Cost of the rows of `other` with odd overlap on the given qubits: each such row grows by one, and pushing a
// row past the target costs far more than growing one that stays within it.
size_t conflicts(const BitMatrix &other, const std::vector<size_t> &qubits, const std::vector<size_t> &weights,
                 size_t w_target) {
    size_t cost = 0;
    for (size_t r = 0; r < other.rows(); ++r) {
        size_t overlap = 0;
        for (size_t q : qubits) {
            overlap += other.get(r, q);
        }
        if (overlap % 2 == 1) {
            cost += weights[r] >= w_target ? other.rows() + 1 : 1;
        }
    }
    return cost;
}

// Among the subsets of `support` of size ceil(|T|/2), the one (first in lexicographic order) that
// anticommutes with the fewest opposite-type checks.
std::vector<size_t> least_conflict_half(const std::vector<size_t> &support, const BitMatrix &other, size_t w_target) {
    size_t half = (support.size() + 1) / 2;
    if (support.size() > MAX_EXHAUSTIVE_SUPPORT) {
        return {support.begin(), support.begin() + long(half)};
    }
    std::vector<size_t> pick(half);
    std::vector<size_t> best;
    size_t best_conflicts = SIZE_MAX;
    std::vector<size_t> weights(other.rows());
    for (size_t r = 0; r < other.rows(); ++r) {
        weights[r] = other.row_weight(r);
    }
    std::vector<size_t> idx(half);
    for (size_t i = 0; i < half; ++i) {
        idx[i] = i;
    }
    for (;;) {
        for (size_t i = 0; i < half; ++i) {
            pick[i] = support[idx[i]];
        }
        size_t c = conflicts(other, pick, weights, w_target);
        if (c < best_conflicts) {
            best_conflicts = c;
            best = pick;
        }
        // Next combination in lexicographic order.
        size_t i = half;
        while (i > 0 && idx[i - 1] == support.size() - half + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (size_t j = i; j < half; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return best;
}

BitMatrix independent_rows(const BitMatrix &m) {
    BitMatrix out(0, m.cols());
    for (size_t r : independent_checks(m)) {
        out.append_row(m.row(r));
    }
    return out;
}

}  // namespace

CssCode z_split(const CssCode &c, size_t stab, std::span<const size_t> t1) {
    BitMatrix a_z = c.a_z;
    BitMatrix a_x = c.a_x;
    split_rows(a_z, a_x, stab, t1);
    return CssCode::from_checks(std::move(a_z), std::move(a_x));
}

CssCode x_split(const CssCode &c, size_t stab, std::span<const size_t> t1) {
    BitMatrix a_z = c.a_z;
    BitMatrix a_x = c.a_x;
    split_rows(a_x, a_z, stab, t1);
    return CssCode::from_checks(std::move(a_z), std::move(a_x));
}

size_t max_check_weight(const CssCode &c) {
    return std::max(c.a_z.max_row_weight(), c.a_x.max_row_weight());
}

ReductionResult reduce_weights(const CssCode &c, size_t w_target, SplitStrategy strategy, size_t max_steps,
                               uint64_t seed, HalfRule rule) {
    if (w_target < 3) {
        throw InvalidParameter("weight target must be at least 3");
    }
    if (max_steps == 0) {
        max_steps = 64 * c.n;
    }
    std::mt19937_64 rng(seed);
    // Dependent checks multiply the number of rows each split touches without changing the code.
    ReductionResult out{CssCode::from_checks(independent_rows(c.a_z), independent_rows(c.a_x)), {}};
    SplitTrace &trace = out.trace;
    trace.weight_history.push_back(max_check_weight(out.code));
    trace.n_history.push_back(c.n);
    CheckType phase = CheckType::Z;
    while (trace.steps.size() < max_steps) {
        const CssCode &cur = out.code;
        if (max_check_weight(cur) <= w_target) {
            break;
        }
        SplitStep step;
        if (strategy == SplitStrategy::RoundRobin) {
            auto pick = heaviest(checks_of(cur, phase), w_target);
            if (!pick) {
                phase = phase == CheckType::Z ? CheckType::X : CheckType::Z;
                continue;
            }
            step.type = phase;
            step.stab = *pick;
            auto support = checks_of(cur, phase).row(*pick).support();
            if (rule == HalfRule::LeastConflict) {
                step.t1 = least_conflict_half(support, checks_of(cur, phase == CheckType::Z ? CheckType::X : CheckType::Z), w_target);
            } else {
                step.t1.assign(support.begin(), support.begin() + long((support.size() + 1) / 2));
            }
        } else {
            std::vector<std::pair<CheckType, size_t>> over;
            for (CheckType t : {CheckType::Z, CheckType::X}) {
                const BitMatrix &m = checks_of(cur, t);
                for (size_t r = 0; r < m.rows(); ++r) {
                    if (m.row_weight(r) > w_target) {
                        over.emplace_back(t, r);
                    }
                }
            }
            auto [type, stab] = over[std::uniform_int_distribution<size_t>(0, over.size() - 1)(rng)];
            step.type = type;
            step.stab = stab;
            auto support = checks_of(cur, type).row(stab).support();
            if (rule == HalfRule::LeastConflict) {
                step.t1 = least_conflict_half(support, checks_of(cur, type == CheckType::Z ? CheckType::X : CheckType::Z), w_target);
            } else {
                std::shuffle(support.begin(), support.end(), rng);
                step.t1.assign(support.begin(), support.begin() + long((support.size() + 1) / 2));
                std::sort(step.t1.begin(), step.t1.end());
            }
        }
        out.code = step.type == CheckType::Z ? z_split(cur, step.stab, step.t1) : x_split(cur, step.stab, step.t1);
        if (out.code.k != c.k) {
            throw std::logic_error("split changed the number of logical qubits");
        }
        trace.weight_history.push_back(max_check_weight(out.code));
        trace.n_history.push_back(out.code.n);
        trace.steps.push_back(std::move(step));
    }
    trace.reached = max_check_weight(out.code) <= w_target;
    return out;
}

}  // namespace homprod
