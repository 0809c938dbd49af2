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

#include "gray_sweep.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "homprod/errors.h"

namespace homprod::detail {

namespace {

struct ChunkOutcome {
    bool found = false;
    size_t weight = std::numeric_limits<size_t>::max();
    std::vector<uint64_t> vector;
    uint64_t step = 0;
};

struct Plan {
    size_t stride;
    size_t low_bits;
    uint64_t chunks_per_coset;
    uint64_t items;
    std::vector<uint64_t> flat_generators;
};

Plan make_plan(const SweepProblem &p) {
    Plan plan;
    plan.stride = p.planes * p.words_per_plane;
    size_t total = p.generators.size();
    if (total >= 63) {
        throw ResourceError("sweep over 2^" + std::to_string(total) + " vectors per coset is not supported");
    }
    size_t high = std::min(total, CHUNK_BITS);
    plan.low_bits = total - high;
    plan.chunks_per_coset = uint64_t{1} << high;
    plan.items = plan.chunks_per_coset * p.coset_reps.size();
    for (const auto &g : p.generators) {
        if (g.size() != plan.stride) {
            throw DimensionError("generator word count mismatch");
        }
        plan.flat_generators.insert(plan.flat_generators.end(), g.begin(), g.end());
    }
    for (const auto &r : p.coset_reps) {
        if (r.size() != plan.stride) {
            throw DimensionError("representative word count mismatch");
        }
    }
    return plan;
}

void chunk_start(const SweepProblem &p, const Plan &plan, uint64_t item, uint64_t *out) {
    uint64_t coset = item / plan.chunks_per_coset;
    uint64_t chunk = item % plan.chunks_per_coset;
    const auto &rep = p.coset_reps[coset];
    std::copy(rep.begin(), rep.end(), out);
    uint64_t s = chunk << plan.low_bits;
    for (uint64_t g = s ^ (s >> 1); g; g &= g - 1) {
        const uint64_t *gen = plan.flat_generators.data() + std::countr_zero(g) * plan.stride;
        for (size_t k = 0; k < plan.stride; ++k) {
            out[k] ^= gen[k];
        }
    }
}

template <size_t P, size_t W>
void run_chunk(const SweepProblem &p, const Plan &plan, uint64_t item, bool first_mode, size_t bound,
               bool skip_zero, ChunkOutcome &out) {
    const size_t nw = W ? W : p.words_per_plane;
    const size_t stride = P * nw;
    std::array<uint64_t, P *(W ? W : 1)> fixed{};
    std::vector<uint64_t> dynamic;
    uint64_t *cur = fixed.data();
    if constexpr (W == 0) {
        dynamic.resize(stride);
        cur = dynamic.data();
    }
    auto weight = [&](const uint64_t *v) {
        size_t w = 0;
        for (size_t k = 0; k < nw; ++k) {
            uint64_t x = v[k];
            if constexpr (P == 2) {
                x |= v[nw + k];
            }
            w += std::popcount(x);
        }
        return w;
    };

    size_t best = out.weight;
    auto consider = [&](size_t w, uint64_t step) -> bool {
        if (skip_zero && w == 0) {
            return false;
        }
        if (first_mode) {
            out.found = true;
            out.weight = w;
            out.vector.assign(cur, cur + stride);
            out.step = step;
            return true;
        }
        if (w < best || !out.found || position_lex_less(cur, out.vector.data(), P, nw)) {
            out.found = true;
            out.weight = best = w;
            out.vector.assign(cur, cur + stride);
            out.step = step;
        }
        return false;
    };

    chunk_start(p, plan, item, cur);
    const size_t limit = first_mode ? bound : std::numeric_limits<size_t>::max();
    size_t w = weight(cur);
    if ((first_mode ? w <= limit : w <= best) && consider(w, 0)) {
        return;
    }
    const uint64_t n_steps = uint64_t{1} << plan.low_bits;
    const uint64_t *gens = plan.flat_generators.data();
    for (uint64_t t = 1; t < n_steps; ++t) {
        const uint64_t *g = gens + std::countr_zero(t) * stride;
        for (size_t k = 0; k < stride; ++k) {
            cur[k] ^= g[k];
        }
        w = weight(cur);
        if (first_mode) {
            if (w <= limit && consider(w, t)) {
                return;
            }
        } else if (w <= best) {
            consider(w, t);
        }
    }
}

using ChunkFn = void (*)(const SweepProblem &, const Plan &, uint64_t, bool, size_t, bool, ChunkOutcome &);

template <size_t P>
ChunkFn pick_for_planes(size_t words) {
    switch (words) {
        case 1:
            return &run_chunk<P, 1>;
        case 2:
            return &run_chunk<P, 2>;
        case 3:
            return &run_chunk<P, 3>;
        case 4:
            return &run_chunk<P, 4>;
        default:
            return &run_chunk<P, 0>;
    }
}

ChunkFn pick_kernel(const SweepProblem &p) {
    if (p.planes == 1) {
        return pick_for_planes<1>(p.words_per_plane);
    }
    if (p.planes == 2) {
        return pick_for_planes<2>(p.words_per_plane);
    }
    throw InvalidParameter("sweep supports one or two bit planes");
}

bool outcome_less(const ChunkOutcome &a, const ChunkOutcome &b, const SweepProblem &p) {
    if (!a.found) {
        return false;
    }
    if (!b.found) {
        return true;
    }
    if (a.weight != b.weight) {
        return a.weight < b.weight;
    }
    return position_lex_less(a.vector.data(), b.vector.data(), p.planes, p.words_per_plane);
}

bool has_zero_rep(const SweepProblem &p) {
    return std::any_of(p.coset_reps.begin(), p.coset_reps.end(), [](const std::vector<uint64_t> &r) {
        return std::all_of(r.begin(), r.end(), [](uint64_t x) { return x == 0; });
    });
}

SweepResult run(const SweepProblem &p, bool first_mode, size_t bound, size_t threads) {
    Plan plan = make_plan(p);
    ChunkFn kernel = pick_kernel(p);
    bool skip_zero = has_zero_rep(p);
    threads = std::max<size_t>(1, std::min<uint64_t>(resolve_threads(threads), std::max<uint64_t>(plan.items, 1)));

    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> first_hit{std::numeric_limits<uint64_t>::max()};
    std::mutex mu;
    ChunkOutcome best;
    uint64_t best_item = std::numeric_limits<uint64_t>::max();

    auto worker = [&]() {
        ChunkOutcome local;
        uint64_t local_item = std::numeric_limits<uint64_t>::max();
        while (true) {
            uint64_t item = next.fetch_add(1);
            if (item >= plan.items || (first_mode && item > first_hit.load())) {
                break;
            }
            if (first_mode) {
                ChunkOutcome o;
                kernel(p, plan, item, true, bound, skip_zero, o);
                if (o.found) {
                    uint64_t prev = first_hit.load();
                    while (item < prev && !first_hit.compare_exchange_weak(prev, item)) {
                    }
                    if (item < local_item) {
                        local = std::move(o);
                        local_item = item;
                    }
                }
            } else {
                // Continue from the thread-local best so the in-chunk prune is tight.
                ChunkOutcome o = local;
                kernel(p, plan, item, false, bound, skip_zero, o);
                if (o.found && (!local.found || o.vector != local.vector)) {
                    local = std::move(o);
                    local_item = item;
                }
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        if (first_mode) {
            if (local.found && local_item < best_item) {
                best = std::move(local);
                best_item = local_item;
            }
        } else if (outcome_less(local, best, p)) {
            best = std::move(local);
            best_item = local_item;
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    SweepResult result;
    uint64_t per_coset = plan.chunks_per_coset << plan.low_bits;
    if (first_mode && best.found) {
        result.cosets_scanned = best_item / plan.chunks_per_coset + 1;
        result.steps = (best_item << plan.low_bits) + best.step + 1;
    } else {
        result.cosets_scanned = p.coset_reps.size();
        result.steps = per_coset * p.coset_reps.size();
    }
    result.found = best.found;
    result.weight = best.weight;
    result.vector = std::move(best.vector);
    return result;
}

}  // namespace

bool position_lex_less(const uint64_t *a, const uint64_t *b, size_t planes, size_t words_per_plane) {
    for (size_t k = 0; k < words_per_plane; ++k) {
        uint64_t diff = 0;
        for (size_t p = 0; p < planes; ++p) {
            diff |= a[p * words_per_plane + k] ^ b[p * words_per_plane + k];
        }
        if (diff) {
            uint64_t low = diff & -diff;
            unsigned code_a = 0;
            unsigned code_b = 0;
            for (size_t p = 0; p < planes; ++p) {
                code_a |= unsigned((a[p * words_per_plane + k] & low) != 0) << p;
                code_b |= unsigned((b[p * words_per_plane + k] & low) != 0) << p;
            }
            return code_a < code_b;
        }
    }
    return false;
}

size_t resolve_threads(size_t requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

uint64_t sweep_size(const SweepProblem &problem) {
    size_t g = problem.generators.size();
    if (g >= 63) {
        return std::numeric_limits<uint64_t>::max();
    }
    unsigned __int128 total = (unsigned __int128)(uint64_t{1} << g) * problem.coset_reps.size();
    if (total > std::numeric_limits<uint64_t>::max()) {
        return std::numeric_limits<uint64_t>::max();
    }
    return uint64_t(total);
}

SweepResult sweep_minimum(const SweepProblem &problem, size_t threads) {
    return run(problem, false, 0, threads);
}

SweepResult sweep_first_at_most(const SweepProblem &problem, size_t bound, size_t threads) {
    return run(problem, true, bound, threads);
}

std::vector<std::vector<uint64_t>> sweep_enumerate(const SweepProblem &problem, size_t coset) {
    Plan plan = make_plan(problem);
    std::vector<std::vector<uint64_t>> out;
    std::vector<uint64_t> cur(plan.stride);
    for (uint64_t chunk = 0; chunk < plan.chunks_per_coset; ++chunk) {
        chunk_start(problem, plan, coset * plan.chunks_per_coset + chunk, cur.data());
        out.push_back(cur);
        for (uint64_t t = 1; t < (uint64_t{1} << plan.low_bits); ++t) {
            const uint64_t *g = plan.flat_generators.data() + std::countr_zero(t) * plan.stride;
            for (size_t k = 0; k < plan.stride; ++k) {
                cur[k] ^= g[k];
            }
            out.push_back(cur);
        }
    }
    return out;
}

}  // namespace homprod::detail
