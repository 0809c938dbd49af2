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

#include "homprod/distance.h"

#include <chrono>
#include <string>

#include "gray_sweep.h"
#include "homprod/errors.h"

namespace homprod {

namespace {

std::vector<uint64_t> to_words(const BitVector &v) {
    return {v.words().begin(), v.words().end()};
}

detail::SweepProblem make_problem(const Basis &kernel, const Basis &image, uint64_t budget) {
    if (kernel.ambient_dim() != image.ambient_dim()) {
        throw DimensionError("kernel and image live in different spaces");
    }
    Basis reps = complement_in(image, kernel);
    if (reps.dim() == 0) {
        throw NoLogicalsError("span(kernel) / span(image) is trivial; there is no nontrivial class");
    }
    // Refuse before materializing the 2^h - 1 coset representatives.
    if (reps.dim() + image.dim() >= 63 || ((uint64_t{1} << reps.dim()) - 1) << image.dim() > budget) {
        throw ResourceError("enumeration needs (2^" + std::to_string(reps.dim()) + " - 1) x 2^" +
                            std::to_string(image.dim()) + " steps, over the budget of " + std::to_string(budget));
    }
    detail::SweepProblem p;
    p.length = kernel.ambient_dim();
    p.planes = 1;
    p.words_per_plane = words_for_bits(p.length);
    for (size_t i = 0; i < image.dim(); ++i) {
        p.generators.push_back(to_words(image.vector(i)));
    }
    for (uint64_t label = 1; label < (uint64_t{1} << reps.dim()); ++label) {
        BitVector rep(p.length);
        for (uint64_t bits = label; bits; bits &= bits - 1) {
            rep ^= reps.vector(std::countr_zero(bits));
        }
        p.coset_reps.push_back(to_words(rep));
    }
    return p;
}

void check_budget(const detail::SweepProblem &p, uint64_t budget) {
    uint64_t need = detail::sweep_size(p);
    if (need > budget) {
        throw ResourceError("enumeration needs " + std::to_string(p.coset_reps.size()) + " x 2^" +
                            std::to_string(p.generators.size()) + " = " + std::to_string(need) +
                            " steps, over the budget of " + std::to_string(budget));
    }
}

SectorSearch to_sector(const detail::SweepResult &r, size_t length) {
    SectorSearch s;
    s.weight = r.weight;
    s.witness = BitVector::from_words(length, r.vector);
    s.cosets_scanned = r.cosets_scanned;
    s.steps = r.steps;
    return s;
}

void verify_witness(const BitMatrix &check, const Basis &image, const BitVector &w) {
    if (!(check * w).is_zero() || in_span(w, image)) {
        throw std::logic_error("distance witness failed re-verification");
    }
}

DistanceResult run_distance(const BoundaryOperator &d, const SearchOptions &options) {
    auto start = std::chrono::steady_clock::now();
    if (d.hom_dim() == 0) {
        throw NoLogicalsError("boundary operator has H = 0; the code has no logical qubits");
    }
    const BitMatrix &delta = d.matrix();
    BitMatrix delta_t = delta.transposed();
    Basis image_z = image_basis(delta);
    Basis image_x = image_basis(delta_t);
    auto pz = make_problem(kernel_basis(delta), image_z, options.budget);
    auto px = make_problem(kernel_basis(delta_t), image_x, options.budget);
    check_budget(pz, options.budget);
    check_budget(px, options.budget);

    SectorSearch z = to_sector(detail::sweep_minimum(pz, options.threads), d.dim());
    SectorSearch x = to_sector(detail::sweep_minimum(px, options.threads), d.dim());
    verify_witness(delta, image_z, z.witness);
    verify_witness(delta_t, image_x, x.witness);

    DistanceResult out;
    out.d_z = z.weight;
    out.d_x = x.weight;
    out.witness_z = std::move(z.witness);
    out.witness_x = std::move(x.witness);
    out.cosets_scanned = z.cosets_scanned + x.cosets_scanned;
    out.steps = z.steps + x.steps;
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

SectorSearch min_weight_outside(const Basis &kernel, const Basis &image, const SearchOptions &options) {
    auto p = make_problem(kernel, image, options.budget);
    check_budget(p, options.budget);
    return to_sector(detail::sweep_minimum(p, options.threads), kernel.ambient_dim());
}

std::optional<BitVector> first_outside_at_most(const Basis &kernel, const Basis &image, size_t bound,
                                               const SearchOptions &options) {
    auto p = make_problem(kernel, image, options.budget);
    check_budget(p, options.budget);
    auto r = detail::sweep_first_at_most(p, bound, options.threads);
    if (!r.found) {
        return std::nullopt;
    }
    return BitVector::from_words(kernel.ambient_dim(), r.vector);
}

SectorSearch min_nonzero_weight(const Basis &span, const SearchOptions &options) {
    if (span.dim() == 0) {
        throw InvalidParameter("an empty span has no nonzero vector");
    }
    detail::SweepProblem p;
    p.length = span.ambient_dim();
    p.words_per_plane = words_for_bits(p.length);
    for (size_t i = 0; i < span.dim(); ++i) {
        p.generators.push_back(to_words(span.vector(i)));
    }
    p.coset_reps.push_back(std::vector<uint64_t>(p.words_per_plane, 0));
    check_budget(p, options.budget);
    return to_sector(detail::sweep_minimum(p, options.threads), p.length);
}

DistanceResult distance(const BoundaryOperator &d, const SearchOptions &options) {
    SearchOptions serial = options;
    serial.threads = 1;
    return run_distance(d, serial);
}

DistanceResult distance_parallel(const BoundaryOperator &d, size_t threads, SearchOptions options) {
    options.threads = threads;
    if (detail::resolve_threads(threads) == 1) {
        return distance(d, options);
    }
    return run_distance(d, options);
}

std::optional<BitVector> distance_upper_bound(const BoundaryOperator &d, size_t bound,
                                              const SearchOptions &options) {
    if (d.hom_dim() == 0) {
        throw NoLogicalsError("boundary operator has H = 0; the code has no logical qubits");
    }
    Basis image = image_basis(d.matrix());
    auto hit = first_outside_at_most(kernel_basis(d.matrix()), image, bound, options);
    if (hit) {
        verify_witness(d.matrix(), image, *hit);
    }
    return hit;
}

DistanceResult css_distance(const CssCode &code, const SearchOptions &options) {
    auto start = std::chrono::steady_clock::now();
    if (code.k == 0) {
        throw NoLogicalsError("code has k = 0");
    }
    Basis stab_z = row_space_basis(code.a_z);
    Basis stab_x = row_space_basis(code.a_x);
    SectorSearch z = min_weight_outside(kernel_basis(code.a_x), stab_z, options);
    SectorSearch x = min_weight_outside(kernel_basis(code.a_z), stab_x, options);
    verify_witness(code.a_x, stab_z, z.witness);
    verify_witness(code.a_z, stab_x, x.witness);
    DistanceResult out;
    out.d_z = z.weight;
    out.d_x = x.weight;
    out.witness_z = std::move(z.witness);
    out.witness_x = std::move(x.witness);
    out.cosets_scanned = z.cosets_scanned + x.cosets_scanned;
    out.steps = z.steps + x.steps;
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace homprod
