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

#include "homprod/experiments.h"

#include <chrono>
#include <random>

#include "homprod/chain_complex.h"
#include "homprod/css_code.h"
#include "homprod/distance.h"
#include "homprod/errors.h"
#include "homprod/gf4.h"
#include "homprod/homological_product.h"

namespace homprod {

namespace {

using nlohmann::json;

constexpr uint64_t MIXED_PRODUCT_BUDGET = uint64_t{1} << 36;

std::string compact(const BitMatrix &m) {
    std::string s;
    for (size_t r = 0; r < m.rows(); ++r) {
        s += (r ? "," : "") + m.row(r).str();
    }
    return s;
}

std::string compact(const Gf4Matrix &m) {
    std::string s;
    for (size_t r = 0; r < m.rows(); ++r) {
        s += (r ? "," : "") + m.row(r).str();
    }
    return s;
}

// Every invertible m x m matrix, ordered by the integer whose most significant bit is entry (0, 0).
std::vector<BitMatrix> all_invertible(size_t m) {
    std::vector<BitMatrix> out;
    for (uint64_t code = 0; code < (uint64_t{1} << (m * m)); ++code) {
        BitMatrix u(m, m);
        for (size_t i = 0; i < m * m; ++i) {
            u.set(i / m, i % m, (code >> (m * m - 1 - i)) & 1);
        }
        if (is_invertible(u)) {
            out.push_back(std::move(u));
        }
    }
    return out;
}

// Partial Fisher-Yates with modulo reduction: portable, unlike std::shuffle.
std::vector<size_t> sample_indices(size_t n, size_t k, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    k = std::min(k, n);
    for (size_t i = 0; i < k; ++i) {
        size_t j = i + size_t(rng() % (n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

class ClaimTracker {
   public:
    explicit ClaimTracker(ExperimentReport &r) : report_(r) {
    }
    void check(const std::string &id, bool holds) {
        if (!holds) {
            report_.violated.push_back(id);
        }
    }
    void finish() {
        report_.pass = report_.violated.empty();
    }

   private:
    ExperimentReport &report_;
};

SearchOptions search_options(size_t threads, uint64_t budget = SearchOptions{}.budget) {
    SearchOptions o;
    o.threads = threads;
    o.budget = budget;
    return o;
}

ExperimentReport steane_css_params(const ReproduceOptions &opt) {
    ExperimentReport r;
    ClaimTracker claims(r);
    BoundaryOperator d = boundary_from_checks(steane_basis(), BitMatrix::identity(3));
    CssCode code = code_from_complex(d);
    DistanceResult dist = distance_parallel(d, opt.threads);
    r.params = {{"basis", compact(steane_basis().vectors())}, {"u", "I"}};
    r.results = {{"n", code.n}, {"k", code.k}, {"w", code.w}, {"d_z", dist.d_z}, {"d_x", dist.d_x},
                 {"witness_z", dist.witness_z.hex()}, {"witness_x", dist.witness_x.hex()}};
    claims.check("params", code.n == 7 && code.k == 1 && code.w == 4 && dist.d_z == 3 && dist.d_x == 3);
    claims.finish();
    return r;
}

ExperimentReport steane_squared(const ReproduceOptions &opt) {
    ExperimentReport r;
    ClaimTracker claims(r);
    auto us = all_invertible(3);
    BoundaryOperator second = boundary_from_checks(steane_basis(), BitMatrix::identity(3));
    json rows = json::array();
    size_t symmetric = 0;
    size_t symmetric_d7 = 0;
    size_t asymmetric_d9 = 0;
    size_t max_w = 0;
    bool all_k1 = true;
    for (const auto &u : us) {
        ProductComplex p = product(boundary_from_checks(steane_basis(), u), second);
        CssCode code = code_from_complex(p.partial);
        DistanceResult d = distance_parallel(p.partial, opt.threads);
        bool sym = u == u.transposed();
        symmetric += sym;
        symmetric_d7 += sym && d.d_z == 7 && d.d_x == 7;
        asymmetric_d9 += !sym && d.d_z == 9 && d.d_x == 9;
        max_w = std::max(max_w, code.w);
        all_k1 = all_k1 && code.k == 1;
        rows.push_back({{"u", compact(u)}, {"symmetric", sym}, {"n", code.n}, {"k", code.k}, {"w", code.w},
                        {"d_z", d.d_z}, {"d_x", d.d_x}});
    }
    r.params = {{"v", "I"}, {"u_range", "all invertible 3x3"}};
    r.results = {{"per_u", rows},
                 {"u_count", us.size()},
                 {"symmetric_count", symmetric},
                 {"symmetric_with_d7", symmetric_d7},
                 {"asymmetric_with_d9", asymmetric_d9},
                 {"max_w", max_w}};
    claims.check("count", us.size() == 168);
    claims.check("k1", all_k1);
    claims.check("symmetric-d7", symmetric_d7 == symmetric);
    claims.check("asymmetric-d9", asymmetric_d9 == us.size() - symmetric);
    claims.check("weight", max_w <= 8);
    claims.finish();
    return r;
}

ExperimentReport fivequbit_squared(const ReproduceOptions &opt) {
    ExperimentReport r;
    ClaimTracker claims(r);
    auto us = enumerate_selfadjoint_invertible(2);
    std::vector<Gf4Boundary> factors;
    for (const auto &u : us) {
        factors.push_back(gf4_boundary_from_checks(five_qubit_basis(), u));
    }
    json rows = json::array();
    size_t d5 = 0;
    size_t max_w = 0;
    bool all_k1 = true;
    for (size_t i = 0; i < factors.size(); ++i) {
        for (size_t j = 0; j < factors.size(); ++j) {
            Gf4Boundary p = gf4_product(factors[i], factors[j]);
            auto d = gf4_distance(p, search_options(opt.threads));
            d5 += d.d == 5;
            max_w = std::max(max_w, p.check_weight());
            all_k1 = all_k1 && p.hom_dim() == 1;
            rows.push_back({{"u", compact(us[i])}, {"v", compact(us[j])}, {"k", p.hom_dim()},
                            {"w", p.check_weight()}, {"d", d.d}, {"witness", d.witness.str()}});
        }
    }
    r.params = {{"basis", compact(five_qubit_basis())}, {"pairs", "all (U, V)"}};
    r.results = {{"per_pair", rows}, {"selfadjoint_count", us.size()}, {"pairs_with_d5", d5}, {"max_w", max_w}};
    claims.check("count", us.size() == 10);
    claims.check("k1", all_k1);
    claims.check("d5", d5 == factors.size() * factors.size());
    claims.check("weight", max_w <= 8);
    claims.finish();
    return r;
}

ExperimentReport steane_by_fivequbit(const ReproduceOptions &opt) {
    ExperimentReport r;
    ClaimTracker claims(r);
    const size_t bound = 6;
    auto u5 = enumerate_selfadjoint_invertible(2);
    auto u7 = enumerate_selfadjoint_invertible(3);
    auto picks = sample_indices(u7.size(), opt.max_steane_samples, opt.seed);
    SearchOptions search = search_options(opt.threads, MIXED_PRODUCT_BUDGET);

    size_t tested = 0;
    size_t with_witness = 0;
    bool all_k1 = true;
    json failures = json::array();
    json witnesses = json::array();
    bool stopped = false;
    for (size_t j : picks) {
        Gf4Boundary steane = gf4_boundary_from_checks(steane_basis_gf4(), u7[j]);
        for (size_t i = 0; i < u5.size() && !stopped; ++i) {
            Gf4Boundary p = gf4_product(gf4_boundary_from_checks(five_qubit_basis(), u5[i]), steane);
            all_k1 = all_k1 && p.hom_dim() == 1;
            auto hit = gf4_distance_upper_bound(p, bound, search);
            ++tested;
            if (hit) {
                ++with_witness;
                witnesses.push_back({{"u5", compact(u5[i])}, {"u7", compact(u7[j])}, {"witness", hit->str()}});
                continue;
            }
            json f = {{"u5", compact(u5[i])}, {"u7", compact(u7[j])}};
            if (opt.exact_on_failure && failures.empty()) {
                auto d = gf4_distance(p, search);
                f["exact_d"] = d.d;
                f["exact_witness"] = d.witness.str();
            }
            failures.push_back(f);
            stopped = opt.stop_on_failure;
        }
        if (stopped) {
            break;
        }
    }
    r.params = {{"bound", bound},
                {"fivequbit_u", "all 10"},
                {"steane_u_population", u7.size()},
                {"steane_u_sampled", picks.size()},
                {"stop_on_failure", opt.stop_on_failure},
                {"budget", MIXED_PRODUCT_BUDGET}};
    r.results = {{"pairs_planned", picks.size() * u5.size()},
                 {"pairs_tested", tested},
                 {"pairs_with_witness", with_witness},
                 {"witnesses", witnesses},
                 {"failures", failures},
                 {"stopped_early", stopped}};
    claims.check("k1", all_k1);
    claims.check("low-weight", with_witness == tested && tested == picks.size() * u5.size());
    claims.finish();
    return r;
}

}  // namespace

const std::map<std::string, std::vector<Claim>> &reproduction_manifest() {
    static const std::map<std::string, std::vector<Claim>> manifest = {
        {"steane-css-params", {{"params", "the Steane boundary operator gives [[7,1,3]] with stabilizer weight 4"}}},
        {"steane-squared",
         {{"count", "there are 168 invertible 3x3 binary matrices U"},
          {"k1", "every product Steane(U) x Steane(I) has k = 1"},
          {"symmetric-d7", "d_z = d_x = 7 whenever U is symmetric"},
          {"asymmetric-d9", "d_z = d_x = 9 whenever U is not symmetric"},
          {"weight", "stabilizer weight is at most 8 for every U"}}},
        {"fivequbit-squared",
         {{"count", "there are exactly 10 invertible self-adjoint 2x2 matrices over GF(4)"},
          {"k1", "every product of two five-qubit boundary operators has k = 1"},
          {"d5", "d = 5 for all 100 (U, V) pairs"},
          {"weight", "check weight is at most 8"}}},
        {"steane-by-fivequbit",
         {{"k1", "every five-qubit x Steane product has k = 1"},
          {"low-weight", "every sampled pair has a nontrivial cycle of weight at most 6"}}},
    };
    return manifest;
}

nlohmann::json ExperimentReport::deterministic_json() const {
    return {{"name", name},   {"params", params}, {"results", results},
            {"pass", pass},   {"violated", violated}, {"seed", seed},
            {"threads", threads}};
}

nlohmann::json ExperimentReport::to_json() const {
    json j = deterministic_json();
    j["wall_seconds"] = wall_seconds;
    return j;
}

std::vector<std::string> reproduction_names() {
    return {"steane-css-params", "steane-squared", "fivequbit-squared", "steane-by-fivequbit"};
}

ExperimentReport run_reproduction(const std::string &name, const ReproduceOptions &options) {
    auto start = std::chrono::steady_clock::now();
    ExperimentReport r;
    if (name == "steane-css-params") {
        r = steane_css_params(options);
    } else if (name == "steane-squared") {
        r = steane_squared(options);
    } else if (name == "fivequbit-squared") {
        r = fivequbit_squared(options);
    } else if (name == "steane-by-fivequbit") {
        r = steane_by_fivequbit(options);
    } else {
        throw InvalidParameter("unknown experiment '" + name + "'");
    }
    r.name = name;
    r.seed = options.seed;
    r.threads = options.threads;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void MonteCarloParams::validate() const {
    if (!(c > 0 && c < 1)) {
        throw InvalidParameter("c must lie strictly between 0 and 1");
    }
    if (h > m || (m - h) % 2 != 0) {
        throw InvalidParameter("m - h must be even and non-negative");
    }
    if (m_prime > m) {
        throw InvalidParameter("m' must not exceed m");
    }
}

ExperimentReport run_montecarlo(const MonteCarloParams &p) {
    auto start = std::chrono::steady_clock::now();
    p.validate();
    if (p.samples > MONTE_CARLO_BUDGET || p.product_samples > MONTE_CARLO_BUDGET) {
        throw ResourceError("Monte-Carlo run asks for more than " + std::to_string(MONTE_CARLO_BUDGET) +
                            " evaluations");
    }
    ExperimentReport r;
    ClaimTracker claims(r);
    r.name = "montecarlo";
    r.seed = p.seed;
    r.threads = p.threads;
    r.params = {{"m", p.m},       {"h", p.h},
                {"m_prime", p.m_prime}, {"c", p.c},
                {"samples", p.samples}, {"product_samples", p.m <= 6 ? p.product_samples : 0}};

    std::mt19937_64 rng(p.seed);
    double threshold = p.c * double(p.m);
    size_t low = 0;
    size_t not_good = 0;
    std::map<size_t, size_t> kernel_min;
    for (size_t s = 0; s < p.samples; ++s) {
        BoundaryOperator d = random_boundary(p.m, p.h, rng);
        Basis ker = kernel_basis(d.matrix());
        if (ker.dim() > 0) {
            size_t w = min_nonzero_weight(ker, search_options(1)).weight;
            ++kernel_min[w];
            low += double(w) < threshold;
        }
        not_good += !is_good(d, p.m_prime);
    }
    json hist = json::object();
    for (auto [w, count] : kernel_min) {
        hist[std::to_string(w)] = count;
    }
    double denom = p.samples ? double(p.samples) : 1.0;
    r.results = {{"threshold", threshold},
                 {"low_weight_count", low},
                 {"low_weight_fraction", double(low) / denom},
                 {"kernel_min_histogram", hist},
                 {"not_good_count", not_good},
                 {"not_good_fraction", double(not_good) / denom}};

    if (p.m <= 6 && p.h > 0) {
        std::map<std::string, size_t> dist_hist;
        size_t sandwich_ok = 0;
        for (size_t s = 0; s < p.product_samples; ++s) {
            BoundaryOperator d1 = random_boundary(p.m, p.h, rng);
            BoundaryOperator d2 = random_boundary(p.m, p.h, rng);
            DistanceResult f1 = distance(d1);
            DistanceResult f2 = distance(d2);
            DistanceResult prod = distance_parallel(product(d1, d2).partial, p.threads);
            bool ok = std::max(f1.d_z, f2.d_z) <= prod.d_z && prod.d_z <= f1.d_z * f2.d_z &&
                      std::max(f1.d_x, f2.d_x) <= prod.d_x && prod.d_x <= f1.d_x * f2.d_x;
            sandwich_ok += ok;
            ++dist_hist[std::to_string(prod.d_z) + "," + std::to_string(prod.d_x)];
        }
        json dh = json::object();
        for (const auto &[key, count] : dist_hist) {
            dh[key] = count;
        }
        r.results["product_distance_histogram"] = dh;
        r.results["sandwich_holds"] = sandwich_ok;
        r.results["sandwich_fraction"] = p.product_samples ? double(sandwich_ok) / double(p.product_samples) : 1.0;
        claims.check("sandwich", sandwich_ok == p.product_samples);
    }
    claims.finish();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace homprod
