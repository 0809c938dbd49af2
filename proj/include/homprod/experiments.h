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

#ifndef HOMPROD_EXPERIMENTS_H
#define HOMPROD_EXPERIMENTS_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace homprod {

/// Fixed seed used whenever a randomized command is not given one.
constexpr uint64_t DEFAULT_SEED = 1;

/// One expected value of a reproduction run. A failing run lists the ids of the claims it violated.
struct Claim {
    std::string id;
    std::string statement;
};

/// Expected values for every `reproduce` experiment, keyed by experiment name.
const std::map<std::string, std::vector<Claim>> &reproduction_manifest();

struct ExperimentReport {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    bool pass = false;
    /// Claim ids (from the manifest) that did not hold.
    std::vector<std::string> violated;
    uint64_t seed = DEFAULT_SEED;
    size_t threads = 1;
    double wall_seconds = 0;

    /// Everything except wall time: two runs with the same seed must agree on this exactly.
    nlohmann::json deterministic_json() const;
    nlohmann::json to_json() const;
};

struct ReproduceOptions {
    uint64_t seed = DEFAULT_SEED;
    /// Worker threads for distance sweeps; 0 means all hardware threads.
    size_t threads = 1;
    /// steane-by-fivequbit: cap on sampled 3 x 3 self-adjoint matrices for the seven-qubit side.
    size_t max_steane_samples = 200;
    /// steane-by-fivequbit: stop at the first pair without a low-weight cycle (the claim is then already false).
    bool stop_on_failure = true;
    /// steane-by-fivequbit: also compute the exact distance of the first failing pair.
    bool exact_on_failure = true;
};

/// Names accepted by run_reproduction, in a fixed order.
std::vector<std::string> reproduction_names();

/// Runs one reproduction experiment. Throws InvalidParameter for unknown names.
ExperimentReport run_reproduction(const std::string &name, const ReproduceOptions &options = {});

struct MonteCarloParams {
    size_t m = 12;
    size_t h = 2;
    size_t m_prime = 11;
    double c = 0.1;
    size_t samples = 500;
    uint64_t seed = DEFAULT_SEED;
    /// Random products sampled for the exact distance distribution; only used when m <= 6.
    size_t product_samples = 100;
    size_t threads = 1;

    /// Throws InvalidParameter unless 0 < c < 1, m - h is even and non-negative, and m' <= m.
    void validate() const;
};

/// Largest number of kernel-minimum evaluations a Monte-Carlo run may request.
constexpr size_t MONTE_CARLO_BUDGET = 1000000;

/// Samples random boundary operators and reports (a) the fraction whose kernel holds a nonzero vector of weight
/// < c M (exact kernel minimum), (b) the fraction that is not good at m', and (c) for m <= 6 the exact
/// distances of random products with the check max(d_1, d_2) <= d <= d_1 d_2 in each sector.
/// Throws ResourceError if samples exceeds MONTE_CARLO_BUDGET.
ExperimentReport run_montecarlo(const MonteCarloParams &p);

}  // namespace homprod

#endif
