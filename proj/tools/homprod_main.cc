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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "homprod/circuit.h"
#include "homprod/counting.h"
#include "homprod/css_code.h"
#include "homprod/distance.h"
#include "homprod/errors.h"
#include "homprod/experiments.h"
#include "homprod/gf4.h"
#include "homprod/homological_product.h"
#include "homprod/io.h"
#include "homprod/weight_reduction.h"

using namespace homprod;
using nlohmann::json;

namespace {

// Exit codes.
constexpr int EXIT_PASS = 0;
constexpr int EXIT_CLAIM_FAILED = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_RESOURCE = 3;

struct CommonFlags {
    bool json = false;
    size_t threads = 0;
    uint64_t seed = DEFAULT_SEED;
};

/// --threads wins; otherwise HOMPROD_THREADS; otherwise the hardware concurrency.
size_t resolve_threads(size_t flag) {
    if (flag > 0) {
        return flag;
    }
    if (const char *env = std::getenv("HOMPROD_THREADS")) {
        try {
            size_t v = std::stoul(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw InvalidParameter(std::string("HOMPROD_THREADS must be a positive integer, got '") + env + "'");
    }
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

void add_common(CLI::App *cmd, CommonFlags &f, bool threads, bool seed) {
    cmd->add_flag("--json", f.json, "Print a JSON document instead of text");
    if (threads) {
        cmd->add_option("--threads", f.threads, "Worker threads (default: $HOMPROD_THREADS or all cores)");
    }
    if (seed) {
        cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
    }
}

bool looks_like_css(const std::string &text) {
    return text.rfind("CSS", 0) == 0 || text.find("\nCSS") != std::string::npos;
}

json opt_json(const std::optional<size_t> &v) {
    return v ? json(*v) : json(nullptr);
}

json code_json(const CssCode &c) {
    return {{"n", c.n}, {"k", c.k}, {"w", c.w}, {"d_z", opt_json(c.d_z)}, {"d_x", opt_json(c.d_x)}};
}

void emit(const CommonFlags &f, const json &j, const std::string &text) {
    if (f.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

void write_or_print(const std::string &path, const std::string &contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
    } else {
        write_text_file(path, contents);
    }
}

std::string describe(const CssCode &c) {
    std::string s = "[[" + std::to_string(c.n) + "," + std::to_string(c.k) + ",";
    if (c.d_z && c.d_x) {
        s += std::to_string(std::min(*c.d_z, *c.d_x));
    } else {
        s += "?";
    }
    return s + "]] w=" + std::to_string(c.w) + "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Homological product codes: construction, distance, counting and encoders"};
    app.require_subcommand(1);

    // gen-random
    CommonFlags gen_f;
    size_t gen_m = 0, gen_h = 0;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen-random", "Sample a uniformly random M x M boundary operator with H(delta)=H");
    gen->add_option("--m", gen_m, "Dimension M")->required();
    gen->set_help_flag("--help", "Print this help message and exit");
    gen->add_option("--h", gen_h, "Homological dimension H")->required();
    gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");
    add_common(gen, gen_f, false, true);

    // product
    CommonFlags prod_f;
    std::string prod_a, prod_b, prod_out;
    auto *prod = app.add_subcommand("product", "Homological product of two boundary operators");
    prod->add_option("a", prod_a, "First operator file")->required();
    prod->add_option("b", prod_b, "Second operator file")->required();
    prod->add_option("-o,--out", prod_out, "Output file (default: stdout)");
    add_common(prod, prod_f, false, false);

    // distance
    CommonFlags dist_f;
    std::string dist_in;
    std::optional<size_t> dist_bound;
    auto *dist = app.add_subcommand("distance", "Exact CSS distance of a boundary operator or code file");
    dist->add_option("file", dist_in, "Boundary operator or CSS code file")->required();
    dist->add_option("--bound", dist_bound, "Stop at the first nontrivial cycle of weight <= B");
    add_common(dist, dist_f, true, false);

    // count
    CommonFlags count_f;
    std::string count_kind;
    std::vector<size_t> count_params;
    bool count_oracle = false;
    auto *count = app.add_subcommand("count", "Exact counting formulas, optionally cross-checked by brute force");
    count->add_option("kind", count_kind, "rank | ext | kernel | gamma")
        ->required()
        ->check(CLI::IsMember({"rank", "ext", "kernel", "gamma"}));
    count->add_option("params", count_params,
                      "rank: a b r | ext: a r A R | kernel: L H r | gamma: M H M' R")
        ->required();
    count->add_flag("--oracle", count_oracle, "Also run the brute-force oracle");
    add_common(count, count_f, false, true);

    // encode
    CommonFlags enc_f;
    std::vector<std::string> enc_in;
    std::string enc_out;
    bool enc_verify = false;
    auto *enc = app.add_subcommand("encode", "CNOT encoding circuit for an operator, or for the product of two");
    enc->add_option("files", enc_in, "One operator (factor encoder) or two (product encoder)")
        ->required()
        ->expected(1, 2);
    enc->add_option("-o,--out", enc_out, "Circuit output file (default: stdout)");
    enc->add_flag("--verify", enc_verify, "Check the circuit's output stabilizer group");
    add_common(enc, enc_f, false, false);

    // reduce
    CommonFlags red_f;
    std::string red_in, red_out, red_trace, red_strategy = "rr";
    size_t red_target = 0, red_max_steps = 0;
    auto *red = app.add_subcommand("reduce", "Lower the stabilizer weight of a CSS code by splitting checks");
    red->add_option("code", red_in, "CSS code file")->required();
    red->add_option("--target", red_target, "Target maximum check weight")->required();
    red->add_option("--strategy", red_strategy, "rr (round-robin) or rand")
        ->check(CLI::IsMember({"rr", "rand"}))
        ->capture_default_str();
    red->add_option("--max-steps", red_max_steps, "Step cap (default: 64 n)");
    red->add_option("-o,--out", red_out, "Reduced code output file");
    red->add_option("--trace", red_trace, "Write the split trace as JSON");
    add_common(red, red_f, false, true);

    // gf4
    auto *gf4 = app.add_subcommand("gf4", "GF(4)-linear single-sector codes");
    gf4->require_subcommand(1);
    CommonFlags g_enum_f;
    size_t g_enum_m = 2;
    auto *g_enum = gf4->add_subcommand("enumerate", "List invertible self-adjoint m x m matrices");
    g_enum->add_option("--m", g_enum_m, "Matrix size (<= 3)")->capture_default_str();
    add_common(g_enum, g_enum_f, false, false);

    CommonFlags g_build_f;
    std::string g_build_basis, g_build_u, g_build_out;
    auto *g_build = gf4->add_subcommand("from-checks", "Boundary operator A U A* from a check basis and U");
    g_build->add_option("basis", g_build_basis, "Check basis file (GF4 block, one row per check)")->required();
    g_build->add_option("u", g_build_u, "Self-adjoint invertible U file (GF4 block)")->required();
    g_build->add_option("-o,--out", g_build_out, "Output file (default: stdout)");
    add_common(g_build, g_build_f, false, false);

    CommonFlags g_prod_f;
    std::string g_prod_a, g_prod_b, g_prod_out;
    auto *g_prod = gf4->add_subcommand("product", "Homological product of two GF(4) boundary operators");
    g_prod->add_option("a", g_prod_a, "First operator file")->required();
    g_prod->add_option("b", g_prod_b, "Second operator file")->required();
    g_prod->add_option("-o,--out", g_prod_out, "Output file (default: stdout)");
    add_common(g_prod, g_prod_f, false, false);

    CommonFlags g_dist_f;
    std::string g_dist_in;
    std::optional<size_t> g_dist_bound;
    auto *g_dist = gf4->add_subcommand("distance", "Exact distance of a GF(4) boundary operator");
    g_dist->add_option("file", g_dist_in, "Operator file")->required();
    g_dist->add_option("--bound", g_dist_bound, "Stop at the first nontrivial cycle of weight <= B");
    add_common(g_dist, g_dist_f, true, false);

    // reproduce
    CommonFlags rep_f;
    std::string rep_name;
    ReproduceOptions rep_opt;
    bool rep_keep_going = false;
    auto *rep = app.add_subcommand("reproduce", "Re-run a published experiment and check its claims");
    std::vector<std::string> choices = reproduction_names();
    choices.push_back("all");
    rep->add_option("name", rep_name, "Experiment name or 'all'")->required()->check(CLI::IsMember(choices));
    rep->add_option("--max-samples", rep_opt.max_steane_samples, "Sampled Steane-side U for steane-by-fivequbit")
        ->capture_default_str();
    rep->add_flag("--keep-going", rep_keep_going, "Do not stop at the first failing pair");
    add_common(rep, rep_f, true, true);

    // montecarlo
    CommonFlags mc_f;
    MonteCarloParams mc;
    auto *mcc = app.add_subcommand("montecarlo", "Sampled statistics of random boundary operators and products");
    mcc->add_option("--m", mc.m, "Dimension M")->capture_default_str();
    mcc->set_help_flag("--help", "Print this help message and exit");
    mcc->add_option("--h", mc.h, "Homological dimension H")->capture_default_str();
    mcc->add_option("--m-prime", mc.m_prime, "Goodness cutoff M'")->capture_default_str();
    mcc->add_option("--c", mc.c, "Weight threshold constant, 0 < c < 1")->capture_default_str();
    mcc->add_option("--samples", mc.samples, "Kernel-minimum samples")->capture_default_str();
    mcc->add_option("--product-samples", mc.product_samples, "Product distance samples (only for M <= 6)")
        ->capture_default_str();
    add_common(mcc, mc_f, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help exits 0; every other parse failure is a usage error.
        return app.exit(e) == 0 ? EXIT_PASS : EXIT_USAGE;
    }

    try {
        if (*gen) {
            std::mt19937_64 rng(gen_f.seed);
            BoundaryOperator d = random_boundary(gen_m, gen_h, rng);
            if (gen_f.json && gen_out.empty()) {
                std::cout << json{{"m", gen_m}, {"h", gen_h}, {"seed", gen_f.seed}, {"delta", d.matrix().str()}}.dump(2)
                          << "\n";
            } else {
                write_or_print(gen_out, format_boundary(d));
            }
        } else if (*prod) {
            ProductComplex p = product(parse_boundary(read_text_file(prod_a)), parse_boundary(read_text_file(prod_b)));
            write_or_print(prod_out, format_boundary(p.partial));
            if (!prod_out.empty()) {
                CssCode c = code_from_complex(p.partial);
                emit(prod_f, code_json(c), describe(c));
            }
        } else if (*dist) {
            std::string text = read_text_file(dist_in);
            SearchOptions opts;
            opts.threads = resolve_threads(dist_f.threads);
            if (looks_like_css(text)) {
                CssCode c = parse_css(text);
                if (dist_bound) {
                    throw InvalidParameter("--bound requires a boundary operator file");
                }
                DistanceResult r = css_distance(c, opts);
                c.d_z = r.d_z;
                c.d_x = r.d_x;
                json j = code_json(c);
                j["witness_z"] = r.witness_z.hex();
                j["witness_x"] = r.witness_x.hex();
                j["steps"] = r.steps;
                j["threads"] = opts.threads;
                emit(dist_f, j, describe(c));
            } else {
                BoundaryOperator d = parse_boundary(text);
                if (dist_bound) {
                    auto hit = distance_upper_bound(d, *dist_bound, opts);
                    json j = {{"bound", *dist_bound}, {"found", bool(hit)},
                              {"witness", hit ? json(hit->hex()) : json(nullptr)}, {"threads", opts.threads}};
                    emit(dist_f, j,
                         hit ? "nontrivial cycle of weight " + std::to_string(hit->weight()) + ": " + hit->hex() + "\n"
                             : "no nontrivial cycle of weight <= " + std::to_string(*dist_bound) + "\n");
                } else {
                    DistanceResult r = distance_parallel(d, opts.threads, opts);
                    json j = {{"d_z", r.d_z},
                              {"d_x", r.d_x},
                              {"witness_z", r.witness_z.hex()},
                              {"witness_x", r.witness_x.hex()},
                              {"cosets_scanned", r.cosets_scanned},
                              {"steps", r.steps},
                              {"wall_seconds", r.wall_seconds},
                              {"threads", opts.threads}};
                    emit(dist_f, j,
                         "d_z=" + std::to_string(r.d_z) + " d_x=" + std::to_string(r.d_x) +
                             "\nwitness_z=" + r.witness_z.hex() + "\nwitness_x=" + r.witness_x.hex() + "\n");
                }
            }
        } else if (*count) {
            CountKind kind = parse_count_kind(count_kind);
            ExactCount exact = exact_count(kind, count_params);
            json j = {{"kind", count_kind}, {"params", count_params}, {"exact", exact.str()}};
            std::string text = "exact  " + exact.str() + "\n";
            if (count_oracle) {
                ExactCount brute = brute_count(kind, count_params, count_f.seed);
                bool match = brute.value == exact.value;
                j["oracle"] = brute.str();
                j["match"] = match;
                j["seed"] = count_f.seed;
                text += "oracle " + brute.str() + (match ? "  (match)\n" : "  (MISMATCH)\n");
                emit(count_f, j, text);
                return match ? EXIT_PASS : EXIT_CLAIM_FAILED;
            }
            emit(count_f, j, text);
        } else if (*enc) {
            EncodingCircuit circuit;
            bool ok = true;
            if (enc_in.size() == 1) {
                BoundaryOperator d = parse_boundary(read_text_file(enc_in[0]));
                circuit = factor_encoder(d);
                ok = !enc_verify || verify_encoder(circuit, d);
            } else {
                ProductComplex p =
                    product(parse_boundary(read_text_file(enc_in[0])), parse_boundary(read_text_file(enc_in[1])));
                circuit = product_encoder(p);
                ok = !enc_verify || verify_encoder(circuit, p);
            }
            write_or_print(enc_out, format_circuit(circuit));
            if (!enc_out.empty() || enc_f.json) {
                json j = {{"qubits", circuit.n_qubits}, {"gates", circuit.gates.size()},
                          {"data_qubits", circuit.data_qubits()}};
                if (enc_verify) {
                    j["verified"] = ok;
                }
                emit(enc_f, j,
                     std::to_string(circuit.gates.size()) + " CNOTs on " + std::to_string(circuit.n_qubits) +
                         " qubits" + (enc_verify ? (ok ? ", verified\n" : ", VERIFICATION FAILED\n") : "\n"));
            }
            if (!ok) {
                std::cerr << "error: encoder verification failed\n";
                return EXIT_CLAIM_FAILED;
            }
        } else if (*red) {
            CssCode c = parse_css(read_text_file(red_in));
            SplitStrategy strategy = red_strategy == "rr" ? SplitStrategy::RoundRobin : SplitStrategy::Random;
            ReductionResult r = reduce_weights(c, red_target, strategy, red_max_steps, red_f.seed);
            if (!red_out.empty()) {
                write_text_file(red_out, format_css(r.code));
            }
            json steps = json::array();
            for (const auto &s : r.trace.steps) {
                steps.push_back({{"type", s.type == CheckType::Z ? "Z" : "X"}, {"stab", s.stab}, {"t1", s.t1}});
            }
            json trace = {{"target", red_target},         {"strategy", red_strategy},
                          {"seed", red_f.seed},           {"reached", r.trace.reached},
                          {"steps", steps},               {"weight_history", r.trace.weight_history},
                          {"n_history", r.trace.n_history}};
            if (!red_trace.empty()) {
                write_text_file(red_trace, trace.dump(2) + "\n");
            }
            json j = {{"input", code_json(c)}, {"output", code_json(r.code)}, {"steps", r.trace.steps.size()},
                      {"reached", r.trace.reached}, {"seed", red_f.seed}};
            emit(red_f, j,
                 describe(c) + "-> " + describe(r.code) + std::to_string(r.trace.steps.size()) + " splits, target " +
                     (r.trace.reached ? "reached\n" : "NOT reached\n"));
            if (red_out.empty() && !red_f.json) {
                std::cout << format_css(r.code);
            }
            return r.trace.reached ? EXIT_PASS : EXIT_CLAIM_FAILED;
        } else if (*gf4) {
            if (*g_enum) {
                auto us = enumerate_selfadjoint_invertible(g_enum_m);
                json list = json::array();
                std::string text;
                for (const auto &u : us) {
                    list.push_back(u.str());
                    text += format_gf4_matrix(u) + "\n";
                }
                emit(g_enum_f, {{"m", g_enum_m}, {"count", us.size()}, {"matrices", list}},
                     "# " + std::to_string(us.size()) + " matrices\n" + text);
            } else if (*g_build) {
                Gf4Boundary d = gf4_boundary_from_checks(parse_gf4_matrix(read_text_file(g_build_basis)),
                                                         parse_gf4_matrix(read_text_file(g_build_u)));
                write_or_print(g_build_out, format_gf4_matrix(d.matrix()));
            } else if (*g_prod) {
                Gf4Boundary p = gf4_product(Gf4Boundary(parse_gf4_matrix(read_text_file(g_prod_a))),
                                            Gf4Boundary(parse_gf4_matrix(read_text_file(g_prod_b))));
                write_or_print(g_prod_out, format_gf4_matrix(p.matrix()));
                if (!g_prod_out.empty()) {
                    emit(g_prod_f, {{"n", p.dim()}, {"k", p.hom_dim()}, {"w", p.check_weight()}},
                         "n=" + std::to_string(p.dim()) + " k=" + std::to_string(p.hom_dim()) +
                             " w=" + std::to_string(p.check_weight()) + "\n");
                }
            } else if (*g_dist) {
                Gf4Boundary d(parse_gf4_matrix(read_text_file(g_dist_in)));
                SearchOptions opts;
                opts.threads = resolve_threads(g_dist_f.threads);
                if (g_dist_bound) {
                    auto hit = gf4_distance_upper_bound(d, *g_dist_bound, opts);
                    json j = {{"bound", *g_dist_bound}, {"found", bool(hit)},
                              {"witness", hit ? json(hit->str()) : json(nullptr)}, {"threads", opts.threads}};
                    emit(g_dist_f, j,
                         hit ? "nontrivial cycle of weight " + std::to_string(hit->weight()) + ": " + hit->str() + "\n"
                             : "no nontrivial cycle of weight <= " + std::to_string(*g_dist_bound) + "\n");
                } else {
                    Gf4DistanceResult r = gf4_distance(d, opts);
                    json j = {{"n", d.dim()},
                              {"k", d.hom_dim()},
                              {"w", d.check_weight()},
                              {"d", r.d},
                              {"witness", r.witness.str()},
                              {"cosets_scanned", r.cosets_scanned},
                              {"steps", r.steps},
                              {"wall_seconds", r.wall_seconds},
                              {"threads", opts.threads}};
                    emit(g_dist_f, j,
                         "[[" + std::to_string(d.dim()) + "," + std::to_string(d.hom_dim()) + "," +
                             std::to_string(r.d) + "]] w=" + std::to_string(d.check_weight()) +
                             "\nwitness=" + r.witness.str() + "\n");
                }
            }
        } else if (*rep) {
            rep_opt.seed = rep_f.seed;
            rep_opt.threads = resolve_threads(rep_f.threads);
            rep_opt.stop_on_failure = !rep_keep_going;
            std::vector<std::string> names = rep_name == "all" ? reproduction_names() : std::vector{rep_name};
            bool all_pass = true;
            json reports = json::array();
            for (const auto &name : names) {
                ExperimentReport r = run_reproduction(name, rep_opt);
                all_pass = all_pass && r.pass;
                reports.push_back(r.to_json());
                if (!rep_f.json) {
                    std::cout << name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.wall_seconds << " s)\n";
                    for (const auto &id : r.violated) {
                        for (const auto &claim : reproduction_manifest().at(name)) {
                            if (claim.id == id) {
                                std::cout << "  violated [" << id << "]: " << claim.statement << "\n";
                            }
                        }
                    }
                }
            }
            if (rep_f.json) {
                std::cout << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
            }
            return all_pass ? EXIT_PASS : EXIT_CLAIM_FAILED;
        } else if (*mcc) {
            mc.seed = mc_f.seed;
            mc.threads = resolve_threads(mc_f.threads);
            ExperimentReport r = run_montecarlo(mc);
            emit(mc_f, r.to_json(),
                 "low-weight kernel fraction " + r.results["low_weight_fraction"].dump() + "\nnot-good fraction " +
                     r.results["not_good_fraction"].dump() + "\n" +
                     (r.results.contains("sandwich_fraction")
                          ? "sandwich holds in fraction " + r.results["sandwich_fraction"].dump() + "\n"
                          : std::string()));
            return r.pass ? EXIT_PASS : EXIT_CLAIM_FAILED;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const ResourceError &e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return EXIT_RESOURCE;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_PASS;
}
