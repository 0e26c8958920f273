// Copyright 2026 The quasik Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quasik command-line tool.
//
// Exit status: 0 success, 1 user error (bad flags, bad input, time budget
// exceeded), 2 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "quasik/io.hpp"
#include "quasik/quasik.hpp"

namespace {

using nlohmann::json;
using namespace quasik;

struct Global {
    std::optional<unsigned> workers;
    std::string config;
    std::uint64_t seed_rng = 1;
    std::string log_level = "warn";
};

/// Destination for primary output: --out FILE or stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path, std::ios::binary);
        if (!file_) throw InvalidArgument("cannot write '" + path + "'");
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

unsigned resolve_workers(const Global& g) {
    if (g.workers) {
        if (*g.workers == 0) throw InvalidArgument("--workers must be at least 1");
        return *g.workers;
    }
    if (const char* env = std::getenv("QUASIK_WORKERS")) {
        try {
            const auto n = std::stoul(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        throw InvalidArgument(std::string("QUASIK_WORKERS must be a positive integer, got '") + env + "'");
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

Graph load_graph(const std::string& path) {
    LoadStats st;
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
    auto g = load_edge_list(in, false, &st);
    spdlog::info("loaded {}: n={} m={} (dropped {} self-loops, {} duplicates)", path, g.order(), g.size(), st.self_loops,
                 st.duplicates);
    return g;
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

// Config file support: a JSON object whose keys are long flag names without
// the leading dashes. Top-level keys apply to any subcommand; an object keyed
// by the subcommand name overrides them. Flags given on the command line win.
std::string config_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (auto& x : v) {
            if (!out.empty()) out += ',';
            out += config_value(x);
        }
        return out;
    }
    return v.dump();
}

std::vector<std::string> apply_config(std::vector<std::string> args, const std::vector<std::string>& subcommands) {
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw InvalidArgument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!cfg.is_object()) throw InvalidArgument("config file must hold a JSON object");

    std::string active;
    for (std::size_t i = 1; i < args.size() && active.empty(); ++i)
        for (auto& s : subcommands)
            if (args[i] == s) active = s;

    json merged = json::object();
    for (auto& [key, value] : cfg.items())
        if (!value.is_object()) merged[key] = value;
    if (!active.empty() && cfg.contains(active) && cfg[active].is_object())
        for (auto& [key, value] : cfg[active].items()) merged[key] = value;

    auto given = [&](const std::string& flag) {
        for (auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    for (auto& [key, value] : merged.items()) {
        if (key == "config") continue;
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
            continue;
        }
        args.push_back(flag);
        args.push_back(config_value(value));
    }
    return args;
}

void configure_logging(const std::string& level) {
    auto logger = spdlog::stderr_color_st("quasik");
    logger->set_pattern("quasik: [%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::from_str(level));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Top-k maximal quasi-clique search", "quasik"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    Global global;

    app.add_option("--workers", global.workers, "Worker threads (default: QUASIK_WORKERS or all cores)");
    app.add_option("--config", global.config, "JSON file with default flag values");
    app.add_option("--seed-rng", global.seed_rng, "Seed for all randomized generation")->capture_default_str();
    app.add_option("--log-level", global.log_level, "Diagnostics on stderr")
        ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}))
        ->capture_default_str();

    // summary
    std::string graph_path, out_path;
    auto* summary = app.add_subcommand("summary", "Print {n, m, max_degree, avg_degree} for a graph");
    summary->add_option("--graph", graph_path, "Edge list file")->required();
    summary->add_option("--out", out_path, "Write output here instead of stdout");

    // enumerate
    std::string gamma_text, seed_labels, format = "jsonl";
    std::size_t min_size = 2;
    double timeout_secs = 0;
    auto* enumerate = app.add_subcommand("enumerate", "All gamma-quasi-cliques containing a seed set");
    enumerate->add_option("--graph", graph_path, "Edge list file")->required();
    enumerate->add_option("--gamma", gamma_text, "Density threshold, e.g. 0.6 or 3/5")->required();
    enumerate->add_option("--min-size", min_size, "Smallest size reported")->capture_default_str();
    enumerate->add_option("--seed", seed_labels, "Comma-separated vertex labels every result must contain");
    enumerate->add_option("--output", format, "Output format")->check(CLI::IsMember({"jsonl", "json"}))->capture_default_str();
    enumerate->add_option("--timeout-secs", timeout_secs, "Give up after this many seconds (0: no limit)");
    enumerate->add_option("--out", out_path, "Write output here instead of stdout");

    // topk
    std::string algo = "kqc", gamma_prime_text;
    std::size_t k = 1;
    std::optional<std::size_t> k_prime;
    std::string topk_format = "json";
    auto* topk = app.add_subcommand("topk", "Top-k maximal gamma-quasi-cliques");
    topk->add_option("--graph", graph_path, "Edge list file")->required();
    topk->add_option("--algo", algo, "kqc (kernel heuristic) or naive (exact)")
        ->check(CLI::IsMember({"kqc", "naive"}))
        ->capture_default_str();
    topk->add_option("--gamma", gamma_text, "Density threshold")->required();
    topk->add_option("--gamma-prime", gamma_prime_text, "Kernel threshold (default min(1, gamma + 0.2))");
    topk->add_option("--k", k, "Number of quasi-cliques")->capture_default_str();
    topk->add_option("--k-prime", k_prime, "Number of kernels (default 3k)");
    topk->add_option("--min-size", min_size, "Smallest size reported")->capture_default_str();
    topk->add_option("--output", topk_format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    topk->add_option("--timeout-secs", timeout_secs, "Give up after this many seconds (0: no limit)");
    topk->add_option("--out", out_path, "Write output here instead of stdout");

    // oracle
    std::optional<std::size_t> oracle_k;
    std::string maximal_labels;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference answers for graphs up to 25 vertices");
    oracle_cmd->add_option("--graph", graph_path, "Edge list file")->required();
    oracle_cmd->add_option("--gamma", gamma_text, "Density threshold")->required();
    oracle_cmd->add_option("--min-size", min_size, "Smallest size reported")->capture_default_str();
    oracle_cmd->add_option("--k", oracle_k, "Report the exact top-k maximal sets instead of all sets");
    oracle_cmd->add_option("--maximal", maximal_labels, "Only check whether this comma-separated set is maximal");
    oracle_cmd->add_option("--out", out_path, "Write output here instead of stdout");

    // gadget
    std::string input_path;
    std::size_t r = 2;
    auto* gadget = app.add_subcommand("gadget", "Build the r-clique reduction instance for an input graph");
    gadget->add_option("--input", input_path, "Edge list of G'")->required();
    gadget->add_option("--r", r, "Clique size")->capture_default_str();
    gadget->add_option("--out", out_path, "Edge list path; the sidecar goes to <out>.json");

    // generate
    std::size_t gen_n = 60;
    double gen_p = 0.08;
    std::vector<std::size_t> plant;
    auto* generate = app.add_subcommand("generate", "Random G(n, p) graph with optional planted near-cliques");
    generate->add_option("--n", gen_n, "Vertices")->capture_default_str();
    generate->add_option("--p", gen_p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    generate->add_option("--plant", plant, "Comma-separated sizes of planted near-cliques")->delimiter(',');
    generate->add_option("--out", out_path, "Write output here instead of stdout");

    // bench
    std::string grid_path;
    double budget_secs = 60;
    auto* bench = app.add_subcommand("bench", "Run kqc and naive over a parameter grid, report CSV");
    bench->add_option("--graph", graph_path, "Edge list file")->required();
    bench->add_option("--grid", grid_path, "JSON parameter grid")->required();
    bench->add_option("--budget-secs", budget_secs, "Per-run time limit")->capture_default_str();
    bench->add_option("--out", out_path, "CSV path (default stdout)");

    // profile-kernels
    std::vector<std::string> gamma_primes;
    std::size_t samples = 1000;
    std::size_t cap = 1'000'000;
    auto* profile = app.add_subcommand("profile-kernels", "Share of sampled quasi-cliques holding dense kernels");
    profile->add_option("--graph", graph_path, "Edge list file")->required();
    profile->add_option("--gamma", gamma_text, "Density of sampled quasi-cliques")->required();
    profile->add_option("--gamma-primes", gamma_primes, "Comma-separated kernel thresholds")->delimiter(',')->required();
    profile->add_option("--samples", samples, "Sample count")->capture_default_str();
    profile->add_option("--min-size", min_size, "Smallest sampled size")->capture_default_str();
    profile->add_option("--cap", cap, "Stop enumerating after this many quasi-cliques")->capture_default_str();
    profile->add_option("--out", out_path, "CSV path (default stdout)");

    std::vector<std::string> args(argv, argv + argc);
    try {
        std::vector<std::string> names;
        for (auto* s : app.get_subcommands([](const CLI::App*) { return true; })) names.push_back(s->get_name());
        args = apply_config(std::move(args), names);
    } catch (const InvalidArgument& e) {
        std::cerr << "quasik: " << e.what() << "\n";
        return 1;
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        configure_logging(global.log_level);
        EnumerateOptions opt;
        opt.workers = resolve_workers(global);
        spdlog::debug("workers={}", opt.workers);
        auto deadline = [&] {
            if (timeout_secs > 0)
                opt.deadline = std::chrono::steady_clock::now() +
                               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(timeout_secs));
        };

        if (*summary) {
            auto g = load_graph(graph_path);
            Output out(out_path);
            out.stream() << io::summary_json(summarize(g)).dump() << "\n";
        } else if (*enumerate) {
            auto g = load_graph(graph_path);
            auto gamma = parse_gamma(gamma_text);
            auto seed = resolve_labels(g, split_labels(seed_labels));
            deadline();
            auto sets = collect_qcs(g, seed, gamma, min_size, opt);
            spdlog::info("{} quasi-cliques", sets.size());
            Output out(out_path);
            if (format == "jsonl") {
                for (auto& s : sets) out.stream() << io::record_json(g, s).dump() << "\n";
            } else {
                json arr = json::array();
                for (auto& s : sets) arr.push_back(io::record_json(g, s));
                out.stream() << arr.dump(2) << "\n";
            }
        } else if (*topk) {
            auto g = load_graph(graph_path);
            auto gamma = parse_gamma(gamma_text);
            std::optional<Gamma> gp;
            if (!gamma_prime_text.empty()) gp = parse_gamma(gamma_prime_text);
            auto params = default_params(gamma, k, min_size, gp, k_prime);
            deadline();
            TopKResult res;
            if (algo == "kqc") {
                res = kqc(g, params, opt);
            } else {
                params.validate();
                res = naive_qc(g, gamma, min_size, k, opt);
            }
            for (auto& w : res.warnings) spdlog::warn("{}", w);
            json sets = json::array();
            for (auto& s : res.sets) sets.push_back(to_labels(g, s));
            json doc{{"algo", algo},
                     {"params", io::params_json(params)},
                     {"sizes", SizeList::of(res.sets).values()},
                     {"quasi_cliques", sets},
                     {"kernel_count", res.kernel_count},
                     {"expansion_count", res.expansion_count},
                     {"warnings", res.warnings},
                     {"wall_time_ms", res.detection_ms + res.expansion_ms}};
            Output out(out_path);
            out.stream() << doc.dump(2) << "\n";
        } else if (*oracle_cmd) {
            auto g = load_graph(graph_path);
            auto gamma = parse_gamma(gamma_text);
            json doc;
            if (!maximal_labels.empty()) {
                auto s = resolve_labels(g, split_labels(maximal_labels));
                const bool qc = is_quasi_clique(g, s, gamma);
                doc = {{"vertices", to_labels(g, s)},
                       {"quasi_clique", qc},
                       {"maximal", qc && oracle::is_maximal_bruteforce(g, s, gamma)}};
            } else {
                auto sets = oracle_k ? oracle::topk_bruteforce(g, gamma, min_size, *oracle_k)
                                     : oracle::enumerate_all_qcs_bruteforce(g, gamma, min_size);
                json arr = json::array();
                for (auto& s : sets) arr.push_back(io::record_json(g, s));
                doc = {{"count", sets.size()}, {"quasi_cliques", arr}};
            }
            Output out(out_path);
            out.stream() << doc.dump(2) << "\n";
        } else if (*gadget) {
            auto g_prime = load_graph(input_path);
            auto inst = build_gadget(g_prime, r);
            auto sidecar = io::gadget_sidecar_json(inst);
            Output out(out_path);
            auto& os = out.stream();
            os << "% gamma " << inst.gamma.fraction() << "\n% r " << inst.r << "\n% n " << inst.g.order() << "\n";
            write_edge_list(os, inst.g);
            if (out_path.empty() || out_path == "-") {
                std::cerr << sidecar.dump() << "\n";
            } else {
                std::ofstream side(out_path + ".json", std::ios::binary);
                if (!side) throw InvalidArgument("cannot write '" + out_path + ".json'");
                side << sidecar.dump(2) << "\n";
            }
        } else if (*generate) {
            gen::Rng rng(global.seed_rng);
            auto inst = gen::planted(rng, gen_n, gen_p, plant);
            Output out(out_path);
            auto& os = out.stream();
            os << "% G(" << gen_n << ", " << gen_p << ") seed " << global.seed_rng << "\n";
            for (auto& s : inst.planted) {
                os << "% planted";
                for (auto v : s) os << ' ' << inst.graph.label(v);
                os << "\n";
            }
            write_edge_list(os, inst.graph);
        } else if (*bench) {
            auto g = load_graph(graph_path);
            std::ifstream gin(grid_path);
            if (!gin) throw InvalidArgument("cannot open grid file '" + grid_path + "'");
            json grid_doc;
            try {
                gin >> grid_doc;
            } catch (const json::exception& e) {
                throw InvalidArgument("grid file is not valid JSON: " + std::string(e.what()));
            }
            auto grid = io::parse_grid(grid_doc);
            if (budget_secs <= 0) throw InvalidArgument("--budget-secs must be positive");
            auto budget = std::chrono::milliseconds(static_cast<long long>(budget_secs * 1000));
            auto rows = run_grid(g, std::filesystem::path(graph_path).stem().string(), grid, budget, opt);
            Output out(out_path);
            write_grid_csv(out.stream(), rows);
        } else if (*profile) {
            auto g = load_graph(graph_path);
            auto gamma = parse_gamma(gamma_text);
            std::vector<Gamma> gps;
            for (auto& t : gamma_primes) gps.push_back(parse_gamma(t));
            auto prof = kernel_profile(g, gamma, gps, samples, min_size, global.seed_rng, cap);
            for (auto& d : prof.diagnostics) spdlog::warn("{}", d);
            spdlog::info("population={} samples={}", prof.population, prof.samples);
            Output out(out_path);
            auto& os = out.stream();
            os << "gamma_prime,size,fraction\r\n";
            for (auto& row : prof.rows) os << row.gamma_prime.str() << ',' << row.size << ',' << fixed(row.fraction, 6) << "\r\n";
        }
        return 0;
    } catch (const SearchTimeout& e) {
        std::cerr << "quasik: time budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const quasik::ParseError& e) {
        std::cerr << "quasik: " << e.what() << "\n";
        return 1;
    } catch (const InvalidArgument& e) {
        std::cerr << "quasik: " << e.what() << "\n";
        return 1;
    } catch (const TooLarge& e) {
        std::cerr << "quasik: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "quasik: internal error: " << e.what() << "\n";
        return 2;
    }
}
