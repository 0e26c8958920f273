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

#ifndef QUASIK_BENCH_HPP
#define QUASIK_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "quasik/enumerator.hpp"
#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/generators.hpp"
#include "quasik/graph.hpp"
#include "quasik/metrics.hpp"
#include "quasik/topk.hpp"

namespace quasik {

// ---------------------------------------------------------------------------
// Kernel containment profile

struct KernelProfileRow {
    Gamma gamma_prime;
    std::size_t size = 0;
    /// Fraction of sampled gamma-quasi-cliques holding a gamma'-quasi-clique
    /// with at least `size` vertices.
    double fraction = 0;
};

struct KernelProfile {
    std::size_t population = 0;  ///< gamma-quasi-cliques enumerated
    std::size_t samples = 0;
    bool capped = false;         ///< enumeration stopped at the cap
    std::vector<KernelProfileRow> rows;
    std::vector<std::string> diagnostics;
};

namespace detail {
struct CapReached {};
}  // namespace detail

/// Size of the largest gamma-quasi-clique inside s (1 for any nonempty s).
inline std::size_t largest_qc_within(const Graph& g, const VertexSet& s, const Gamma& gamma) {
    if (s.empty()) return 0;
    auto sub = induced_subgraph(g, s);
    std::size_t best = 1;
    enumerate_qcs(sub.graph, VertexSet{}, gamma, 2, [&](VertexSet q) { best = std::max(best, q.size()); });
    return best;
}

/// Samples up to sample_count gamma-quasi-cliques (size >= min_size) uniformly
/// from the enumerated collection and reports, per gamma' and size s, the
/// fraction whose induced subgraph holds a gamma'-quasi-clique of size >= s.
inline KernelProfile kernel_profile(const Graph& g, const Gamma& gamma, const std::vector<Gamma>& gamma_primes,
                                    std::size_t sample_count, std::size_t min_size, std::uint64_t seed = 1,
                                    std::size_t enumeration_cap = 1'000'000) {
    KernelProfile prof;
    std::vector<VertexSet> population;
    try {
        enumerate_qcs(g, VertexSet{}, gamma, min_size, [&](VertexSet s) {
            if (population.size() >= enumeration_cap) throw detail::CapReached{};
            population.push_back(std::move(s));
        });
    } catch (const detail::CapReached&) {
        prof.capped = true;
        prof.diagnostics.push_back("enumeration capped at " + std::to_string(enumeration_cap) + " quasi-cliques");
    }
    prof.population = population.size();
    if (population.empty()) {
        prof.diagnostics.push_back("no " + gamma.str() + "-quasi-cliques with at least " + std::to_string(min_size) +
                                   " vertices");
        return prof;
    }

    std::vector<VertexSet> sample;
    if (population.size() <= sample_count) {
        sample = population;
    } else {
        gen::Rng rng(seed);
        for (auto i : gen::sample_vertices(rng, population.size(), sample_count)) sample.push_back(population[i]);
    }
    prof.samples = sample.size();
    std::size_t largest = 0;
    for (auto& s : sample) largest = std::max(largest, s.size());

    for (auto& gp : gamma_primes) {
        std::vector<std::size_t> best;
        best.reserve(sample.size());
        for (auto& s : sample) best.push_back(largest_qc_within(g, s, gp));
        for (std::size_t size = 1; size <= largest; ++size) {
            auto hit = std::count_if(best.begin(), best.end(), [&](std::size_t b) { return b >= size; });
            prof.rows.push_back({gp, size, static_cast<double>(hit) / static_cast<double>(sample.size())});
        }
    }
    return prof;
}

// ---------------------------------------------------------------------------
// Experiment grid

enum class Algo { kqc, naive, oracle };

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::kqc: return "kqc";
        case Algo::naive: return "naive";
        case Algo::oracle: return "oracle";
    }
    return "?";
}

struct RunReport {
    std::string graph;
    TopKParams params;
    Algo algo = Algo::kqc;
    SizeList sizes;
    double wall_ms = 0;
    std::size_t peak_candidates = 0;
    std::optional<double> error_percent;
    std::optional<double> speedup;
    bool padded = false;
    std::string status = "ok";  ///< ok | timeout | error: <what>
};

/// Runs kqc and naive_qc on every cell. A run past `budget` is recorded as a
/// timeout; error_percent and speedup are filled on the kqc row only when
/// both runs finished.
inline std::vector<RunReport> run_grid(const Graph& g, const std::string& graph_name, const std::vector<TopKParams>& grid,
                                       std::chrono::milliseconds budget, const EnumerateOptions& base = {}) {
    std::vector<RunReport> out;
    for (const auto& cell : grid) {
        auto run = [&](Algo algo) {
            RunReport rep;
            rep.graph = graph_name;
            rep.params = cell;
            rep.algo = algo;
            EnumerateOptions opt = base;
            const auto t0 = std::chrono::steady_clock::now();
            opt.deadline = t0 + budget;
            try {
                auto res = algo == Algo::kqc ? kqc(g, cell, opt) : naive_qc(g, cell.gamma, cell.min_size, cell.k, opt);
                rep.wall_ms = detail::ms_since(t0);
                rep.sizes = SizeList::of(res.sets);
                rep.peak_candidates = res.stats.peak_candidates;
            } catch (const SearchTimeout&) {
                rep.wall_ms = detail::ms_since(t0);
                rep.status = "timeout";
            } catch (const std::exception& e) {
                rep.wall_ms = detail::ms_since(t0);
                rep.status = std::string("error: ") + e.what();
            }
            return rep;
        };
        auto heuristic = run(Algo::kqc);
        auto exact = run(Algo::naive);
        if (heuristic.status == "ok" && exact.status == "ok") {
            if (heuristic.sizes.empty() && exact.sizes.empty()) {
                heuristic.error_percent = 0.0;
            } else {
                auto cmp = compare_sizes(heuristic.sizes, exact.sizes);
                heuristic.error_percent = cmp.percent;
                heuristic.padded = cmp.padded;
            }
            if (heuristic.wall_ms > 0) heuristic.speedup = exact.wall_ms / heuristic.wall_ms;
        }
        out.push_back(std::move(heuristic));
        out.push_back(std::move(exact));
    }
    return out;
}

/// RFC 4180 field: quoted when it holds a comma, quote or line break.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline constexpr const char* kGridCsvHeader =
    "graph,gamma,gamma_prime,k,k_prime,min_size,algo,wall_ms,sizes,error_pct,status,speedup,padded";

inline void write_grid_csv(std::ostream& out, const std::vector<RunReport>& rows) {
    auto fixed = [](double v, int digits) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(digits) << v;
        return s.str();
    };
    out << kGridCsvHeader << "\r\n";
    for (auto& r : rows) {
        out << csv_field(r.graph) << ',' << r.params.gamma.str() << ',' << r.params.gamma_prime.str() << ','
            << r.params.k << ',' << r.params.k_prime << ',' << r.params.min_size << ',' << algo_name(r.algo) << ','
            << fixed(r.wall_ms, 3) << ',' << csv_field(r.sizes.str()) << ','
            << (r.error_percent ? fixed(*r.error_percent, 4) : "") << ',' << csv_field(r.status) << ','
            << (r.speedup ? fixed(*r.speedup, 3) : "") << ',' << (r.padded ? "1" : "0") << "\r\n";
    }
}

}  // namespace quasik

#endif  // QUASIK_BENCH_HPP
