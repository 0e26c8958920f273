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

// Seeded random instances. Only raw mt19937_64 output is consumed (no
// std:: distributions), so a seed yields the same graph on every platform.

#ifndef QUASIK_GENERATORS_HPP
#define QUASIK_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "quasik/graph.hpp"

namespace quasik::gen {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

/// True with probability p (resolution 2^-53).
inline bool coin(Rng& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

/// Uniform random sample of `count` distinct values from [0, n), ascending.
inline std::vector<VertexId> sample_vertices(Rng& rng, std::size_t n, std::size_t count) {
    std::vector<VertexId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
    for (std::size_t i = 0; i < count && i < n; ++i) std::swap(all[i], all[i + below(rng, n - i)]);
    all.resize(std::min(count, n));
    std::sort(all.begin(), all.end());
    return all;
}

inline std::vector<Edge> gnp_edges(Rng& rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng, p)) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return edges;
}

/// Erdos-Renyi G(n, p).
inline Graph gnp(Rng& rng, std::size_t n, double p) {
    auto edges = gnp_edges(rng, n, p);
    return Graph::from_edges(n, edges);
}

struct PlantedInstance {
    Graph graph;
    std::vector<VertexSet> planted;
};

/// G(n, p) plus, for each requested size s, a near-clique on s fresh
/// vertices: K_s with up to floor(s/4) disjoint edges removed. Every planted
/// set is a (s-2)/(s-1)-quasi-clique.
inline PlantedInstance planted(Rng& rng, std::size_t n, double p, const std::vector<std::size_t>& sizes) {
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    if (total > n) throw InvalidArgument("planted sets do not fit in the graph");
    auto edges = gnp_edges(rng, n, p);
    auto pool = sample_vertices(rng, n, total);
    // shuffle so planted blocks are not contiguous id ranges
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[below(rng, i)]);

    PlantedInstance out;
    std::vector<Edge> removed;
    std::size_t at = 0;
    for (auto s : sizes) {
        std::vector<VertexId> members(pool.begin() + static_cast<std::ptrdiff_t>(at),
                                      pool.begin() + static_cast<std::ptrdiff_t>(at + s));
        at += s;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j) edges.emplace_back(std::min(members[i], members[j]), std::max(members[i], members[j]));
        // members are in random order, so consecutive pairs form a random matching
        const auto drop = below(rng, s / 4 + 1);
        for (std::size_t i = 0; i < drop; ++i)
            removed.emplace_back(std::min(members[2 * i], members[2 * i + 1]), std::max(members[2 * i], members[2 * i + 1]));
        out.planted.emplace_back(std::move(members));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(removed.begin(), removed.end());
    std::erase_if(edges, [&](const Edge& e) { return std::binary_search(removed.begin(), removed.end(), e); });
    out.graph = Graph::from_edges(n, edges);
    return out;
}

}  // namespace quasik::gen

#endif  // QUASIK_GENERATORS_HPP
