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

// Exhaustive reference routines. Nothing here prunes: every candidate
// subset is materialized as a bitmask and tested against the definition.

#ifndef QUASIK_ORACLE_HPP
#define QUASIK_ORACLE_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/graph.hpp"
#include "quasik/quasi_clique.hpp"

namespace quasik::oracle {

inline constexpr std::size_t kDefaultVertexLimit = 25;
inline constexpr std::size_t kDefaultFreeVertexLimit = 20;

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.order(), 0);
    for (VertexId v = 0; v < g.order(); ++v)
        for (auto u : g.neighbors(v)) adj[v] |= Mask{1} << u;
    return adj;
}

inline bool connected(const std::vector<Mask>& adj, Mask set) {
    if (set == 0) return true;
    Mask reach = set & (~set + 1);
    while (true) {
        Mask grown = reach;
        for (Mask r = reach; r; r &= r - 1) grown |= adj[static_cast<std::size_t>(std::countr_zero(r))] & set;
        if (grown == reach) break;
        reach = grown;
    }
    return reach == set;
}

inline bool quasi_clique(const std::vector<Mask>& adj, Mask set, const Gamma& gamma) {
    const auto m = static_cast<std::size_t>(std::popcount(set));
    if (m == 0) return false;
    const auto need = degree_threshold(gamma, m);
    for (Mask r = set; r; r &= r - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(r));
        if (static_cast<std::size_t>(std::popcount(adj[v] & set)) < need) return false;
    }
    return connected(adj, set);
}

inline VertexSet to_set(Mask set) {
    std::vector<VertexId> ids;
    for (Mask r = set; r; r &= r - 1) ids.push_back(static_cast<VertexId>(std::countr_zero(r)));
    return VertexSet(std::move(ids));
}

inline Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (auto v : s) m |= Mask{1} << v;
    return m;
}

}  // namespace detail

/// Every gamma-quasi-clique with at least min_size vertices, by iterating
/// all 2^n vertex subsets. Output is sorted largest first, then lexicographically.
inline std::vector<VertexSet> enumerate_all_qcs_bruteforce(const Graph& g, const Gamma& gamma, std::size_t min_size,
                                                           std::size_t vertex_limit = kDefaultVertexLimit) {
    const auto n = g.order();
    if (n > vertex_limit || n > 62)
        throw TooLarge("brute-force enumeration refuses graphs with " + std::to_string(n) + " vertices (limit " +
                       std::to_string(vertex_limit) + ")");
    auto adj = detail::adjacency_masks(g);
    std::vector<VertexSet> out;
    const detail::Mask end = detail::Mask{1} << n;
    for (detail::Mask s = 1; s < end; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) < min_size) continue;
        if (detail::quasi_clique(adj, s, gamma)) out.push_back(detail::to_set(s));
    }
    sort_canonical(out);
    return out;
}

/// True iff no strict superset of s is a gamma-quasi-clique of g.
inline bool is_maximal_bruteforce(const Graph& g, const VertexSet& s, const Gamma& gamma,
                                  std::size_t vertex_limit = kDefaultVertexLimit,
                                  std::size_t free_limit = kDefaultFreeVertexLimit) {
    require_valid(g, s);
    const auto n = g.order();
    const auto free = n - s.size();
    if ((n > vertex_limit && free > free_limit) || n > 62 || free > 62)
        throw TooLarge("brute-force maximality check refuses " + std::to_string(free) + " free vertices in a " +
                       std::to_string(n) + "-vertex graph");
    auto adj = detail::adjacency_masks(g);
    const auto base = detail::to_mask(s);
    std::vector<std::size_t> outside;
    for (std::size_t v = 0; v < n; ++v)
        if (!(base >> v & 1U)) outside.push_back(v);
    const detail::Mask end = detail::Mask{1} << outside.size();
    for (detail::Mask pick = 1; pick < end; ++pick) {
        detail::Mask sup = base;
        for (detail::Mask r = pick; r; r &= r - 1) sup |= detail::Mask{1} << outside[static_cast<std::size_t>(std::countr_zero(r))];
        if (detail::quasi_clique(adj, sup, gamma)) return false;
    }
    return true;
}

/// The k largest maximal gamma-quasi-cliques with at least min_size vertices.
/// Ties on size go to the lexicographically smaller id sequence.
inline std::vector<VertexSet> topk_bruteforce(const Graph& g, const Gamma& gamma, std::size_t min_size, std::size_t k,
                                              std::size_t vertex_limit = kDefaultVertexLimit) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    auto all = enumerate_all_qcs_bruteforce(g, gamma, min_size, vertex_limit);
    std::vector<VertexSet> out;
    for (auto& s : all) {
        if (out.size() == k) break;
        if (is_maximal_bruteforce(g, s, gamma, vertex_limit, vertex_limit)) out.push_back(s);
    }
    return out;
}

/// Whether g contains a clique on r vertices, by checking every r-subset.
inline bool has_clique_bruteforce(const Graph& g, std::size_t r, std::size_t vertex_limit = kDefaultFreeVertexLimit) {
    const auto n = g.order();
    if (n > vertex_limit || n > 62) throw TooLarge("brute-force clique search refuses " + std::to_string(n) + " vertices");
    if (r == 0) return true;
    auto adj = detail::adjacency_masks(g);
    const detail::Mask end = detail::Mask{1} << n;
    for (detail::Mask s = 1; s < end; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != r) continue;
        bool clique = true;
        for (detail::Mask t = s; t && clique; t &= t - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(t));
            clique = (adj[v] & s) == (s & ~(detail::Mask{1} << v));
        }
        if (clique) return true;
    }
    return false;
}

}  // namespace quasik::oracle

#endif  // QUASIK_ORACLE_HPP
