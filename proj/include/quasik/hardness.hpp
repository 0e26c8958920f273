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

// Reduction from r-clique to quasi-clique maximality.
//
// Given G' and r, the gadget adds X = A1 ∪ A2 ∪ B with |A1| = |A2| = r^2 and
// |B| = r. A1, A2 and B are cliques, A1 is joined to A2, to B and to every
// vertex of G', and there are no A2-B edges. With
// gamma = (r^2 + r - 1) / (2r^2 + 2r - 1), X is a gamma-quasi-clique, and it
// fails to be maximal exactly when G' has an r-clique.

#ifndef QUASIK_HARDNESS_HPP
#define QUASIK_HARDNESS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/graph.hpp"
#include "quasik/oracle.hpp"

namespace quasik {

struct GadgetInstance {
    Graph g;
    VertexSet x;
    Gamma gamma;
    std::size_t r = 0;
    std::size_t a1_size = 0;
    std::size_t a2_size = 0;
    std::size_t b_size = 0;
};

inline Gamma gadget_gamma(std::size_t r) {
    return Gamma(r * r + r - 1, 2 * r * r + 2 * r - 1);
}

/// Vertices 0..|V'|-1 are G' (labels kept), followed by blocks A1, A2, B
/// labelled "A1_i", "A2_i", "B_i".
inline GadgetInstance build_gadget(const Graph& g_prime, std::size_t r) {
    if (r < 2) throw InvalidArgument("gadget requires r >= 2");
    if (g_prime.order() == 0) throw InvalidArgument("gadget requires a nonempty input graph");
    const auto base = g_prime.order();
    const auto sq = r * r;
    const auto a1 = base, a2 = base + sq, b = base + 2 * sq;
    const auto n = b + r;

    std::vector<std::string> labels = g_prime.labels();
    for (std::size_t i = 0; i < sq; ++i) labels.push_back("A1_" + std::to_string(i));
    for (std::size_t i = 0; i < sq; ++i) labels.push_back("A2_" + std::to_string(i));
    for (std::size_t i = 0; i < r; ++i) labels.push_back("B_" + std::to_string(i));

    auto id = [](std::size_t v) { return static_cast<VertexId>(v); };
    std::vector<Edge> edges = g_prime.edges();
    auto clique = [&](std::size_t from, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) edges.emplace_back(id(from + i), id(from + j));
    };
    clique(a1, sq);
    clique(a2, sq);
    clique(b, r);
    for (std::size_t i = 0; i < sq; ++i) {
        for (std::size_t j = 0; j < sq; ++j) edges.emplace_back(id(a1 + i), id(a2 + j));
        for (std::size_t j = 0; j < r; ++j) edges.emplace_back(id(a1 + i), id(b + j));
        for (std::size_t v = 0; v < base; ++v) edges.emplace_back(id(a1 + i), id(v));
    }

    GadgetInstance inst;
    inst.g = Graph::from_edges(n, edges, std::move(labels));
    std::vector<VertexId> x;
    for (std::size_t v = base; v < n; ++v) x.push_back(id(v));
    inst.x = VertexSet(std::move(x));
    inst.gamma = gadget_gamma(r);
    inst.r = r;
    inst.a1_size = sq;
    inst.a2_size = sq;
    inst.b_size = r;
    return inst;
}

/// Checks "X not maximal <=> G' has an r-clique" on this instance, deciding
/// both sides by exhaustive search.
inline bool verify_gadget_theorem(const GadgetInstance& inst, const Graph& g_prime) {
    if (g_prime.order() > oracle::kDefaultFreeVertexLimit)
        throw TooLarge("gadget verification needs |V'| <= " + std::to_string(oracle::kDefaultFreeVertexLimit));
    const bool not_maximal = !oracle::is_maximal_bruteforce(inst.g, inst.x, inst.gamma);
    const bool has_clique = oracle::has_clique_bruteforce(g_prime, inst.r);
    return not_maximal == has_clique;
}

}  // namespace quasik

#endif  // QUASIK_HARDNESS_HPP
