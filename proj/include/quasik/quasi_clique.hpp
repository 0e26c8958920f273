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

#ifndef QUASIK_QUASI_CLIQUE_HPP
#define QUASIK_QUASI_CLIQUE_HPP

#include <algorithm>
#include <cstddef>
#include <limits>

#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/graph.hpp"

namespace quasik {

/// Smallest internal degree of the subgraph induced by s (0 for the empty set).
inline std::size_t min_internal_degree(const Graph& g, const VertexSet& s) {
    if (s.empty()) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto v : s) best = std::min(best, degree_within(g, v, s));
    return best;
}

/// Degree-based quasi-clique test: s induces a connected subgraph in which
/// every vertex has at least ceil(gamma * (|s| - 1)) neighbours.
inline bool is_quasi_clique(const Graph& g, const VertexSet& s, const Gamma& gamma) {
    if (s.empty()) throw InvalidArgument("quasi-clique predicate is undefined on the empty set");
    require_valid(g, s);
    const auto need = degree_threshold(gamma, s.size());
    for (auto v : s)
        if (degree_within(g, v, s) < need) return false;
    return is_connected(g, s);
}

struct QuasiCliqueRecord {
    VertexSet vertices;
    std::size_t size = 0;
    std::size_t min_internal_degree = 0;
};

inline QuasiCliqueRecord make_record(const Graph& g, VertexSet s) {
    QuasiCliqueRecord r;
    r.size = s.size();
    r.min_internal_degree = min_internal_degree(g, s);
    r.vertices = std::move(s);
    return r;
}

}  // namespace quasik

#endif  // QUASIK_QUASI_CLIQUE_HPP
