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

#ifndef QUASIK_GRAPH_HPP
#define QUASIK_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quasik/bitset.hpp"
#include "quasik/error.hpp"

namespace quasik {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Graphs with at most this many vertices also carry bitset adjacency rows.
inline constexpr std::size_t kBitsetRowLimit = 4096;

/// Sorted, duplicate-free set of vertex ids. Iteration is ascending, and the
/// natural ordering is lexicographic on that ascending sequence.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) { normalize(); }

    static VertexSet from_bitset(const Bitset& bits) {
        VertexSet s;
        bits.for_each([&](std::size_t i) { s.ids_.push_back(static_cast<VertexId>(i)); });
        return s;
    }

    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ids_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return ids_.begin(); }
    [[nodiscard]] auto end() const noexcept { return ids_.end(); }
    [[nodiscard]] VertexId operator[](std::size_t i) const noexcept { return ids_[i]; }
    [[nodiscard]] std::span<const VertexId> ids() const noexcept { return ids_; }

    [[nodiscard]] bool contains(VertexId v) const noexcept {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const noexcept {
        return ids_.size() <= other.ids_.size() &&
               std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }
    [[nodiscard]] bool is_strict_subset_of(const VertexSet& other) const noexcept {
        return ids_.size() < other.ids_.size() && is_subset_of(other);
    }

    void insert(VertexId v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    [[nodiscard]] VertexSet united(const VertexSet& other) const {
        std::vector<VertexId> out;
        out.reserve(ids_.size() + other.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<VertexId> ids_;
};

/// Canonical output order: size descending, then lexicographic ascending.
inline bool larger_first(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

inline void sort_canonical(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), larger_first);
}

/// Simple undirected graph with dense ids 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph; self-loops and duplicate/reversed edges are dropped.
    /// `labels` defaults to the decimal id of each vertex.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {}) {
        Graph g;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
            if (u == v) continue;
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        std::size_t twice_m = 0;
        for (auto& row : g.adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            twice_m += row.size();
        }
        g.m_ = twice_m / 2;
        if (labels.empty()) {
            labels.reserve(n);
            for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        }
        if (labels.size() != n) throw InvalidArgument("label count does not match vertex count");
        g.labels_ = std::move(labels);
        for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.labels_[i], static_cast<VertexId>(i));
        if (n <= kBitsetRowLimit) {
            g.rows_.assign(n, Bitset(n));
            for (std::size_t u = 0; u < n; ++u)
                for (auto v : g.adj_[u]) g.rows_[u].set(v);
        }
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return m_; }
    [[nodiscard]] std::size_t degree(VertexId v) const noexcept { return adj_[v].size(); }
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const noexcept { return adj_[v]; }
    [[nodiscard]] bool has_rows() const noexcept { return !rows_.empty(); }
    /// Bitset adjacency row; only valid when has_rows().
    [[nodiscard]] const Bitset& row(VertexId v) const noexcept { return rows_[v]; }

    [[nodiscard]] bool has_edge(VertexId u, VertexId v) const noexcept {
        if (has_rows()) return rows_[u].test(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    [[nodiscard]] const std::string& label(VertexId v) const noexcept { return labels_[v]; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<VertexId> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (VertexId u = 0; u < adj_.size(); ++u)
            for (auto v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    [[nodiscard]] bool valid(VertexId v) const noexcept { return v < adj_.size(); }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::size_t m_ = 0;
};

inline void require_valid(const Graph& g, const VertexSet& s) {
    for (auto v : s)
        if (!g.valid(v)) throw InvalidArgument("vertex id " + std::to_string(v) + " is not in the graph");
}

/// Number of neighbours of v inside s.
inline std::size_t degree_within(const Graph& g, VertexId v, const VertexSet& s) {
    auto nb = g.neighbors(v);
    if (s.size() * 8 < nb.size()) {
        std::size_t c = 0;
        for (auto u : s) c += g.has_edge(v, u) ? 1 : 0;
        return c;
    }
    std::size_t c = 0;
    auto a = nb.begin();
    auto b = s.begin();
    while (a != nb.end() && b != s.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else { ++c; ++a; ++b; }
    }
    return c;
}

/// True iff the subgraph induced by s is connected. Empty and singleton sets are connected.
inline bool is_connected(const Graph& g, const VertexSet& s) {
    require_valid(g, s);
    if (s.size() <= 1) return true;
    std::vector<char> seen(s.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    auto pos = [&](VertexId v) -> std::optional<std::size_t> {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - s.begin());
    };
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        for (auto u : g.neighbors(s[i])) {
            if (auto j = pos(u); j && !seen[*j]) {
                seen[*j] = 1;
                ++reached;
                stack.push_back(*j);
            }
        }
    }
    return reached == s.size();
}

/// An induced subgraph together with the map from its ids back to the parent's.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_parent;
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    require_valid(g, s);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        labels.push_back(g.label(s[i]));
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
    Subgraph out;
    out.graph = Graph::from_edges(s.size(), edges, std::move(labels));
    out.to_parent.assign(s.begin(), s.end());
    return out;
}

/// Counters from the edge-list loader's simplification pass.
struct LoadStats {
    std::size_t lines = 0;
    std::size_t edge_lines = 0;
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
};

namespace detail {

inline std::optional<std::uint64_t> as_unsigned(std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace detail

/// Reads a KONECT/SNAP style edge list. Lines starting with '%' or '#' are
/// comments, columns past the second are ignored. Labels are remapped to
/// dense ids in ascending numeric order when every label is an unsigned
/// integer, otherwise in ascending string order. Pairs are always read as
/// undirected; `directed` only records how the source was declared.
inline Graph load_edge_list(std::istream& in, bool directed = false, LoadStats* stats = nullptr) {
    (void)directed;
    LoadStats st;
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    while (std::getline(in, line)) {
        ++st.lines;
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) continue;
        if (a[0] == '%' || a[0] == '#') continue;
        std::string b;
        if (!(ls >> b)) throw ParseError("expected a pair of vertex labels", st.lines);
        raw.emplace_back(std::move(a), std::move(b));
    }
    if (raw.empty()) throw ParseError("edge list contains no edges");
    st.edge_lines = raw.size();

    std::vector<std::string> labels;
    labels.reserve(raw.size() * 2);
    for (auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    bool numeric = std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
        return detail::as_unsigned(s).has_value();
    });
    if (numeric) {
        // stable: "01" and "1" are distinct labels with equal value
        std::stable_sort(labels.begin(), labels.end(), [](const std::string& x, const std::string& y) {
            return *detail::as_unsigned(x) < *detail::as_unsigned(y);
        });
    }
    std::unordered_map<std::string, VertexId> id;
    id.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) id.emplace(labels[i], static_cast<VertexId>(i));

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto& [a, b] : raw) {
        VertexId u = id.at(a), v = id.at(b);
        if (u == v) {
            ++st.self_loops;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    st.duplicates = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    if (stats) *stats = st;
    const auto n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

inline Graph load_edge_list_file(const std::string& path, bool directed = false, LoadStats* stats = nullptr) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
    return load_edge_list(in, directed, stats);
}

inline Graph load_edge_list_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in);
}

/// One "u v" line per edge, using vertex labels. Isolated vertices are not representable.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

/// Table-style summary: vertex and edge counts, maximum and average degree.
struct GraphSummary {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t max_degree = 0;
    double avg_degree = 0.0;
};

inline GraphSummary summarize(const Graph& g) {
    GraphSummary s;
    s.n = g.order();
    s.m = g.size();
    for (VertexId v = 0; v < g.order(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
    s.avg_degree = s.n ? 2.0 * static_cast<double>(s.m) / static_cast<double>(s.n) : 0.0;
    return s;
}

/// Resolves labels to ids; throws InvalidArgument on an unknown label.
inline VertexSet resolve_labels(const Graph& g, std::span<const std::string> labels) {
    std::vector<VertexId> ids;
    ids.reserve(labels.size());
    for (auto& l : labels) {
        auto v = g.find(l);
        if (!v) throw InvalidArgument("unknown vertex label '" + l + "'");
        ids.push_back(*v);
    }
    return VertexSet(std::move(ids));
}

inline std::vector<std::string> to_labels(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(g.label(v));
    return out;
}

}  // namespace quasik

#endif  // QUASIK_GRAPH_HPP
