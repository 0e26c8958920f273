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

// Seeded, complete enumeration of gamma-quasi-cliques.
//
// The search is a depth-first set-enumeration tree over a fixed vertex order
// (degree descending, id ascending). Every vertex subset that contains the
// seed is reachable along exactly one path, so emission is duplicate free.
// Quasi-cliques are not hereditary, so the predicate is evaluated at each
// node rather than used to cut prefixes; only the bounds below cut branches.
//
// Pruning rules, each independently switchable:
//   size_bound   |current| + |candidates| < min_size.
//   degree_peel  vertices whose degree (within the surviving graph) is below
//                threshold(min_size) are peeled away before searching.
//   frontier     for gamma >= 1/2 a quasi-clique has diameter <= 2, so a
//                vertex joining must be within two hops of every member
//                (one hop when gamma = 1). Below 1/2, restrict to the
//                connected component.
//   deficiency   a member v whose possible degree deg_C(v) + |adj(v) & P| is
//                below threshold(max(min_size, |C|)) kills the node; a
//                candidate failing threshold(max(min_size, |C| + 1)) is dropped.

#ifndef QUASIK_ENUMERATOR_HPP
#define QUASIK_ENUMERATOR_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "quasik/bitset.hpp"
#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/graph.hpp"

namespace quasik {

struct PruneFlags {
    bool size_bound = true;
    bool degree_peel = true;
    bool frontier = true;
    bool deficiency = true;

    static constexpr PruneFlags none() { return {false, false, false, false}; }
};

struct EnumerateOptions {
    PruneFlags prune{};
    /// Root branches are shared among this many threads when the seed is empty.
    unsigned workers = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline{};
    const std::atomic<bool>* cancel = nullptr;
};

struct EnumerateStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
    std::size_t peak_candidates = 0;

    EnumerateStats& operator+=(const EnumerateStats& o) {
        nodes += o.nodes;
        emitted += o.emitted;
        peak_candidates = std::max(peak_candidates, o.peak_candidates);
        return *this;
    }
};

namespace detail {

/// Vertices still alive after peeling everything (other than the seed) whose
/// degree in the surviving graph is below `need`. Empty if a seed vertex fails.
inline std::vector<char> peel(const Graph& g, const VertexSet& seed, std::size_t need, bool& seed_ok) {
    const auto n = g.order();
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> deg(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < need) {
            alive[v] = 0;
            queue.push_back(v);
        }
    }
    seed_ok = true;
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        if (seed.contains(v)) {
            seed_ok = false;
            return {};
        }
        for (auto u : g.neighbors(v)) {
            if (!alive[u]) continue;
            if (--deg[u] < need) {
                alive[u] = 0;
                queue.push_back(u);
            }
        }
    }
    return alive;
}

/// Dense local copy of the part of the graph one search tree can touch.
/// Local index 0..seed_count-1 holds the seed, the rest are candidates in
/// search order.
class LocalSearch {
public:
    struct Node {
        Bitset current;
        Bitset candidates;
        std::size_t size = 0;
    };

    template <typename Sink>
    LocalSearch(const Graph& g, std::vector<VertexId> vertices, std::size_t seed_count, const Gamma& gamma,
                std::size_t min_size, const EnumerateOptions& opt, Sink& sink, EnumerateStats& stats)
        : global_(std::move(vertices)), gamma_(gamma), min_size_(min_size), opt_(opt), stats_(stats) {
        const auto L = global_.size();
        adj_.assign(L, Bitset(L));
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = i + 1; j < L; ++j)
                if (g.has_edge(global_[i], global_[j])) {
                    adj_[i].set(j);
                    adj_[j].set(i);
                }
        Node root{Bitset(L), Bitset(L), seed_count};
        for (std::size_t i = 0; i < L; ++i) (i < seed_count ? root.current : root.candidates).set(i);

        if (opt_.prune.degree_peel && !peel_local(root)) return;
        if (opt_.prune.frontier && gamma_.at_least_half() && !gamma_.is_one()) {
            reach2_.assign(L, Bitset(L));
            for (std::size_t u = 0; u < L; ++u) {
                reach2_[u] = adj_[u];
                adj_[u].for_each([&](std::size_t w) { reach2_[u] |= adj_[w]; });
                reach2_[u].reset(u);
            }
        }
        search(root, sink);
    }

private:
    bool peel_local(Node& node) const {
        const auto need = degree_threshold(gamma_, min_size_);
        Bitset all = node.current | node.candidates;
        bool changed = true;
        while (changed) {
            changed = false;
            bool ok = true;
            all.for_each([&](std::size_t v) {
                if (!ok || adj_[v].and_count(all) >= need) return;
                if (node.current.test(v)) {
                    ok = false;
                    return;
                }
                all.reset(v);
                changed = true;
            });
            if (!ok) return false;
        }
        node.candidates &= all;
        return true;
    }

    // Applies the deficiency rule in place; false when the node is dead.
    bool tighten(Node& node) const {
        const auto t_cur = degree_threshold(gamma_, std::max(min_size_, node.size));
        const auto t_add = degree_threshold(gamma_, std::max(min_size_, node.size + 1));
        bool changed = true;
        while (changed) {
            changed = false;
            bool dead = false;
            node.current.for_each([&](std::size_t v) {
                if (!dead && adj_[v].and_count(node.current) + adj_[v].and_count(node.candidates) < t_cur) dead = true;
            });
            if (dead) return false;
            node.candidates.for_each([&](std::size_t u) {
                if (adj_[u].and_count(node.current) + adj_[u].and_count(node.candidates) < t_add) {
                    node.candidates.reset(u);
                    changed = true;
                }
            });
        }
        return true;
    }

    bool connected(const Bitset& set) const {
        const auto start = set.first();
        if (start == set.width()) return true;
        Bitset reach(set.width());
        reach.set(start);
        Bitset frontier = reach;
        while (!frontier.none()) {
            Bitset next(set.width());
            frontier.for_each([&](std::size_t v) { next |= adj_[v]; });
            next &= set;
            next -= reach;
            reach |= next;
            frontier = std::move(next);
        }
        return reach == set;
    }

    bool is_quasi_clique(const Node& node) const {
        const auto need = degree_threshold(gamma_, node.size);
        bool ok = true;
        node.current.for_each([&](std::size_t v) {
            if (ok && adj_[v].and_count(node.current) < need) ok = false;
        });
        return ok && connected(node.current);
    }

    void check_budget() const {
        if ((stats_.nodes & 0xFFF) != 0) return;
        if (opt_.cancel && opt_.cancel->load(std::memory_order_relaxed)) throw SearchTimeout();
        if (opt_.deadline && std::chrono::steady_clock::now() > *opt_.deadline) throw SearchTimeout();
    }

    template <typename Sink>
    void search(Node& node, Sink& sink) {
        ++stats_.nodes;
        check_budget();
        if (opt_.prune.deficiency && !tighten(node)) return;
        const auto pool = node.candidates.count();
        stats_.peak_candidates = std::max(stats_.peak_candidates, pool);
        if (opt_.prune.size_bound && node.size + pool < min_size_) return;

        if (node.size >= min_size_ && is_quasi_clique(node)) {
            ++stats_.emitted;
            std::vector<VertexId> ids;
            ids.reserve(node.size);
            node.current.for_each([&](std::size_t i) { ids.push_back(global_[i]); });
            sink(VertexSet(std::move(ids)));
        }

        node.candidates.for_each([&](std::size_t u) {
            Node child{node.current, node.candidates, node.size + 1};
            child.current.set(u);
            child.candidates.keep_above(u);
            if (opt_.prune.frontier) {
                if (gamma_.is_one()) child.candidates &= adj_[u];
                else if (!reach2_.empty()) child.candidates &= reach2_[u];
            }
            search(child, sink);
        });
    }

    std::vector<VertexId> global_;
    std::vector<Bitset> adj_;
    std::vector<Bitset> reach2_;
    Gamma gamma_;
    std::size_t min_size_;
    const EnumerateOptions& opt_;
    EnumerateStats& stats_;
};

/// Marks vertices within `hops` (1 or 2) of v, moving only through vertices
/// accepted by `allowed`.
template <typename Allowed>
void mark_ball(const Graph& g, VertexId v, int hops, const Allowed& allowed, std::vector<std::uint32_t>& stamp,
               std::uint32_t tag, std::vector<VertexId>& touched) {
    for (auto w : g.neighbors(v)) {
        if (!allowed(w)) continue;
        if (stamp[w] != tag) {
            stamp[w] = tag;
            touched.push_back(w);
        }
        if (hops < 2) continue;
        for (auto x : g.neighbors(w)) {
            if (x == v || stamp[x] == tag || !allowed(x)) continue;
            stamp[x] = tag;
            touched.push_back(x);
        }
    }
}

template <typename Allowed>
std::vector<VertexId> component_of(const Graph& g, VertexId v, const Allowed& allowed) {
    std::vector<char> seen(g.order(), 0);
    std::vector<VertexId> out{v}, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : g.neighbors(x))
            if (!seen[y] && allowed(y)) {
                seen[y] = 1;
                out.push_back(y);
                stack.push_back(y);
            }
    }
    return out;
}

}  // namespace detail

/// Superset of the vertices that can join `current` in some strictly larger
/// gamma-quasi-clique of g.
inline VertexSet candidate_frontier(const Graph& g, const VertexSet& current, const Gamma& gamma) {
    if (current.empty()) throw InvalidArgument("candidate frontier needs a nonempty current set");
    require_valid(g, current);
    const auto n = g.order();
    const auto need = degree_threshold(gamma, current.size() + 1);
    for (auto v : current)
        if (g.degree(v) < need) return {};
    auto allowed = [](VertexId) { return true; };
    std::vector<VertexId> out;
    if (gamma.at_least_half()) {
        const int hops = gamma.is_one() ? 1 : 2;
        std::vector<std::uint32_t> stamp(n, 0), hits(n, 0);
        std::uint32_t tag = 0;
        for (auto v : current) {
            std::vector<VertexId> touched;
            detail::mark_ball(g, v, hops, allowed, stamp, ++tag, touched);
            for (auto u : touched) ++hits[u];
        }
        for (VertexId u = 0; u < n; ++u)
            if (hits[u] == current.size() && !current.contains(u)) out.push_back(u);
    } else {
        auto comp = detail::component_of(g, current[0], allowed);
        VertexSet c(comp);
        if (!current.is_subset_of(c)) return {};
        for (auto u : c)
            if (!current.contains(u)) out.push_back(u);
    }
    std::erase_if(out, [&](VertexId u) { return g.degree(u) < need; });
    return VertexSet(std::move(out));
}

/// Streams every gamma-quasi-clique S with seed ⊆ S and |S| >= min_size to
/// `sink`, each exactly once. With one worker the emission order is fixed.
template <typename Sink>
    requires std::invocable<Sink&, VertexSet>
EnumerateStats enumerate_qcs(const Graph& g, const VertexSet& seed, const Gamma& gamma, std::size_t min_size,
                             Sink&& sink, const EnumerateOptions& opt = {}) {
    if (min_size < 2) throw InvalidArgument("min_size must be at least 2");
    require_valid(g, seed);
    const auto n = g.order();
    EnumerateStats stats;

    std::vector<char> alive(n, 1);
    if (opt.prune.degree_peel) {
        bool seed_ok = true;
        alive = detail::peel(g, seed, degree_threshold(gamma, min_size), seed_ok);
        if (!seed_ok) return stats;
    }

    std::vector<VertexId> order;
    for (VertexId v = 0; v < n; ++v)
        if (alive[v]) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> rank(n, n);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    const bool use_frontier = opt.prune.frontier;
    const int hops = gamma.is_one() ? 1 : 2;

    if (!seed.empty()) {
        auto allowed = [&](VertexId u) { return alive[u] != 0; };
        std::vector<VertexId> cand;
        if (use_frontier && gamma.at_least_half()) {
            std::vector<std::uint32_t> stamp(n, 0), hits(n, 0);
            std::uint32_t tag = 0;
            for (auto s : seed) {
                std::vector<VertexId> touched;
                detail::mark_ball(g, s, hops, allowed, stamp, ++tag, touched);
                for (auto u : touched) ++hits[u];
            }
            for (auto v : order)
                if (hits[v] == seed.size() && !seed.contains(v)) cand.push_back(v);
        } else if (use_frontier) {
            auto comp = VertexSet(detail::component_of(g, seed[0], allowed));
            if (!seed.is_subset_of(comp)) return stats;
            for (auto v : order)
                if (comp.contains(v) && !seed.contains(v)) cand.push_back(v);
        } else {
            for (auto v : order)
                if (!seed.contains(v)) cand.push_back(v);
        }
        std::vector<VertexId> local(seed.begin(), seed.end());
        local.insert(local.end(), cand.begin(), cand.end());
        detail::LocalSearch(g, std::move(local), seed.size(), gamma, min_size, opt, sink, stats);
        return stats;
    }

    // Empty seed: one search tree per root vertex, holding sets whose first
    // vertex in search order is that root.
    auto run_root = [&](std::size_t i, auto& emit, EnumerateStats& st, std::vector<std::uint32_t>& stamp,
                        std::uint32_t tag) {
        const auto v = order[i];
        auto later = [&](VertexId u) { return rank[u] > i && rank[u] < n; };
        std::vector<VertexId> cand;
        if (use_frontier && gamma.at_least_half()) {
            std::vector<VertexId> touched;
            detail::mark_ball(g, v, hops, later, stamp, tag, touched);
            cand = std::move(touched);
        } else if (use_frontier) {
            cand = detail::component_of(g, v, later);
            std::erase(cand, v);
        } else {
            for (std::size_t j = i + 1; j < order.size(); ++j) cand.push_back(order[j]);
        }
        if (opt.prune.size_bound && cand.size() + 1 < min_size) return;
        std::sort(cand.begin(), cand.end(), [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
        std::vector<VertexId> local{v};
        local.insert(local.end(), cand.begin(), cand.end());
        detail::LocalSearch(g, std::move(local), 1, gamma, min_size, opt, emit, st);
    };

    const unsigned workers = std::max(1U, opt.workers);
    if (workers == 1 || order.size() < 2) {
        std::vector<std::uint32_t> stamp(n, 0);
        for (std::size_t i = 0; i < order.size(); ++i) run_root(i, sink, stats, stamp, static_cast<std::uint32_t>(i + 1));
        return stats;
    }

    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    std::exception_ptr failure;
    std::atomic<bool> stop{false};
    std::vector<EnumerateStats> per(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<std::uint32_t> stamp(n, 0);
                auto emit = [&](VertexSet s) {
                    std::lock_guard lock(sink_mutex);
                    sink(std::move(s));
                };
                try {
                    for (std::size_t i; !stop.load() && (i = next.fetch_add(1)) < order.size();)
                        run_root(i, emit, per[w], stamp, static_cast<std::uint32_t>(i + 1));
                } catch (...) {
                    std::lock_guard lock(sink_mutex);
                    if (!failure) failure = std::current_exception();
                    stop = true;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& s : per) stats += s;
    return stats;
}

/// All quasi-cliques containing `seed`, in canonical (largest first) order.
inline std::vector<VertexSet> collect_qcs(const Graph& g, const VertexSet& seed, const Gamma& gamma,
                                          std::size_t min_size, const EnumerateOptions& opt = {}) {
    std::vector<VertexSet> out;
    enumerate_qcs(g, seed, gamma, min_size, [&](VertexSet s) { out.push_back(std::move(s)); }, opt);
    sort_canonical(out);
    return out;
}

}  // namespace quasik

#endif  // QUASIK_ENUMERATOR_HPP
