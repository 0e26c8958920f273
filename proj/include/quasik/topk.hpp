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

// Top-k maximal quasi-clique search.
//
// kqc runs in two phases. Kernel detection enumerates the denser
// gamma'-quasi-cliques and keeps the k' largest containment-maximal ones.
// Kernel expansion enumerates every gamma-quasi-clique containing each
// kernel; the k largest containment-maximal results are returned. Because
// expansion is complete over supersets of a kernel, each returned set is
// maximal in the whole graph, but the k returned need not be the true top k.
// naive_qc is the exact baseline: enumerate everything, keep the top k.

#ifndef QUASIK_TOPK_HPP
#define QUASIK_TOPK_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "quasik/enumerator.hpp"
#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/graph.hpp"

namespace quasik {

struct TopKParams {
    Gamma gamma;
    Gamma gamma_prime;
    std::size_t k = 1;
    std::size_t k_prime = 1;
    std::size_t min_size = 2;

    void validate() const {
        if (!(gamma < gamma_prime)) throw InvalidArgument("gamma' must be strictly greater than gamma");
        if (k < 1) throw InvalidArgument("k must be at least 1");
        if (k_prime < k) throw InvalidArgument("k' must be at least k");
        if (min_size < 2) throw InvalidArgument("min_size must be at least 2");
    }
};

/// gamma' = min(1, gamma + 1/5), exactly.
inline Gamma default_gamma_prime(const Gamma& gamma) {
    const auto num = 5 * static_cast<u128>(gamma.num()) + gamma.den();
    const auto den = 5 * static_cast<u128>(gamma.den());
    if (num >= den) return Gamma{};
    return Gamma(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

/// Fills unset gamma' and k' with min(1, gamma + 0.2) and 3k.
inline TopKParams default_params(const Gamma& gamma, std::size_t k, std::size_t min_size,
                                 std::optional<Gamma> gamma_prime = std::nullopt,
                                 std::optional<std::size_t> k_prime = std::nullopt) {
    TopKParams p;
    p.gamma = gamma;
    p.gamma_prime = gamma_prime.value_or(default_gamma_prime(gamma));
    p.k = k;
    p.k_prime = k_prime.value_or(3 * k);
    p.min_size = min_size;
    return p;
}

/// Online antichain: holds exactly the members of everything inserted so far
/// that are not contained in another inserted set. The final contents do not
/// depend on insertion order. Not thread-safe.
class MaximalSetPool {
public:
    /// Returns true when s was kept.
    bool insert(VertexSet s) {
        if (s.empty() || has_superset(s)) return false;
        remove_subsets_of(s);
        const auto idx = sets_.size();
        for (auto v : s) postings_[v].push_back(idx);
        sets_.push_back(std::move(s));
        ++alive_;
        if (sets_.size() > 64 && sets_.size() > 4 * alive_) compact();
        return true;
    }

    [[nodiscard]] std::size_t size() const noexcept { return alive_; }

    [[nodiscard]] std::vector<VertexSet> contents() const {
        std::vector<VertexSet> out;
        out.reserve(alive_);
        for (auto& s : sets_)
            if (s) out.push_back(*s);
        sort_canonical(out);
        return out;
    }

private:
    // Any superset must appear in the posting list of the rarest member of s.
    bool has_superset(const VertexSet& s) const {
        const std::vector<std::size_t>* shortest = nullptr;
        for (auto v : s) {
            auto it = postings_.find(v);
            if (it == postings_.end()) return false;
            if (!shortest || it->second.size() < shortest->size()) shortest = &it->second;
        }
        for (auto i : *shortest)
            if (sets_[i] && s.is_subset_of(*sets_[i])) return true;
        return false;
    }

    void remove_subsets_of(const VertexSet& s) {
        std::unordered_map<std::size_t, std::size_t> hits;
        for (auto v : s) {
            auto it = postings_.find(v);
            if (it == postings_.end()) continue;
            for (auto i : it->second)
                if (sets_[i]) ++hits[i];
        }
        for (auto [i, c] : hits)
            if (c == sets_[i]->size()) {
                sets_[i].reset();
                --alive_;
            }
    }

    void compact() {
        std::vector<std::optional<VertexSet>> kept;
        kept.reserve(alive_);
        postings_.clear();
        for (auto& s : sets_) {
            if (!s) continue;
            for (auto v : *s) postings_[v].push_back(kept.size());
            kept.push_back(std::move(s));
        }
        sets_ = std::move(kept);
    }

    std::vector<std::optional<VertexSet>> sets_;
    std::unordered_map<VertexId, std::vector<std::size_t>> postings_;
    std::size_t alive_ = 0;
};

/// At most k members of s that are not contained in any other member,
/// the largest first (ties: lexicographically smaller id sequence first).
inline std::vector<VertexSet> k_max(std::vector<VertexSet> s, std::size_t k) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    sort_canonical(s);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<VertexSet> kept;
    for (auto& q : s) {
        if (kept.size() == k) break;
        bool covered = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& t) { return q.is_subset_of(t); });
        if (!covered) kept.push_back(std::move(q));
    }
    return kept;
}

struct TopKResult {
    std::vector<VertexSet> sets;
    /// Kernels expanded (kqc only).
    std::size_t kernel_count = 0;
    /// Quasi-cliques emitted during expansion, or by the single pass of naive_qc.
    std::uint64_t expansion_count = 0;
    std::uint64_t detection_count = 0;
    double detection_ms = 0;
    double expansion_ms = 0;
    EnumerateStats stats;
    std::vector<std::string> warnings;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Exact top-k: enumerate every gamma-quasi-clique, then k_max.
inline TopKResult naive_qc(const Graph& g, const Gamma& gamma, std::size_t min_size, std::size_t k,
                           const EnumerateOptions& opt = {}) {
    if (k < 1) throw InvalidArgument("k must be at least 1");
    TopKResult r;
    MaximalSetPool pool;
    const auto t0 = std::chrono::steady_clock::now();
    r.stats = enumerate_qcs(g, VertexSet{}, gamma, min_size, [&](VertexSet s) { pool.insert(std::move(s)); }, opt);
    r.expansion_count = r.stats.emitted;
    r.sets = k_max(pool.contents(), k);
    r.expansion_ms = detail::ms_since(t0);
    return r;
}

/// Kernel detection at gamma', kernel expansion at gamma.
inline TopKResult kqc(const Graph& g, const TopKParams& params, const EnumerateOptions& opt = {}) {
    params.validate();
    TopKResult r;

    auto t0 = std::chrono::steady_clock::now();
    MaximalSetPool kernels_pool;
    r.stats = enumerate_qcs(g, VertexSet{}, params.gamma_prime, params.min_size,
                            [&](VertexSet s) { kernels_pool.insert(std::move(s)); }, opt);
    r.detection_count = r.stats.emitted;
    const auto kernels = k_max(kernels_pool.contents(), params.k_prime);
    r.kernel_count = kernels.size();
    r.detection_ms = detail::ms_since(t0);
    if (kernels.empty()) {
        r.warnings.push_back("no " + params.gamma_prime.str() + "-quasi-clique kernels with at least " +
                             std::to_string(params.min_size) + " vertices");
        return r;
    }

    t0 = std::chrono::steady_clock::now();
    MaximalSetPool expanded;
    std::mutex mutex;
    EnumerateOptions inner = opt;
    inner.workers = 1;
    const unsigned workers = std::max(1U, std::min<unsigned>(opt.workers, static_cast<unsigned>(kernels.size())));

    auto expand = [&](const VertexSet& kernel, EnumerateStats& st) {
        st += enumerate_qcs(g, kernel, params.gamma, params.min_size,
                            [&](VertexSet s) {
                                std::lock_guard lock(mutex);
                                expanded.insert(std::move(s));
                            },
                            inner);
    };

    EnumerateStats expansion;
    if (workers == 1) {
        for (auto& q : kernels) expand(q, expansion);
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::exception_ptr failure;
        std::vector<EnumerateStats> per(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i; !stop.load() && (i = next.fetch_add(1)) < kernels.size();)
                            expand(kernels[i], per[w]);
                    } catch (...) {
                        std::lock_guard lock(mutex);
                        if (!failure) failure = std::current_exception();
                        stop = true;
                    }
                });
        }
        if (failure) std::rethrow_exception(failure);
        for (auto& s : per) expansion += s;
    }
    r.expansion_count = expansion.emitted;
    r.stats += expansion;
    r.stats.emitted = r.detection_count + expansion.emitted;
    r.sets = k_max(expanded.contents(), params.k);
    r.expansion_ms = detail::ms_since(t0);
    return r;
}

}  // namespace quasik

#endif  // QUASIK_TOPK_HPP
