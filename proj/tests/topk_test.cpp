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

#include <algorithm>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace quasik;
using quasik::testing::cliques;
using quasik::testing::fig2;
using quasik::testing::letters;

namespace {

// All containment-maximal members, largest first, first k.
std::vector<VertexSet> k_max_reference(std::vector<VertexSet> s, std::size_t k) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<VertexSet> maximal;
    for (auto& q : s) {
        bool inside = false;
        for (auto& t : s) inside = inside || q.is_strict_subset_of(t);
        if (!inside) maximal.push_back(q);
    }
    sort_canonical(maximal);
    if (maximal.size() > k) maximal.resize(k);
    return maximal;
}

std::vector<VertexSet> random_collection(gen::Rng& rng) {
    const std::size_t universe = 3 + gen::below(rng, 8);
    std::vector<VertexSet> out(gen::below(rng, 15));
    for (auto& s : out) s = VertexSet(gen::sample_vertices(rng, universe, 1 + gen::below(rng, universe)));
    return out;
}

}  // namespace

TEST(KMax, Examples) {
    std::vector<VertexSet> s{{1, 2, 3}, {1, 2}, {4, 5}};
    EXPECT_EQ(k_max(s, 2), (std::vector<VertexSet>{{1, 2, 3}, {4, 5}}));
    EXPECT_EQ(k_max(s, 1), (std::vector<VertexSet>{{1, 2, 3}}));
    EXPECT_TRUE(k_max({}, 3).empty());
    EXPECT_EQ(k_max({{1, 2}, {1, 2}, {2, 3}}, 5), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
    EXPECT_THROW(k_max(s, 0), InvalidArgument);
}

TEST(KMax, MatchesReferenceOnRandomCollections) {
    gen::Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        auto s = random_collection(rng);
        const std::size_t k = 1 + gen::below(rng, 6);
        auto got = k_max(s, k);
        ASSERT_EQ(got, k_max_reference(s, k)) << "trial " << trial;
        EXPECT_LE(got.size(), k);
        for (auto& a : got)
            for (auto& b : got) EXPECT_FALSE(a.is_strict_subset_of(b));
    }
}

TEST(MaximalSetPool, ContentsIndependentOfOrder) {
    gen::Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = random_collection(rng);
        MaximalSetPool a, b;
        for (auto& q : s) a.insert(q);
        for (auto it = s.rbegin(); it != s.rend(); ++it) b.insert(*it);
        auto expect = k_max_reference(s, s.size() + 1);
        ASSERT_EQ(a.contents(), expect);
        ASSERT_EQ(b.contents(), expect);
        EXPECT_EQ(a.size(), expect.size());
    }
}

TEST(MaximalSetPool, SurvivesCompaction) {
    MaximalSetPool pool;
    // a growing chain forces many removals
    std::vector<VertexId> ids;
    for (VertexId v = 0; v < 300; ++v) {
        ids.push_back(v);
        EXPECT_TRUE(pool.insert(VertexSet(ids)));
        EXPECT_EQ(pool.size(), 1U);
    }
    EXPECT_FALSE(pool.insert(VertexSet{5, 6}));
    EXPECT_EQ(pool.contents().front().size(), 300U);
}

TEST(Params, DefaultsAndValidation) {
    auto p = default_params(parse_gamma("0.6"), 10, 5);
    EXPECT_EQ(p.gamma_prime, parse_gamma("0.8"));
    EXPECT_EQ(p.k_prime, 30U);
    EXPECT_EQ(default_gamma_prime(parse_gamma("0.9")), Gamma{});
    EXPECT_EQ(default_gamma_prime(Gamma(1, 3)), Gamma(8, 15));
    p.validate();
    auto bad = p;
    bad.gamma_prime = p.gamma;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = p;
    bad.k_prime = 5;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = p;
    bad.min_size = 1;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = p;
    bad.k = 0;
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(NaiveQC, Fig2) {
    auto g = fig2();
    auto r = naive_qc(g, parse_gamma("0.6"), 5, 1);
    ASSERT_EQ(r.sets.size(), 1U);
    EXPECT_EQ(r.sets[0], letters(g, "abcdfg"));
}

TEST(NaiveQC, MatchesOracleTopK) {
    gen::Rng rng(33);
    const std::vector<Gamma> gs{parse_gamma("0.5"), parse_gamma("0.6"), parse_gamma("0.7"), parse_gamma("0.8"),
                                parse_gamma("0.9"), Gamma{}};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 5 + gen::below(rng, 8);
        auto g = gen::gnp(rng, n, 0.2 + 0.1 * static_cast<double>(gen::below(rng, 7)));
        const auto& gamma = gs[gen::below(rng, gs.size())];
        const std::size_t min_size = 2 + gen::below(rng, 3);
        const std::size_t k = 1 + gen::below(rng, 5);
        ASSERT_EQ(naive_qc(g, gamma, min_size, k).sets, oracle::topk_bruteforce(g, gamma, min_size, k)) << "trial " << trial;
    }
}

TEST(KQC, Fig2) {
    auto g = fig2();
    auto p = default_params(parse_gamma("0.6"), 1, 5, parse_gamma("0.8"), 3);
    auto r = kqc(g, p);
    ASSERT_EQ(r.sets.size(), 1U);
    EXPECT_EQ(r.sets[0], letters(g, "abcdfg"));
    EXPECT_GE(r.kernel_count, 1U);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(KQC, PlantedCliqueIsFound) {
    gen::Rng rng(34);
    auto inst = gen::planted(rng, 30, 0.1, {});
    // plant a full K8 on fixed vertices
    std::vector<Edge> e = inst.graph.edges();
    for (VertexId u = 0; u < 8; ++u)
        for (VertexId v = u + 1; v < 8; ++v) e.emplace_back(u, v);
    auto g = Graph::from_edges(30, e);
    auto r = kqc(g, default_params(parse_gamma("0.8"), 1, 5, Gamma{}, 10));
    ASSERT_EQ(r.sets.size(), 1U);
    EXPECT_GE(r.sets[0].size(), 8U);
    EXPECT_TRUE((VertexSet{0, 1, 2, 3, 4, 5, 6, 7}).is_subset_of(r.sets[0]));
}

TEST(KQC, NoKernelsGivesEmptyResultAndWarning) {
    auto g = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    auto r = kqc(g, default_params(parse_gamma("0.5"), 2, 3));
    EXPECT_TRUE(r.sets.empty());
    EXPECT_EQ(r.kernel_count, 0U);
    ASSERT_EQ(r.warnings.size(), 1U);
}

TEST(KQC, OutputIsMaximalAndBoundedByExact) {
    gen::Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 8 + gen::below(rng, 9);
        auto g = gen::gnp(rng, n, 0.3 + 0.1 * static_cast<double>(gen::below(rng, 5)));
        auto gamma = std::vector<Gamma>{parse_gamma("0.5"), parse_gamma("0.6"), parse_gamma("0.7")}[gen::below(rng, 3)];
        const std::size_t k = 1 + gen::below(rng, 4);
        auto p = default_params(gamma, k, 3);
        auto heuristic = kqc(g, p);
        auto exact = naive_qc(g, gamma, 3, k);
        EXPECT_LE(heuristic.sets.size(), k);
        for (auto& q : heuristic.sets) {
            EXPECT_GE(q.size(), 3U);
            EXPECT_TRUE(oracle::is_maximal_bruteforce(g, q, gamma)) << "trial " << trial;
        }
        // the exact list dominates position by position
        for (std::size_t i = 0; i < heuristic.sets.size(); ++i) {
            ASSERT_LT(i, exact.sets.size());
            EXPECT_LE(heuristic.sets[i].size(), exact.sets[i].size());
        }
    }
}

TEST(KQC, DisjointCliquesAreAllReturned) {
    auto g = cliques({6, 5, 4});
    auto r = kqc(g, default_params(parse_gamma("0.7"), 3, 3));
    ASSERT_EQ(r.sets.size(), 3U);
    EXPECT_EQ(r.sets[0].size(), 6U);
    EXPECT_EQ(r.sets[1].size(), 5U);
    EXPECT_EQ(r.sets[2].size(), 4U);
}

TEST(KQC, DeterministicAndWorkerIndependent) {
    gen::Rng rng(36);
    auto inst = gen::planted(rng, 60, 0.08, {10, 9, 8});
    auto p = default_params(parse_gamma("0.8"), 3, 5, Gamma{}, 9);
    auto a = kqc(inst.graph, p);
    auto b = kqc(inst.graph, p);
    EnumerateOptions par;
    par.workers = 3;
    auto c = kqc(inst.graph, p, par);
    EXPECT_EQ(a.sets, b.sets);
    EXPECT_EQ(a.sets, c.sets);
    EXPECT_EQ(a.kernel_count, c.kernel_count);
    EXPECT_EQ(naive_qc(inst.graph, p.gamma, 5, 3).sets, naive_qc(inst.graph, p.gamma, 5, 3, par).sets);
}
