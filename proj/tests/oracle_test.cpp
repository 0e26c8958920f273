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

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace quasik;
using quasik::testing::cliques;
using quasik::testing::complete;
using quasik::testing::fig2;
using quasik::testing::letters;

TEST(OracleEnumerate, K4HasElevenCliques) {
    auto all = oracle::enumerate_all_qcs_bruteforce(complete(4), Gamma{}, 2);
    EXPECT_EQ(all.size(), 11U);
    EXPECT_EQ(all.front(), (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(oracle::enumerate_all_qcs_bruteforce(complete(4), Gamma{}, 3).size(), 5U);
}

TEST(OracleEnumerate, Fig2ContainsCaptionSets) {
    auto g = fig2();
    auto all = oracle::enumerate_all_qcs_bruteforce(g, parse_gamma("0.6"), 5);
    auto has = [&](const VertexSet& s) { return std::find(all.begin(), all.end(), s) != all.end(); };
    EXPECT_TRUE(has(letters(g, "abcfg")));
    EXPECT_TRUE(has(letters(g, "abcdfg")));
    EXPECT_EQ(all.front(), letters(g, "abcdfg"));
}

TEST(OracleEnumerate, EdgelessGraphHasNone) {
    auto g = Graph::from_edges(5, std::span<const Edge>{});
    EXPECT_TRUE(oracle::enumerate_all_qcs_bruteforce(g, parse_gamma("0.5"), 2).empty());
}

TEST(OracleEnumerate, RefusesLargeGraphs) {
    EXPECT_THROW(oracle::enumerate_all_qcs_bruteforce(complete(26), Gamma{}, 2), TooLarge);
}

TEST(OracleEnumerate, AgreesWithPredicateOnEverySubset) {
    gen::Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + gen::below(rng, 7);
        auto g = gen::gnp(rng, n, 0.5);
        auto gamma = std::vector<Gamma>{Gamma(1, 2), Gamma(3, 5), Gamma(4, 5), Gamma{}}[gen::below(rng, 4)];
        auto got = oracle::enumerate_all_qcs_bruteforce(g, gamma, 2);
        std::vector<VertexSet> expect;
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            std::vector<VertexId> ids;
            for (VertexId v = 0; v < n; ++v)
                if (mask >> v & 1U) ids.push_back(v);
            VertexSet s(ids);
            if (s.size() >= 2 && is_quasi_clique(g, s, gamma)) expect.push_back(s);
        }
        sort_canonical(expect);
        EXPECT_EQ(got, expect);
    }
}

TEST(OracleMaximal, Fig2) {
    auto g = fig2();
    auto gamma = parse_gamma("0.6");
    EXPECT_FALSE(oracle::is_maximal_bruteforce(g, letters(g, "abcfg"), gamma));
    EXPECT_TRUE(oracle::is_maximal_bruteforce(g, letters(g, "abcdfg"), gamma));
}

TEST(OracleMaximal, IsolatedClique) {
    // K5 plus a pendant path that cannot join it
    auto g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
    EXPECT_TRUE(oracle::is_maximal_bruteforce(g, VertexSet{0, 1, 2, 3, 4}, Gamma{}));
    EXPECT_FALSE(oracle::is_maximal_bruteforce(g, VertexSet{0, 1, 2, 3}, Gamma{}));
}

TEST(OracleTopK, Fig2) {
    auto g = fig2();
    auto top = oracle::topk_bruteforce(g, parse_gamma("0.6"), 5, 1);
    ASSERT_EQ(top.size(), 1U);
    EXPECT_EQ(top[0], letters(g, "abcdfg"));
}

TEST(OracleTopK, TwoDisjointK4) {
    auto top = oracle::topk_bruteforce(cliques({4, 4}), Gamma{}, 2, 2);
    ASSERT_EQ(top.size(), 2U);
    EXPECT_EQ(top[0], (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(top[1], (VertexSet{4, 5, 6, 7}));
}

TEST(OracleTopK, ShortListWhenKIsLarge) {
    auto top = oracle::topk_bruteforce(cliques({4, 3}), Gamma{}, 2, 10);
    EXPECT_EQ(top.size(), 2U);
}

TEST(OracleTopK, AntichainSortedBySize) {
    gen::Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gen::gnp(rng, 10, 0.45);
        auto top = oracle::topk_bruteforce(g, parse_gamma("0.6"), 3, 5);
        for (std::size_t i = 0; i < top.size(); ++i) {
            if (i) { EXPECT_GE(top[i - 1].size(), top[i].size()); }
            for (std::size_t j = 0; j < top.size(); ++j)
                if (i != j) { EXPECT_FALSE(top[i].is_strict_subset_of(top[j])); }
        }
    }
}

TEST(OracleClique, FindsCliques) {
    EXPECT_TRUE(oracle::has_clique_bruteforce(complete(3), 3));
    EXPECT_FALSE(oracle::has_clique_bruteforce(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), 3));
    EXPECT_TRUE(oracle::has_clique_bruteforce(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), 2));
}
