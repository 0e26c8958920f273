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

#include <boost/multiprecision/cpp_int.hpp>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace quasik;
using quasik::testing::complete;
using quasik::testing::fig2;
using quasik::testing::letters;

TEST(ParseGamma, ExactDecimals) {
    EXPECT_EQ(parse_gamma("0.6"), Gamma(3, 5));
    EXPECT_EQ(parse_gamma("1"), Gamma(1, 1));
    EXPECT_EQ(parse_gamma("0.85"), Gamma(17, 20));
    EXPECT_EQ(parse_gamma("1.000"), Gamma(1, 1));
    EXPECT_EQ(parse_gamma(".5"), Gamma(1, 2));
    EXPECT_EQ(parse_gamma("0.333333333333333333"), Gamma(333333333333333333ULL, 1000000000000000000ULL));
}

TEST(ParseGamma, Fractions) {
    EXPECT_EQ(parse_gamma("5/11"), Gamma(5, 11));
    EXPECT_EQ(parse_gamma("6/10"), Gamma(3, 5));
}

TEST(ParseGamma, Rejects) {
    for (const char* bad : {"", "0", "0.0", "1.01", "2", "-0.5", "abc", "0.6x", "1e-1", "0.", ".", "3/2", "0/4",
                            "1/0", "/", "0.5.5"})
        EXPECT_THROW(parse_gamma(bad), InvalidArgument) << bad;
}

TEST(Gamma, LowestTermsAndOrdering) {
    Gamma g(6, 10);
    EXPECT_EQ(g.num(), 3U);
    EXPECT_EQ(g.den(), 5U);
    EXPECT_LT(Gamma(3, 5), Gamma(4, 5));
    EXPECT_EQ(Gamma(3, 5).str(), "0.6");
    EXPECT_EQ(Gamma(5, 11).str(), "5/11");
    EXPECT_EQ(Gamma(1, 1).str(), "1");
    EXPECT_EQ(Gamma(17, 20).str(), "0.85");
    EXPECT_THROW(Gamma(0, 3), InvalidArgument);
    EXPECT_THROW(Gamma(4, 3), InvalidArgument);
}

TEST(DegreeThreshold, WorkedValues) {
    EXPECT_EQ(degree_threshold(parse_gamma("0.6"), 5), 3U);
    EXPECT_EQ(degree_threshold(parse_gamma("1"), 7), 6U);
    // r = 3 gadget density, |X| = 2r^2 + r = 21
    EXPECT_EQ(degree_threshold(Gamma(11, 23), 21), 10U);
    EXPECT_EQ(degree_threshold(parse_gamma("0.5"), 1), 0U);
    // gamma * (m - 1) integral: 0.6 * 10 = 6 exactly
    EXPECT_EQ(degree_threshold(parse_gamma("0.6"), 11), 6U);
}

TEST(DegreeThreshold, MatchesBigIntegerReference) {
    using boost::multiprecision::cpp_int;
    gen::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t den = 1 + gen::below(rng, 1'000'000'000'000ULL);
        const std::uint64_t num = 1 + gen::below(rng, den);
        Gamma g(num, den);
        for (std::size_t m = 1; m <= 1000; ++m) {
            cpp_int prod = cpp_int(g.num()) * (m - 1);
            cpp_int ref = (prod + g.den() - 1) / g.den();
            ASSERT_EQ(cpp_int(degree_threshold(g, m)), ref) << num << "/" << den << " m=" << m;
        }
    }
}

TEST(DegreeThreshold, MaxSizeForDegreeIsInverse) {
    for (auto text : {"0.5", "0.6", "0.85", "1", "5/11", "11/23"}) {
        auto g = parse_gamma(text);
        for (std::size_t d = 0; d < 60; ++d) {
            auto m = max_size_for_degree(g, d);
            EXPECT_LE(degree_threshold(g, m), d);
            EXPECT_GT(degree_threshold(g, m + 1), d);
        }
    }
}

TEST(IsQuasiClique, Fig2Examples) {
    auto g = fig2();
    auto gamma = parse_gamma("0.6");
    EXPECT_TRUE(is_quasi_clique(g, letters(g, "abcfg"), gamma));
    EXPECT_TRUE(is_quasi_clique(g, letters(g, "abcdfg"), gamma));
    EXPECT_FALSE(is_quasi_clique(g, letters(g, "abcdefg"), gamma));
}

TEST(IsQuasiClique, CliqueAndDetachedVertex) {
    auto g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_TRUE(is_quasi_clique(g, VertexSet{0, 1, 2, 3}, Gamma{}));
    EXPECT_FALSE(is_quasi_clique(g, VertexSet{0, 1, 2, 3, 4}, Gamma{}));
    EXPECT_FALSE(is_quasi_clique(g, VertexSet{0, 1, 2, 3, 4}, Gamma(1, 10)));  // disconnected
}

TEST(IsQuasiClique, EmptySetIsAnError) { EXPECT_THROW(is_quasi_clique(complete(3), {}, Gamma{}), InvalidArgument); }

TEST(IsQuasiClique, SingletonIsTrivial) { EXPECT_TRUE(is_quasi_clique(complete(3), VertexSet{1}, Gamma{})); }

TEST(IsQuasiClique, MonotoneInGamma) {
    gen::Rng rng(5);
    const std::vector<Gamma> ladder{Gamma(1, 10), Gamma(1, 2), Gamma(3, 5), Gamma(7, 10), Gamma(4, 5), Gamma(9, 10), Gamma{}};
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen::gnp(rng, 12, 0.5);
        auto s = VertexSet(gen::sample_vertices(rng, 12, 2 + gen::below(rng, 9)));
        // descending gamma: once true, stays true
        bool prev = false;
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            bool now = is_quasi_clique(g, s, *it);
            if (prev) { EXPECT_TRUE(now); }
            prev = now;
        }
    }
}

TEST(IsQuasiClique, GammaOneMeansClique) {
    gen::Rng rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        auto g = gen::gnp(rng, 10, 0.7);
        auto s = VertexSet(gen::sample_vertices(rng, 10, 1 + gen::below(rng, 10)));
        std::size_t inside = 0;
        for (auto [u, v] : g.edges()) inside += s.contains(u) && s.contains(v);
        EXPECT_EQ(is_quasi_clique(g, s, Gamma{}), inside == s.size() * (s.size() - 1) / 2);
    }
}

TEST(QuasiCliqueRecord, CarriesMinimumDegree) {
    auto g = fig2();
    auto rec = make_record(g, letters(g, "abcdfg"));
    EXPECT_EQ(rec.size, 6U);
    EXPECT_EQ(rec.min_internal_degree, 3U);
    EXPECT_GE(rec.min_internal_degree, degree_threshold(parse_gamma("0.6"), rec.size));
}
