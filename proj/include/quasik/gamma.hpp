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

#ifndef QUASIK_GAMMA_HPP
#define QUASIK_GAMMA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "quasik/error.hpp"

namespace quasik {

/// 128-bit intermediate for products of two 64-bit terms.
__extension__ using u128 = unsigned __int128;

/// Exact density threshold p/q with 0 < p <= q, kept in lowest terms.
class Gamma {
public:
    /// Defaults to 1 (cliques).
    constexpr Gamma() = default;

    Gamma(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den == 0 || num == 0 || num > den) throw InvalidArgument("gamma must lie in (0, 1]");
        auto g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    [[nodiscard]] constexpr std::uint64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::uint64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_one() const noexcept { return num_ == den_; }
    /// gamma >= 1/2, the regime where quasi-cliques have diameter at most two.
    [[nodiscard]] constexpr bool at_least_half() const noexcept { return 2 * static_cast<u128>(num_) >= den_; }

    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p/q" in lowest terms.
    [[nodiscard]] std::string fraction() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Shortest exact decimal when the denominator has only factors 2 and 5,
    /// otherwise the fraction form.
    [[nodiscard]] std::string str() const {
        std::uint64_t d = den_;
        unsigned twos = 0, fives = 0;
        while (d % 2 == 0) { d /= 2; ++twos; }
        while (d % 5 == 0) { d /= 5; ++fives; }
        if (d != 1) return fraction();
        if (is_one()) return "1";
        unsigned digits = twos > fives ? twos : fives;
        u128 scaled = static_cast<u128>(num_);
        for (unsigned i = 0; i < digits; ++i) scaled *= 10;
        scaled /= den_;
        std::string frac;
        for (unsigned i = 0; i < digits; ++i) {
            frac.insert(frac.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
            scaled /= 10;
        }
        return "0." + frac;
    }

    friend bool operator==(const Gamma&, const Gamma&) = default;
    friend std::strong_ordering operator<=>(const Gamma& a, const Gamma& b) noexcept {
        auto l = static_cast<u128>(a.num_) * b.den_;
        auto r = static_cast<u128>(b.num_) * a.den_;
        return l <=> r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Gamma& g) { return os << g.str(); }

private:
    std::uint64_t num_ = 1;
    std::uint64_t den_ = 1;
};

/// Parses a decimal ("0.6", "1", ".85") or a fraction ("5/11") exactly.
inline Gamma parse_gamma(std::string_view text) {
    auto fail = [&]() -> Gamma { throw InvalidArgument("invalid gamma '" + std::string(text) + "': expected a decimal or p/q in (0, 1]"); };
    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto to_u64 = [&](std::string_view s) -> std::uint64_t {
        // 19 digits always fit in 64 bits
        if (s.size() > 19) fail();
        std::uint64_t v = 0;
        for (char c : s) v = v * 10 + static_cast<std::uint64_t>(c - '0');
        return v;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto p = text.substr(0, slash), q = text.substr(slash + 1);
        if (!digits_only(p) || !digits_only(q)) return fail();
        auto pn = to_u64(p), qn = to_u64(q);
        if (pn == 0 || qn == 0 || pn > qn) return fail();
        return Gamma(pn, qn);
    }

    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !digits_only(whole)) return fail();
    if (dot != std::string_view::npos && !digits_only(frac)) return fail();
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    if (frac.size() > 18) return fail();

    std::uint64_t w = whole.empty() ? 0 : to_u64(whole);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::uint64_t f = frac.empty() ? 0 : to_u64(frac);
    if (w > 1 || (w == 1 && f != 0)) return fail();
    std::uint64_t num = w * den + f;
    if (num == 0) return fail();
    return Gamma(num, den);
}

/// ceil(gamma * (m - 1)), the minimum internal degree in an m-vertex quasi-clique.
inline std::size_t degree_threshold(const Gamma& gamma, std::size_t m) {
    if (m <= 1) return 0;
    auto prod = static_cast<u128>(gamma.num()) * (m - 1);
    return static_cast<std::size_t>((prod + gamma.den() - 1) / gamma.den());
}

/// Largest m with degree_threshold(gamma, m) <= d: a vertex with d usable
/// neighbours cannot sit in a larger quasi-clique.
inline std::size_t max_size_for_degree(const Gamma& gamma, std::size_t d) {
    // ceil(p(m-1)/q) <= d  <=>  p(m-1) <= d*q  <=>  m-1 <= floor(d*q/p)
    auto bound = static_cast<u128>(d) * gamma.den() / gamma.num();
    return static_cast<std::size_t>(bound) + 1;
}

}  // namespace quasik

#endif  // QUASIK_GAMMA_HPP
