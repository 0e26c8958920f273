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

#ifndef QUASIK_METRICS_HPP
#define QUASIK_METRICS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "quasik/error.hpp"
#include "quasik/graph.hpp"

namespace quasik {

/// Quasi-clique sizes, held in non-increasing order.
class SizeList {
public:
    SizeList() = default;
    explicit SizeList(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
        for (auto s : sizes_)
            if (s == 0) throw InvalidArgument("sizes must be positive");
        std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
    }
    SizeList(std::initializer_list<std::size_t> sizes) : SizeList(std::vector<std::size_t>(sizes)) {}

    static SizeList of(std::span<const VertexSet> sets) {
        std::vector<std::size_t> s;
        s.reserve(sets.size());
        for (auto& q : sets) s.push_back(q.size());
        return SizeList(std::move(s));
    }

    [[nodiscard]] std::size_t size() const noexcept { return sizes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return sizes_.empty(); }
    [[nodiscard]] std::size_t operator[](std::size_t i) const noexcept { return sizes_[i]; }
    [[nodiscard]] const std::vector<std::size_t>& values() const noexcept { return sizes_; }

    /// Space separated, e.g. "12 10 10".
    [[nodiscard]] std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(sizes_[i]);
        }
        return out;
    }

    friend bool operator==(const SizeList&, const SizeList&) = default;

private:
    std::vector<std::size_t> sizes_;
};

struct SizeComparison {
    /// 100 * sum|h_i - z_i| / sum max(h_i, z_i), in [0, 100].
    double percent = 0;
    std::size_t abs_diff = 0;
    std::size_t max_sum = 0;
    /// The shorter list was padded with zeros to pair positions.
    bool padded = false;
};

/// Position-wise Soergel distance between two size lists, both taken largest
/// first; the shorter list is zero padded.
inline SizeComparison compare_sizes(const SizeList& h, const SizeList& z) {
    if (h.empty() && z.empty()) throw InvalidArgument("cannot compare two empty size lists");
    SizeComparison c;
    const auto len = std::max(h.size(), z.size());
    c.padded = h.size() != z.size();
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t a = i < h.size() ? h[i] : 0;
        const std::size_t b = i < z.size() ? z[i] : 0;
        c.abs_diff += a > b ? a - b : b - a;
        c.max_sum += std::max(a, b);
    }
    c.percent = 100.0 * static_cast<double>(c.abs_diff) / static_cast<double>(c.max_sum);
    return c;
}

inline double soergel_distance(const SizeList& h, const SizeList& z) { return compare_sizes(h, z).percent; }

/// Error of a heuristic size list h against the exact list z, in percent.
/// Identical lists give 0.
inline double error_percent(const SizeList& h, const SizeList& z) { return soergel_distance(h, z); }

}  // namespace quasik

#endif  // QUASIK_METRICS_HPP
