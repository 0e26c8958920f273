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

#ifndef QUASIK_BITSET_HPP
#define QUASIK_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace quasik {

/// Fixed-width dynamic bitset used for adjacency rows and search state.
/// All binary operations require both operands to have the same width.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + word_bits - 1) / word_bits, 0) {}

    [[nodiscard]] std::size_t width() const noexcept { return nbits_; }

    void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
    [[nodiscard]] bool test(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1U;
    }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool none() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// |*this & other| without materializing the intersection.
    [[nodiscard]] std::size_t and_count(const Bitset& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    [[nodiscard]] bool is_subset_of(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    [[nodiscard]] bool intersects(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Keep only bits strictly above position i.
    void keep_above(std::size_t i) noexcept {
        const std::size_t w = i / word_bits;
        for (std::size_t j = 0; j < w && j < words_.size(); ++j) words_[j] = 0;
        if (w < words_.size()) {
            const std::size_t b = i % word_bits;
            words_[w] &= (b + 1 == word_bits) ? word_type{0} : ~word_type{0} << (b + 1);
        }
    }

    /// Index of the lowest set bit at or after `from`, or width() if none.
    [[nodiscard]] std::size_t next(std::size_t from) const noexcept {
        if (from >= nbits_) return nbits_;
        std::size_t w = from / word_bits;
        word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (cur != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w >= words_.size()) return nbits_;
            cur = words_[w];
        }
    }
    [[nodiscard]] std::size_t first() const noexcept { return next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type cur = words_[w];
            while (cur != 0) {
                f(w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

private:
    std::size_t nbits_ = 0;
    std::vector<word_type> words_;
};

}  // namespace quasik

#endif  // QUASIK_BITSET_HPP
