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

#ifndef QUASIK_ERROR_HPP
#define QUASIK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasik {

/// Caller supplied something invalid (bad id, out-of-range parameter, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive routine refused an instance above its size guard.
class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran past its deadline or was cancelled.
class SearchTimeout : public std::runtime_error {
public:
    SearchTimeout() : std::runtime_error("search exceeded its time budget") {}
};

}  // namespace quasik

#endif  // QUASIK_ERROR_HPP
