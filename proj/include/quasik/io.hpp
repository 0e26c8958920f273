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

// JSON views of library types. Requires nlohmann/json on the include path.

#ifndef QUASIK_IO_HPP
#define QUASIK_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/graph.hpp"
#include "quasik/hardness.hpp"
#include "quasik/topk.hpp"

namespace quasik::io {

using nlohmann::json;

/// {"vertices": [labels...], "size": n}
inline json record_json(const Graph& g, const VertexSet& s) {
    return json{{"vertices", to_labels(g, s)}, {"size", s.size()}};
}

inline json summary_json(const GraphSummary& s) {
    return json{{"n", s.n}, {"m", s.m}, {"max_degree", s.max_degree}, {"avg_degree", s.avg_degree}};
}

inline json params_json(const TopKParams& p) {
    return json{{"gamma", p.gamma.str()},
                {"gamma_prime", p.gamma_prime.str()},
                {"k", p.k},
                {"k_prime", p.k_prime},
                {"min_size", p.min_size}};
}

inline json gadget_sidecar_json(const GadgetInstance& inst) {
    return json{{"gamma", inst.gamma.fraction()}, {"r", inst.r}, {"x", to_labels(inst.g, inst.x)}};
}

/// Gamma values in configuration must be strings ("0.6" or "5/11") so they
/// are never routed through a binary float.
inline Gamma gamma_from_json(const json& j, const char* key) {
    if (!j.is_string())
        throw InvalidArgument(std::string("'") + key + "' must be a string such as \"0.6\" or \"3/5\"");
    return parse_gamma(j.get<std::string>());
}

namespace detail {

inline std::vector<json> as_list(const json& j) {
    if (j.is_array()) return std::vector<json>(j.begin(), j.end());
    return {j};
}

inline std::size_t size_from_json(const json& j, const char* key) {
    if (!j.is_number_unsigned()) throw InvalidArgument(std::string("'") + key + "' must be a positive integer");
    return j.get<std::size_t>();
}

}  // namespace detail

/// Parameter grid. Either an explicit list
///   {"cells": [{"gamma": "0.6", "gamma_prime": "0.8", "k": 10, "k_prime": 30, "min_size": 5}, ...]}
/// or a cartesian product where each key holds a value or a list
///   {"gamma": ["0.6", "0.7"], "gamma_prime": ["0.9"], "k": [10], "k_prime": [30], "min_size": 5}.
/// Missing gamma_prime / k_prime take the defaults min(1, gamma + 0.2) / 3k.
/// Cartesian combinations with gamma' <= gamma or k' < k are skipped; an
/// invalid explicit cell is an error.
inline std::vector<TopKParams> parse_grid(const json& j) {
    auto cell_from = [](const json& c) {
        if (!c.contains("gamma") || !c.contains("k") || !c.contains("min_size"))
            throw InvalidArgument("grid cell needs gamma, k and min_size");
        std::optional<Gamma> gp;
        std::optional<std::size_t> kp;
        if (c.contains("gamma_prime")) gp = gamma_from_json(c["gamma_prime"], "gamma_prime");
        if (c.contains("k_prime")) kp = detail::size_from_json(c["k_prime"], "k_prime");
        auto p = default_params(gamma_from_json(c["gamma"], "gamma"), detail::size_from_json(c["k"], "k"),
                                detail::size_from_json(c["min_size"], "min_size"), gp, kp);
        p.validate();
        return p;
    };

    std::vector<TopKParams> out;
    if (!j.is_object()) throw InvalidArgument("grid must be a JSON object");
    if (j.contains("cells")) {
        for (auto& c : j["cells"]) out.push_back(cell_from(c));
        return out;
    }
    if (!j.contains("gamma") || !j.contains("k") || !j.contains("min_size"))
        throw InvalidArgument("grid needs 'cells' or gamma/k/min_size lists");
    auto gammas = detail::as_list(j["gamma"]);
    auto ks = detail::as_list(j["k"]);
    auto sizes = detail::as_list(j["min_size"]);
    auto gps = j.contains("gamma_prime") ? detail::as_list(j["gamma_prime"]) : std::vector<json>{json()};
    auto kps = j.contains("k_prime") ? detail::as_list(j["k_prime"]) : std::vector<json>{json()};
    for (auto& g : gammas)
        for (auto& gp : gps)
            for (auto& k : ks)
                for (auto& kp : kps)
                    for (auto& ms : sizes) {
                        auto gamma = gamma_from_json(g, "gamma");
                        auto p = default_params(
                            gamma, detail::size_from_json(k, "k"), detail::size_from_json(ms, "min_size"),
                            gp.is_null() ? std::nullopt : std::optional<Gamma>(gamma_from_json(gp, "gamma_prime")),
                            kp.is_null() ? std::nullopt : std::optional<std::size_t>(detail::size_from_json(kp, "k_prime")));
                        if (!(p.gamma < p.gamma_prime) || p.k_prime < p.k || p.k < 1 || p.min_size < 2) continue;
                        out.push_back(p);
                    }
    return out;
}

}  // namespace quasik::io

#endif  // QUASIK_IO_HPP
