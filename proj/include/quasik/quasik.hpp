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

#ifndef QUASIK_QUASIK_HPP
#define QUASIK_QUASIK_HPP

#include "quasik/bench.hpp"
#include "quasik/bitset.hpp"
#include "quasik/enumerator.hpp"
#include "quasik/error.hpp"
#include "quasik/gamma.hpp"
#include "quasik/generators.hpp"
#include "quasik/graph.hpp"
#include "quasik/hardness.hpp"
#include "quasik/metrics.hpp"
#include "quasik/oracle.hpp"
#include "quasik/quasi_clique.hpp"
#include "quasik/topk.hpp"

#endif  // QUASIK_QUASIK_HPP
