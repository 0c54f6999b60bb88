// Copyright 2026 The lscg Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "lscg/graph.hpp"

namespace lscg::gen {

inline constexpr int kMaxConnectAttempts = 100;

/// G(n, p) conditioned on connectivity: resamples up to 100 times and
/// throws kInvalidInput if no connected sample was drawn.
Graph gnp(std::uint32_t n, double p, std::uint64_t seed);
Graph complete(std::uint32_t n);
/// Two copies of K_k joined by the single edge (k-1, k).
Graph barbell(std::uint32_t k);
/// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(std::uint32_t n, std::uint64_t seed);
/// Uniform-ish simple d-regular graph by randomized pairing with restarts.
Graph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);
Graph path(std::uint32_t n);
Graph star(std::uint32_t n);
Graph cycle(std::uint32_t n);
Graph petersen();

/// Dispatch by name: gnp(n,p) complete(n) barbell(k) random_tree(n)
/// random_regular(n,d) path(n) star(n) cycle(n) petersen().
Graph generate(std::string_view kind, std::span<const double> args,
               std::uint64_t seed);

}  // namespace lscg::gen
