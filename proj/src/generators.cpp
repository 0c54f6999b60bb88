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

#include "lscg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <vector>

#include "lscg/engine.hpp"
#include "lscg/randomness.hpp"

namespace lscg::gen {

namespace {

std::uint64_t below(RandomStream& rng, std::uint64_t bound) {
  // Lemire-style rejection keeps this unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng.next_u64();
  } while (x >= limit);
  return x % bound;
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::kInvalidInput, message);
}

}  // namespace

Graph gnp(std::uint32_t n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp edge probability outside [0, 1]");
  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    auto rng = derive(seed, {std::string("gen"), std::string("gnp"),
                             std::int64_t{attempt}});
    std::vector<EdgeRef> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (bernoulli(rng, p)) edges.push_back({u, v});
      }
    }
    if (is_connected(edges, n)) return Graph::from_edges(n, edges);
  }
  throw Error(ErrorCode::kInvalidInput,
              "gnp: no connected sample within 100 attempts");
}

Graph complete(std::uint32_t n) {
  std::vector<EdgeRef> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph barbell(std::uint32_t k) {
  require(k >= 1, "barbell needs k >= 1");
  std::vector<EdgeRef> edges;
  for (std::uint32_t side = 0; side < 2; ++side) {
    const Vertex base = side * k;
    for (Vertex u = 0; u < k; ++u) {
      for (Vertex v = u + 1; v < k; ++v) edges.push_back({base + u, base + v});
    }
  }
  edges.push_back({k - 1, k});
  return Graph::from_edges(2 * k, edges);
}

Graph random_tree(std::uint32_t n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) {
    const EdgeRef e{0, 1};
    return Graph::from_edges(2, std::span(&e, 1));
  }
  auto rng = derive(seed, {std::string("gen"), std::string("tree")});
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(below(rng, n));

  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<EdgeRef> edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(EdgeRef::canonical(leaf, c));
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex x = leaves.top();
  leaves.pop();
  edges.push_back(EdgeRef::canonical(x, leaves.top()));
  return Graph::from_edges(n, edges);
}

Graph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  require(d < n, "random_regular needs d < n");
  require((static_cast<std::uint64_t>(n) * d) % 2 == 0,
          "random_regular needs n*d even");
  constexpr int kRestarts = 1000;
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    auto rng = derive(seed, {std::string("gen"), std::string("regular"),
                             std::int64_t{attempt}});
    std::vector<Vertex> points;
    points.reserve(static_cast<std::size_t>(n) * d);
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint32_t i = 0; i < d; ++i) points.push_back(v);
    }
    std::set<EdgeRef> chosen;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        const auto i = below(rng, points.size());
        const auto j = below(rng, points.size());
        if (i == j || points[i] == points[j]) continue;
        const auto e = EdgeRef::canonical(points[i], points[j]);
        if (chosen.count(e)) continue;
        chosen.insert(e);
        const auto hi = std::max(i, j);
        const auto lo = std::min(i, j);
        points[hi] = points.back();
        points.pop_back();
        points[lo] = points.back();
        points.pop_back();
        paired = true;
      }
      stuck = !paired;
    }
    if (!stuck) {
      std::vector<EdgeRef> edges(chosen.begin(), chosen.end());
      return Graph::from_edges(n, edges);
    }
  }
  throw Error(ErrorCode::kInvalidInput, "random_regular: pairing kept failing");
}

Graph path(std::uint32_t n) {
  std::vector<EdgeRef> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph star(std::uint32_t n) {
  std::vector<EdgeRef> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::uint32_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<EdgeRef> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(EdgeRef::canonical(v, (v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  std::vector<EdgeRef> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(EdgeRef::canonical(i, (i + 1) % 5));
    edges.push_back(EdgeRef::canonical(i, i + 5));
    edges.push_back(EdgeRef::canonical(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, edges);
}

Graph generate(std::string_view kind, std::span<const double> args,
               std::uint64_t seed) {
  auto arity = [&](std::size_t k) {
    if (args.size() != k) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(kind) + " expects " + std::to_string(k) +
                      " argument(s)");
    }
  };
  auto count = [&](std::size_t i) {
    const double x = args[i];
    if (!(x >= 0.0) || x != std::floor(x) || x > 4294967295.0) {
      throw Error(ErrorCode::kInvalidInput, "expected a vertex count");
    }
    return static_cast<std::uint32_t>(x);
  };
  if (kind == "gnp") { arity(2); return gnp(count(0), args[1], seed); }
  if (kind == "complete") { arity(1); return complete(count(0)); }
  if (kind == "barbell") { arity(1); return barbell(count(0)); }
  if (kind == "random_tree") { arity(1); return random_tree(count(0), seed); }
  if (kind == "random_regular") {
    arity(2);
    return random_regular(count(0), count(1), seed);
  }
  if (kind == "path") { arity(1); return path(count(0)); }
  if (kind == "star") { arity(1); return star(count(0)); }
  if (kind == "cycle") { arity(1); return cycle(count(0)); }
  if (kind == "petersen") { arity(0); return petersen(); }
  throw Error(ErrorCode::kInvalidInput,
              "unknown generator '" + std::string(kind) + "'");
}

}  // namespace lscg::gen
