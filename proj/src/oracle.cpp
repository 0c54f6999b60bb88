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

#include "lscg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "lscg/randomness.hpp"

namespace lscg {

namespace {

// Connected components of G[vertices], each ascending.
std::vector<std::vector<Vertex>> induced_components(
    const Graph& graph, std::span<const Vertex> vertices,
    std::vector<std::uint32_t>& stamp, std::uint32_t& generation) {
  ++generation;
  const std::uint32_t member = generation;
  for (Vertex v : vertices) stamp[v] = member;
  ++generation;
  const std::uint32_t visited = generation;

  std::vector<std::vector<Vertex>> out;
  for (Vertex s : vertices) {
    if (stamp[s] != member) continue;
    std::vector<Vertex> comp{s};
    stamp[s] = visited;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : graph.neighbors(comp[head])) {
        if (stamp[w] == member) {
          stamp[w] = visited;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Stoer-Wagner on a dense weight matrix over a connected vertex set.
CutResult stoer_wagner(const Graph& graph, std::span<const Vertex> vertices) {
  const std::size_t k = vertices.size();
  std::vector<std::uint64_t> w(k * k, 0);
  {
    std::vector<std::uint32_t> local(graph.vertex_count(), UINT32_MAX);
    for (std::size_t i = 0; i < k; ++i) local[vertices[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < k; ++i) {
      for (Vertex nb : graph.neighbors(vertices[i])) {
        if (local[nb] != UINT32_MAX) w[i * k + local[nb]] = 1;
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> groups(k);
  for (std::size_t i = 0; i < k; ++i) groups[i] = {static_cast<std::uint32_t>(i)};
  std::vector<std::uint32_t> active(k);
  for (std::size_t i = 0; i < k; ++i) active[i] = static_cast<std::uint32_t>(i);

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint32_t> best_group;
  std::vector<std::uint64_t> attach(k);
  std::vector<char> added(k);
  while (active.size() > 1) {
    for (auto i : active) {
      attach[i] = 0;
      added[i] = 0;
    }
    std::uint32_t prev = active.front();
    std::uint32_t last = active.front();
    for (std::size_t step = 0; step < active.size(); ++step) {
      std::uint32_t sel = UINT32_MAX;
      for (auto i : active) {
        if (!added[i] && (sel == UINT32_MAX || attach[i] > attach[sel])) sel = i;
      }
      added[sel] = 1;
      if (step + 1 == active.size()) {
        last = sel;
        if (attach[sel] < best) {
          best = attach[sel];
          best_group = groups[sel];
        }
      } else {
        prev = sel;
        for (auto i : active) {
          if (!added[i]) attach[i] += w[sel * k + i];
        }
      }
    }
    for (auto i : active) {
      w[prev * k + i] += w[last * k + i];
      w[i * k + prev] = w[prev * k + i];
    }
    w[prev * k + prev] = 0;
    groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
    active.erase(std::find(active.begin(), active.end(), last));
  }

  CutResult out;
  out.value = best;
  for (auto i : best_group) out.side.push_back(vertices[i]);
  std::sort(out.side.begin(), out.side.end());
  return out;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& graph) {
  std::vector<std::uint32_t> adj(graph.vertex_count(), 0);
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    for (Vertex v : graph.neighbors(u)) adj[u] |= 1U << v;
  }
  return adj;
}

bool mask_connected(std::uint32_t mask, std::span<const std::uint32_t> adj) {
  std::uint32_t reached = mask & (~mask + 1);
  std::uint32_t frontier = reached;
  while (frontier) {
    std::uint32_t grow = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) {
      grow |= adj[std::countr_zero(f)];
    }
    grow &= mask & ~reached;
    reached |= grow;
    frontier = grow;
  }
  return reached == mask;
}

}  // namespace

CutResult min_cut_induced(const Graph& graph, std::span<const Vertex> vertices) {
  if (vertices.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "min cut needs at least 2 vertices");
  }
  std::vector<std::uint32_t> stamp(graph.vertex_count(), 0);
  std::uint32_t generation = 0;
  auto comps = induced_components(graph, vertices, stamp, generation);
  if (comps.size() > 1) return CutResult{0, std::move(comps.front())};
  return stoer_wagner(graph, comps.front());
}

CutResult min_cut(const Graph& graph) {
  if (graph.vertex_count() < 2) {
    throw Error(ErrorCode::kInvalidInput, "min cut needs at least 2 vertices");
  }
  std::vector<Vertex> all(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) all[v] = v;
  return min_cut_induced(graph, all);
}

std::optional<std::uint32_t> StrongConnMap::at(EdgeRef e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return std::nullopt;
  return strength[static_cast<std::size_t>(it - edges.begin())];
}

StrongConnMap exact_strong_connectivities(const Graph& graph) {
  StrongConnMap out;
  out.edges = graph.edges();
  out.strength.assign(out.edges.size(), 0);
  const std::uint32_t n = graph.vertex_count();
  if (n < 2) return out;

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t generation = 0;
  std::vector<std::vector<Vertex>> pending;
  {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    pending.push_back(std::move(all));
  }
  std::vector<char> inside(n, 0);
  while (!pending.empty()) {
    auto piece = std::move(pending.back());
    pending.pop_back();
    for (auto& comp : induced_components(graph, piece, stamp, generation)) {
      if (comp.size() < 2) continue;
      auto cut = stoer_wagner(graph, comp);
      const auto value = static_cast<std::uint32_t>(cut.value);
      for (Vertex u : comp) inside[u] = 1;
      for (Vertex u : comp) {
        for (Vertex v : graph.neighbors(u)) {
          if (u < v && inside[v]) {
            auto& s = out.strength[*graph.edge_position({u, v})];
            s = std::max(s, value);
          }
        }
      }
      for (Vertex u : comp) inside[u] = 0;

      std::vector<Vertex> rest;
      std::set_difference(comp.begin(), comp.end(), cut.side.begin(),
                          cut.side.end(), std::back_inserter(rest));
      if (cut.side.size() >= 2) pending.push_back(std::move(cut.side));
      if (rest.size() >= 2) pending.push_back(std::move(rest));
    }
  }
  return out;
}

StrongConnMap brute_force_strong_connectivities(const Graph& graph) {
  const std::uint32_t n = graph.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "brute force limited to 12 vertices");
  }
  StrongConnMap out;
  out.edges = graph.edges();
  out.strength.assign(out.edges.size(), 0);
  const auto adj = adjacency_masks(graph);

  const std::uint32_t full = n == 0 ? 0 : (1U << n) - 1;
  for (std::uint32_t w = 1; w <= full; ++w) {
    if (std::popcount(w) < 2 || !mask_connected(w, adj)) continue;
    const std::uint32_t low = w & (~w + 1);
    const std::uint32_t rest = w & ~low;
    std::uint32_t best = UINT32_MAX;
    // Sides containing the lowest member: low | sub for every sub of rest
    // except rest itself.
    for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const std::uint32_t side = low | sub;
      const std::uint32_t other = w & ~side;
      std::uint32_t crossing = 0;
      for (std::uint32_t s = side; s; s &= s - 1) {
        crossing += std::popcount(adj[std::countr_zero(s)] & other);
      }
      best = std::min(best, crossing);
      if (sub == 0) break;
    }
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
      const auto& e = out.edges[i];
      if ((w >> e.a & 1U) && (w >> e.b & 1U)) {
        out.strength[i] = std::max(out.strength[i], best);
      }
    }
  }
  return out;
}

std::vector<CutValue> enumerate_cut_values(const Graph& graph,
                                           std::span<const double> weights) {
  const std::uint32_t n = graph.vertex_count();
  if (n > kCutEnumerationMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "cut enumeration limited to 14 vertices");
  }
  const auto edges = graph.edges();
  if (weights.size() != edges.size()) {
    throw Error(ErrorCode::kInvalidInput, "one weight per edge required");
  }
  std::vector<CutValue> out;
  if (n < 2) return out;
  const std::uint32_t count = (1U << (n - 1)) - 1;
  out.reserve(count);
  for (std::uint32_t half = 1; half <= count; ++half) {
    const std::uint32_t side = half << 1;
    double value = 0.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (((side >> edges[i].a) ^ (side >> edges[i].b)) & 1U) value += weights[i];
    }
    out.push_back({side, value});
  }
  return out;
}

double verify_sparsification(const Graph& graph, std::span<const double> p_map,
                             double epsilon, std::uint32_t trials,
                             std::uint64_t seed) {
  const auto m = static_cast<std::size_t>(graph.edge_count());
  if (p_map.size() != m) {
    throw Error(ErrorCode::kInvalidInput, "one probability per edge required");
  }
  for (double p : p_map) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidProbability, "p_e must lie in (0, 1]");
    }
  }
  if (trials == 0) return 0.0;
  const std::vector<double> unit(m, 1.0);
  const auto original = enumerate_cut_values(graph, unit);

  std::uint32_t passed = 0;
  std::vector<double> weights(m);
  for (std::uint32_t t = 0; t < trials; ++t) {
    auto stream = derive(seed, {std::string("sparsify"), std::int64_t{t}});
    for (std::size_t i = 0; i < m; ++i) {
      weights[i] = bernoulli(stream, p_map[i]) ? 1.0 / p_map[i] : 0.0;
    }
    const auto sampled = enumerate_cut_values(graph, weights);
    bool ok = true;
    for (std::size_t c = 0; c < original.size() && ok; ++c) {
      const double base = original[c].value;
      ok = std::abs(sampled[c].value - base) <= epsilon * base;
    }
    if (ok) ++passed;
  }
  return static_cast<double>(passed) / trials;
}

}  // namespace lscg
