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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "lscg/engine.hpp"
#include "lscg/generators.hpp"
#include "lscg/oracle.hpp"

using namespace lscg;

namespace {

LscgConfig make_config(double threshold, double c, std::uint64_t seed) {
  LscgConfig config;
  config.threshold = threshold;
  config.tester.c_scale = c;
  config.seed = seed;
  return config;
}

}  // namespace

TEST_CASE("lambda") {
  TesterConfig config;
  CHECK(lambda(config, 1024) == doctest::Approx(2560.0));
  const double full = lambda(config, 300);
  config.c_scale = 0.5;
  CHECK(lambda(config, 300) == doctest::Approx(full / 2));
  config = TesterConfig{};
  config.d = 0;
  CHECK(lambda(config, 2) == doctest::Approx(128.0));
  CHECK_THROWS_AS(lambda(config, 1), Error);
}

TEST_CASE("config validation") {
  auto g = gen::complete(4);
  ProbedView view(g);
  CHECK_THROWS_AS(query_edge(view, {0, 1}, make_config(0.5, 1, 0)), Error);
  CHECK_THROWS_AS(query_edge(view, {0, 1}, make_config(1, -1, 0)), Error);
}

TEST_CASE("non-edge is an error") {
  auto path = gen::path(5);
  ProbedView view(path);
  try {
    query_edge(view, {0, 3}, LscgConfig{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidEdge);
  }
}

TEST_CASE("ladder never runs when min degree <= T") {
  auto k8 = gen::complete(8);
  ProbedView view(k8);
  auto d = query_edge(view, {2, 5}, make_config(7, 1, 0));
  CHECK(d.accepted);
  CHECK(d.below_threshold);
  CHECK(d.tester_runs == 0);
  CHECK(d.s_hat == 7.0);
  CHECK(d.probes == ProbeStats{2, 0, 1});
}

TEST_CASE("star edges are kept below threshold") {
  auto star = gen::star(200);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ProbedView view(star);
    // min endpoint degree is 1: every star edge is a leaf edge.
    auto d = query_edge(view, {0, static_cast<Vertex>(1 + seed)}, make_config(4, 0.1, seed));
    REQUIRE(d.accepted);
    REQUIRE(d.below_threshold);
  }
}

TEST_CASE("a bridge between high-degree hubs is always kept") {
  // Two stars joined at their hubs: the hub edge has min degree 41 > T but
  // s_e = 1. Once the ladder drops to lambda' the tester clamps to p = 1 and
  // accepts, so the keep probability clamps too.
  std::vector<EdgeRef> edges{{0, 41}};
  for (Vertex i = 1; i <= 40; ++i) {
    edges.push_back({0, i});
    edges.push_back({41, static_cast<Vertex>(41 + i)});
  }
  auto g = Graph::from_edges(82, edges);
  int kept = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ProbedView view(g);
    auto d = query_edge(view, {0, 41}, make_config(4, 0.1, seed));
    kept += d.accepted;
  }
  CHECK(kept == 100);
}

TEST_CASE("K32 guess lands within [s_e/2, 2 lambda' s_e]") {
  auto k32 = gen::complete(32);
  const auto oracle = exact_strong_connectivities(k32);
  const double s_e = *oracle.at({0, 1});
  REQUIRE(s_e == 31.0);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto config = make_config(4, 0.1, seed);
    const double lp = lambda_prime(config.tester, 32);
    ProbedView view(k32);
    auto d = query_edge(view, {0, 1}, config);
    if (d.g_star && *d.g_star >= s_e / 2 && *d.g_star <= 2 * lp * s_e) {
      ++inside;
      REQUIRE(d.s_hat >= s_e / (4 * lp));
      REQUIRE(d.s_hat <= s_e);
    }
  }
  CHECK(inside >= 90);
}

TEST_CASE("materialize: T at max degree and path graphs keep everything") {
  auto g = gen::gnp(60, 0.2, 5);
  auto r = materialize_subgraph(g, make_config(g.max_degree(), 1, 0), 1);
  CHECK(r.edges == g.edges());
  CHECK(r.below_threshold == g.edge_count());
  CHECK(r.tester_runs == 0);

  auto path = gen::path(50);
  auto rp = materialize_subgraph(path, make_config(1, 0.1, 3), 1);
  CHECK(rp.edges == path.edges());
  CHECK(rp.input_connected);
}

TEST_CASE("materialize reports disconnected input") {
  auto g = Graph::from_edges(6, std::vector<EdgeRef>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto r = materialize_subgraph(g, LscgConfig{}, 1);
  CHECK_FALSE(r.input_connected);
}

TEST_CASE("is_connected") {
  auto tree = gen::random_tree(30, 4);
  CHECK(is_connected(tree));
  CHECK_FALSE(is_connected(std::vector<EdgeRef>{}, 2));
  CHECK(is_connected(std::vector<EdgeRef>{}, 1));
  std::vector<EdgeRef> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(is_connected(triangles, 6));
}

TEST_CASE("property: ladder bound and repeat consistency") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen::gnp(40, 0.3, seed);
    const auto config = make_config(2 + static_cast<double>(seed % 4), 0.1, seed);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); i += 7) {
      const auto e = edges[i];
      const double min_deg = std::min(g.degree(e.a), g.degree(e.b));
      ProbedView first(g);
      ProbedView second(g);
      auto a = query_edge(first, e, config);
      auto b = query_edge(second, e, config);
      REQUIRE(a == b);
      const double bound =
          min_deg > config.threshold
              ? std::ceil(std::log2(min_deg / config.threshold)) + 1
              : 0;
      REQUIRE(a.tester_runs <= bound);
      if (a.below_threshold) REQUIRE(a.accepted);
    }
  }
}

TEST_CASE("materialize does not depend on thread count or repetition") {
  auto g = gen::gnp(40, 0.35, 9);
  const auto config = make_config(4, 0.1, 77);
  auto one = materialize_subgraph(g, config, 1);
  auto again = materialize_subgraph(g, config, 1);
  auto many = materialize_subgraph(g, config, 4);
  CHECK(one.edges == again.edges);
  CHECK(one.decisions == many.decisions);
  CHECK(one.edges == many.edges);
  CHECK(one.total_probes == many.total_probes);
  CHECK(one.edges.size() <= g.edge_count());
}
