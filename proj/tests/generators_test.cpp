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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "lscg/engine.hpp"
#include "lscg/generators.hpp"

using namespace lscg;

TEST_CASE("fixed families") {
  auto k5 = gen::complete(5);
  CHECK(k5.edge_count() == 10);
  for (Vertex u = 0; u < 5; ++u) CHECK(k5.degree(u) == 4);
  auto bar = gen::barbell(5);
  CHECK(bar.edge_count() == 21);
  CHECK(bar.has_edge(4, 5));
  CHECK(gen::petersen().edge_count() == 15);
  CHECK(gen::cycle(7).min_degree() == 2);
  CHECK(gen::star(9).max_degree() == 8);
  CHECK(gen::path(9).edge_count() == 8);
}

TEST_CASE("gnp is connected with binomial edge count") {
  constexpr int kSeeds = 100;
  double sum = 0;
  for (int s = 0; s < kSeeds; ++s) {
    auto g = gen::gnp(100, 0.1, static_cast<std::uint64_t>(s));
    REQUIRE(is_connected(g));
    sum += static_cast<double>(g.edge_count());
  }
  const double pairs = 100.0 * 99.0 / 2.0;
  const double sigma = std::sqrt(pairs * 0.1 * 0.9);
  CHECK(std::abs(sum / kSeeds - 495.0) <= 3.0 * sigma / std::sqrt(kSeeds));
}

TEST_CASE("random tree and regular graphs") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto t = gen::random_tree(50, s);
    REQUIRE(t.edge_count() == 49);
    REQUIRE(is_connected(t));
    auto r = gen::random_regular(20, 3, s);
    REQUIRE(r.min_degree() == 3);
    REQUIRE(r.max_degree() == 3);
  }
  CHECK_THROWS_AS(gen::random_regular(5, 3, 0), Error);
  CHECK_THROWS_AS(gen::random_regular(4, 4, 0), Error);
}

TEST_CASE("generate dispatches by name") {
  std::vector<double> args{6};
  CHECK(gen::generate("complete", args, 0) == gen::complete(6));
  std::vector<double> gnp_args{30, 0.3};
  CHECK(gen::generate("gnp", gnp_args, 4) == gen::gnp(30, 0.3, 4));
  CHECK_THROWS_AS(gen::generate("nope", args, 0), Error);
  CHECK_THROWS_AS(gen::generate("gnp", args, 0), Error);
}
