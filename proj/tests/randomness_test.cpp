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
#include "lscg/randomness.hpp"
#include "test_support.hpp"

using namespace lscg;
using lscg::testing::within_sigma;

namespace {

std::vector<std::uint64_t> first_outputs(RandomStream stream, int count) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(stream.next_u64());
  return out;
}

}  // namespace

TEST_CASE("derive is deterministic and key-sensitive") {
  auto a1 = first_outputs(derive(7, {std::string("a")}), 100);
  auto a2 = first_outputs(derive(7, {std::string("a")}), 100);
  auto b = first_outputs(derive(7, {std::string("b")}), 100);
  auto a_seed = first_outputs(derive(8, {std::string("a")}), 100);
  CHECK(a1 == a2);
  CHECK(a1 != b);
  CHECK(a1 != a_seed);

  // Labels are delimited and typed.
  CHECK(StreamKey(1, {std::string("ab")}).digest() !=
        StreamKey(1, {std::string("a"), std::string("b")}).digest());
  CHECK(StreamKey(1, {std::int64_t{5}}).digest() !=
        StreamKey(1, {std::string("5")}).digest());
  CHECK(StreamKey(1, {std::string("skel"), std::int64_t{1}, std::int64_t{2}}).digest() !=
        StreamKey(1, {std::string("skel"), std::int64_t{2}, std::int64_t{1}}).digest());
}

TEST_CASE("bernoulli") {
  auto s = derive(1, {std::string("bern")});
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(bernoulli(s, 1.0));
    REQUIRE_FALSE(bernoulli(s, 0.0));
  }
  CHECK_THROWS_AS(bernoulli(s, 1.5), Error);
  CHECK_THROWS_AS(bernoulli(s, -0.1), Error);

  constexpr int kDraws = 100000;
  int hits = 0;
  for (int i = 0; i < kDraws; ++i) hits += bernoulli(s, 0.3);
  CHECK(within_sigma(static_cast<double>(hits) / kDraws, 0.3, kDraws));
}

TEST_CASE("geometric_skip law") {
  auto s = derive(2, {std::string("geo")});
  for (int i = 0; i < 1000; ++i) REQUIRE(geometric_skip(s, 1.0) == 1);
  CHECK_THROWS_AS(geometric_skip(s, 0.0), Error);

  constexpr int kDraws = 100000;
  // Mean 1/p, standard deviation sqrt(1-p)/p.
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const auto k = geometric_skip(s, 0.25);
    REQUIRE(k >= 1);
    sum += static_cast<double>(k);
  }
  const double sigma_mean = std::sqrt(0.75) / 0.25 / std::sqrt(kDraws);
  CHECK(std::abs(sum / kDraws - 4.0) <= 3.0 * sigma_mean);

  int ones = 0;
  for (int i = 0; i < kDraws; ++i) ones += geometric_skip(s, 0.5) == 1;
  CHECK(within_sigma(static_cast<double>(ones) / kDraws, 0.5, kDraws));
}

TEST_CASE("GeometricSkip matches geometric_skip draw for draw") {
  auto a = derive(3, {std::string("same")});
  auto b = derive(3, {std::string("same")});
  GeometricSkip skip(0.37);
  for (int i = 0; i < 1000; ++i) REQUIRE(skip(a) == geometric_skip(b, 0.37));
}

TEST_CASE("gap sampling realizes independent Bernoulli cells") {
  // Cells 1..L decided by skipping: k ~ Geometric(p), cells a+1..a+k-1
  // absent and a+k present. Compare per-cell and pairwise frequencies with
  // the direct Bernoulli law.
  constexpr int kTrials = 10000;
  constexpr int kCells = 8;
  constexpr double p = 0.35;
  auto s = derive(4, {std::string("equivalence")});
  std::vector<int> present(kCells, 0);
  int pair01 = 0;
  int pair27 = 0;
  for (int t = 0; t < kTrials; ++t) {
    std::vector<bool> cell(kCells, false);
    std::uint64_t pos = 0;
    while (true) {
      pos += geometric_skip(s, p);
      if (pos > kCells) break;
      cell[pos - 1] = true;
    }
    for (int i = 0; i < kCells; ++i) present[i] += cell[i];
    pair01 += cell[0] && cell[1];
    pair27 += cell[2] && cell[7];
  }
  for (int i = 0; i < kCells; ++i) {
    CHECK(within_sigma(static_cast<double>(present[i]) / kTrials, p, kTrials));
  }
  CHECK(within_sigma(static_cast<double>(pair01) / kTrials, p * p, kTrials));
  CHECK(within_sigma(static_cast<double>(pair27) / kTrials, p * p, kTrials));
}
