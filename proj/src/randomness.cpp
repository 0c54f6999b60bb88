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

#include "lscg/randomness.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "lscg/error.hpp"

namespace lscg {

namespace {

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kStringTag = 0x5354524eULL;
constexpr std::uint64_t kIntTag = 0x494e5447ULL;

}  // namespace

std::uint64_t StreamKey::digest() const {
  std::uint64_t h = mix(seed ^ 0x6c736367ULL);
  for (const auto& label : path) {
    if (const auto* s = std::get_if<std::string>(&label)) {
      h = mix(h ^ kStringTag);
      h = mix(h ^ s->size());
      std::uint64_t chunk = 0;
      int filled = 0;
      for (unsigned char c : *s) {
        chunk |= static_cast<std::uint64_t>(c) << (8 * filled);
        if (++filled == 8) {
          h = mix(h ^ chunk);
          chunk = 0;
          filled = 0;
        }
      }
      if (filled > 0) h = mix(h ^ chunk);
    } else {
      h = mix(h ^ kIntTag);
      h = mix(h ^ static_cast<std::uint64_t>(std::get<std::int64_t>(label)));
    }
  }
  return h;
}

bool bernoulli(RandomStream& stream, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "probability outside [0, 1]");
  }
  return stream.uniform() < p;
}

GeometricSkip::GeometricSkip(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "geometric skip needs probability in (0, 1]");
  }
  certain_ = p == 1.0;
  inv_log_q_ = certain_ ? 0.0 : 1.0 / std::log1p(-p);
}

std::uint64_t GeometricSkip::operator()(RandomStream& stream) const {
  if (certain_) return 1;
  const double k = std::ceil(std::log(stream.uniform_open()) * inv_log_q_);
  constexpr double kCap = 0x1.0p62;
  if (!(k < kCap)) return static_cast<std::uint64_t>(kCap);
  return k < 1.0 ? 1 : static_cast<std::uint64_t>(k);
}

std::uint64_t geometric_skip(RandomStream& stream, double p) {
  return GeometricSkip(p)(stream);
}

std::int64_t double_label(double value) {
  return std::bit_cast<std::int64_t>(value);
}

}  // namespace lscg
