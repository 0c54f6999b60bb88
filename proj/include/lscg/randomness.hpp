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
#include <initializer_list>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace lscg {

/// One component of a stream key path.
using KeyLabel = std::variant<std::string, std::int64_t>;

/// Hierarchical key for a deterministic random stream.
///
/// Label schema used by the library:
///   ("skel", a, b, guess_bits, round)  skeleton sampled by the guess tester
///   ("accept", a, b)                   final keep-coin of a queried edge
///   ("sparsify", trial)                skeleton in sparsification checks
/// where (a, b) is the canonical edge and guess_bits is the IEEE-754 bit
/// pattern of the guess. Identical (seed, path) gives identical output.
struct StreamKey {
  std::uint64_t seed = 0;
  std::vector<KeyLabel> path;

  StreamKey() = default;
  StreamKey(std::uint64_t s, std::vector<KeyLabel> p)
      : seed(s), path(std::move(p)) {}

  /// 64-bit digest of (seed, path); labels are type-tagged and
  /// length-delimited so ["ab"] and ["a", "b"] differ.
  std::uint64_t digest() const;
};

class RandomStream {
 public:
  explicit RandomStream(const StreamKey& key) : engine_(key.digest()) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on the open interval (0, 1).
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

inline RandomStream derive(std::uint64_t seed, std::vector<KeyLabel> path) {
  return RandomStream(StreamKey(seed, std::move(path)));
}

/// True with probability p. Throws kInvalidProbability outside [0, 1].
bool bernoulli(RandomStream& stream, double p);

/// Number of Bernoulli(p) trials up to and including the first success,
/// P(k) = p (1-p)^(k-1), by inverse CDF. Requires 0 < p <= 1.
std::uint64_t geometric_skip(RandomStream& stream, double p);

/// geometric_skip with 1/ln(1-p) computed once, for repeated draws at the
/// same p. Same law and same output sequence as geometric_skip.
class GeometricSkip {
 public:
  explicit GeometricSkip(double p);

  std::uint64_t operator()(RandomStream& stream) const;

 private:
  bool certain_;
  double inv_log_q_;
};

std::int64_t double_label(double value);

}  // namespace lscg
