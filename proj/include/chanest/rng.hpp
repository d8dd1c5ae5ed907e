// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "chanest/types.hpp"

namespace chanest {

/// Stream purposes used when deriving independent generators from a master seed.
/// Training and evaluation draws never share a stream.
enum class StreamPurpose : std::uint64_t {
  Training = 1,
  Evaluation = 2,
  MlpInit = 3,
  MlpShuffle = 4,
  Oracle = 5,
};

/// Seeded random source. Every draw is produced by the 64-bit Mersenne twister
/// through libstdc++'s distributions, so a given seed reproduces bit-identical
/// sequences on a given toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Generator keyed by an arbitrary word sequence (fed through std::seed_seq).
  explicit Rng(std::initializer_list<std::uint64_t> key);

  /// Independent stream for (master seed, purpose, a, b, c).
  static Rng derive(std::uint64_t master, StreamPurpose purpose, std::uint64_t a = 0,
                    std::uint64_t b = 0, std::uint64_t c = 0);

  double uniform();
  double normal();
  /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  cdouble complex_normal(double variance);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double chi_squared(double dof);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace chanest
