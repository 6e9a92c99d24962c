// Copyright 2026 zxopt contributors
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
#include <random>
#include <string_view>

namespace zxopt {

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard and all derived draws below avoid std::*_distribution, whose
/// output is implementation-defined, so a seed reproduces the same stream on
/// any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Modulo bias is negligible for the small n
  /// used here and keeps the draw platform-stable.
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Derives an independent child stream from this stream's seed (not its
  /// state), so substreams are stable regardless of draw order.
  Rng substream(std::string_view name, std::uint64_t index = 0) const;

  /// Seed derivation without constructing the engine.
  static std::uint64_t derive_seed(std::uint64_t base, std::string_view name,
                                   std::uint64_t index = 0);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace zxopt
