// Copyright 2026 The Coreset Authors
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

#ifndef CORESET_RANDOM_H_
#define CORESET_RANDOM_H_

#include <cstdint>
#include <random>

namespace coreset {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combines a base seed with a stream identifier into an independent seed.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return Mix64(seed ^ Mix64(stream + 0x632be59bd9b4e019ULL));
}

// Maps the top 53 bits of a word to a double in [0, 1).
constexpr double ToUnitInterval(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Keyed uniform draw in [0, 1): a pure function of (seed, key).
constexpr double HashUniform(uint64_t seed, uint64_t key) {
  return ToUnitInterval(Mix64(Mix64(seed) ^ Mix64(key ^ 0xd1b54a32d192ed03ULL)));
}

// Seeded pseudo-random source. The bit stream comes from mt19937_64 and the
// conversions below are written out by hand so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(Mix64(seed)) {}

  uint64_t Next() { return engine_(); }

  // Uniform double in [0, 1).
  double Uniform() { return ToUnitInterval(engine_()); }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t UniformInt(uint64_t bound) {
    // Lemire's nearly-divisionless method.
    unsigned __int128 m =
        static_cast<unsigned __int128>(engine_()) * bound;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < bound) {
      const uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace coreset

#endif  // CORESET_RANDOM_H_
