// Copyright 2026 The Ricci Authors
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

#ifndef RICCI_RANDOM_H_
#define RICCI_RANDOM_H_

#include <cstdint>

namespace ricci {

// Portable pseudo-random numbers built on SplitMix64 (Steele, Lea, Flood
// 2014). Everything here is specified bit-for-bit so that fixtures can be
// reproduced by other implementations:
//
//   mix(z):  z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
//            z ^= z >> 27; z *= 0x94d049bb133111eb; z ^= z >> 31
//   key(seed, stream) = mix(seed ^ mix(stream + 0x9e3779b97f4a7c15))
//   draw(seed, stream, i) = mix(key + (i + 1) * 0x9e3779b97f4a7c15)
//   unit(x) = (x >> 11) * 2^-53               in [0, 1)
//
// A sequential StreamRng is the same counter run with i = 0, 1, 2, ...

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t Mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t StreamKey(std::uint64_t seed, std::uint64_t stream) {
  return Mix64(seed ^ Mix64(stream + kGoldenGamma));
}

constexpr double UnitInterval(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Uniform [0,1) value for item `index` of `stream`; independent of how many
// other items were drawn.
constexpr double CounterUniform(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index) {
  return UnitInterval(Mix64(StreamKey(seed, stream) + (index + 1) * kGoldenGamma));
}

// Stream identifiers used across the library.
enum RandomStream : std::uint64_t {
  kPairStream = 1,        // edge-pair Bernoulli draws, lexicographic order
  kTreeStreamBase = 1000, // + community index: Pruefer sequences
  kTieBreakStream = 2,    // detection tie-breaking
  kMixtureStream = 3,     // EM restarts
};

class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream)
      : key_(StreamKey(seed, stream)) {}

  std::uint64_t Next() { return Mix64(key_ + (++counter_) * kGoldenGamma); }
  double Uniform() { return UnitInterval(Next()); }

  // Uniform integer in [0, n) by rejection (no modulo bias). n > 0.
  std::uint64_t Below(std::uint64_t n);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ricci

#endif  // RICCI_RANDOM_H_
