// Copyright 2026 The Semistream Authors.
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

#ifndef SEMISTREAM_RANDOM_H_
#define SEMISTREAM_RANDOM_H_

#include <cstdint>

#include "semistream/graph.h"

namespace semistream {

// splitmix64. Bit-identical on every platform; the whole library draws its
// randomness from here so that seeds fully determine results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Fisher-Yates: for i = m-1 down to 1, swap i with next() % (i + 1). The
// modulo bias is accepted for cross-language reproducibility.
ArrivalOrder uniform_order(std::size_t m, std::uint64_t seed);

}  // namespace semistream

#endif  // SEMISTREAM_RANDOM_H_
