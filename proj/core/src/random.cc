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

#include "semistream/random.h"

#include <utility>
#include <vector>

namespace semistream {

ArrivalOrder uniform_order(std::size_t m, std::uint64_t seed) {
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = m; i-- > 1;) {
    std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return ArrivalOrder(std::move(perm));
}

}  // namespace semistream
