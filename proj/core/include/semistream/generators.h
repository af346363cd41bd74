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

#ifndef SEMISTREAM_GENERATORS_H_
#define SEMISTREAM_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <utility>

#include "semistream/graph.h"

namespace semistream {

// Greedy-tight family. n_a = n_b = 2n with the diagonal (i, i) for i < 2n
// and trap edges (i, n + i) for i < n. Graph edge list: diagonal, then traps.
// The returned order streams the traps first, then the diagonal, so greedy
// keeps exactly the n traps against an optimum of 2n.
std::pair<BipartiteGraph, ArrivalOrder> gen_half_trap(std::size_t n);

// m distinct edges drawn uniformly by seeded rejection, listed in draw order.
// Throws std::invalid_argument if m > n_a * n_b.
BipartiteGraph gen_random_bipartite(std::size_t n_a, std::size_t n_b,
                                    std::size_t m, std::uint64_t seed);

// n x n graph: the diagonal perfect matching followed by d * n distinct
// random off-diagonal edges. Throws std::invalid_argument if d * n exceeds
// the n * (n - 1) off-diagonal slots.
BipartiteGraph gen_perfect_plus_noise(std::size_t n, std::size_t d,
                                      std::uint64_t seed);

}  // namespace semistream

#endif  // SEMISTREAM_GENERATORS_H_
