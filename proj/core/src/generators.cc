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

#include "semistream/generators.h"

#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "semistream/random.h"

namespace semistream {

std::pair<BipartiteGraph, ArrivalOrder> gen_half_trap(std::size_t n) {
  if (n < 1) throw std::invalid_argument("half_trap: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(n + i)});
  }
  std::vector<std::size_t> perm;
  perm.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(2 * n + i);
  for (std::size_t i = 0; i < 2 * n; ++i) perm.push_back(i);
  return {BipartiteGraph(2 * n, 2 * n, std::move(edges)),
          ArrivalOrder(std::move(perm))};
}

namespace {

// Appends `count` fresh edges to `edges`, skipping anything already in
// `taken`.
void draw_distinct(std::size_t n_a, std::size_t n_b, std::size_t count,
                   SplitMix64& rng, std::unordered_set<std::uint64_t>& taken,
                   std::vector<Edge>& edges) {
  while (count > 0) {
    Vertex a = static_cast<Vertex>(rng.next() % n_a);
    Vertex b = static_cast<Vertex>(rng.next() % n_b);
    if (!taken.insert(std::uint64_t{a} * n_b + b).second) continue;
    edges.push_back({a, b});
    --count;
  }
}

}  // namespace

BipartiteGraph gen_random_bipartite(std::size_t n_a, std::size_t n_b,
                                    std::size_t m, std::uint64_t seed) {
  // m > n_a * n_b, written to avoid overflow.
  if (m > 0 && (n_a == 0 || (m - 1) / n_a >= n_b)) {
    throw std::invalid_argument("random_bipartite: m exceeds n_a * n_b");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(m);
  SplitMix64 rng(seed);
  draw_distinct(n_a, n_b, m, rng, taken, edges);
  return BipartiteGraph(n_a, n_b, std::move(edges));
}

BipartiteGraph gen_perfect_plus_noise(std::size_t n, std::size_t d,
                                      std::uint64_t seed) {
  const std::size_t slots = n == 0 ? 0 : n * (n - 1);
  if (n != 0 && d > slots / n) {
    throw std::invalid_argument(
        "perfect_plus_noise: d * n exceeds the off-diagonal edge budget");
  }
  std::vector<Edge> edges;
  edges.reserve(n + d * n);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(n + d * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i)});
    taken.insert(std::uint64_t{i} * n + i);
  }
  SplitMix64 rng(seed);
  draw_distinct(n, n, d * n, rng, taken, edges);
  return BipartiteGraph(n, n, std::move(edges));
}

}  // namespace semistream
