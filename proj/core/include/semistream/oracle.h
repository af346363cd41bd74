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

#ifndef SEMISTREAM_ORACLE_H_
#define SEMISTREAM_ORACLE_H_

#include <cstddef>
#include <vector>

#include "semistream/graph.h"
#include "semistream/matching.h"

namespace semistream {

// Maximum-cardinality matching by Hopcroft-Karp. Free A vertices and
// adjacency lists are scanned in increasing index order, so the returned
// edge set is canonical for a given graph.
Matching max_matching(const BipartiteGraph& g);

enum class Side { kA, kB };

struct SideVertex {
  Side side = Side::kA;
  Vertex id = 0;

  friend bool operator==(const SideVertex&, const SideVertex&) = default;
};

enum class EdgeOrigin { kOnlyInM, kOnlyInMStar };

// One connected component of M xor M*: an alternating path or cycle. For a
// path, vertices has edges.size() + 1 entries; for a cycle the last edge
// closes back to vertices.front() and both sizes agree.
struct DiffComponent {
  bool is_cycle = false;
  std::vector<SideVertex> vertices;
  std::vector<EdgeOrigin> origins;

  std::size_t length() const { return origins.size(); }
  // Odd path whose end edges lie in M*: an augmenting path for M.
  bool is_augmenting_for_m() const;
};

struct DiffDecomposition {
  std::vector<DiffComponent> components;

  std::size_t total_edges() const;
  // Number of paths with the given edge count.
  std::size_t paths_of_length(std::size_t len) const;
};

// Throws std::invalid_argument if m and mstar are not valid matchings of g.
DiffDecomposition decompose(const BipartiteGraph& g, const Matching& m,
                            const Matching& mstar);

// Number of M edges that are the middle edge of a length-3 augmenting path
// of M xor M*. Throws std::invalid_argument unless mstar is maximum and m is
// maximal in g.
std::size_t count_3_augmentable(const BipartiteGraph& g, const Matching& m,
                                const Matching& mstar);

}  // namespace semistream

#endif  // SEMISTREAM_ORACLE_H_
