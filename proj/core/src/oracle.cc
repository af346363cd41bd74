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

#include "semistream/oracle.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace semistream {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// CSR adjacency from A to B, neighbors in increasing order.
struct Adjacency {
  std::vector<std::size_t> offset;
  std::vector<Vertex> target;

  explicit Adjacency(const BipartiteGraph& g) : offset(g.n_a() + 1, 0) {
    for (const Edge& e : g.edges()) ++offset[e.a + 1];
    for (std::size_t a = 0; a < g.n_a(); ++a) offset[a + 1] += offset[a];
    target.resize(g.num_edges());
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (const Edge& e : g.edges()) target[fill[e.a]++] = e.b;
    for (std::size_t a = 0; a < g.n_a(); ++a) {
      std::sort(target.begin() + offset[a], target.begin() + offset[a + 1]);
    }
  }
};

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
  const std::size_t n_a = g.n_a();
  const Adjacency adj(g);
  std::vector<Vertex> mate_a(n_a, kNoVertex);
  std::vector<Vertex> mate_b(g.n_b(), kNoVertex);
  std::vector<std::size_t> dist(n_a);
  std::vector<std::size_t> next(n_a);
  std::vector<Vertex> queue;
  std::vector<Vertex> stack;
  queue.reserve(n_a);

  while (true) {
    // Layer the alternating BFS from all free A vertices.
    queue.clear();
    for (Vertex a = 0; a < n_a; ++a) {
      if (mate_a[a] == kNoVertex) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kUnreached;
      }
    }
    bool found_free_b = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex a = queue[head];
      for (std::size_t i = adj.offset[a]; i < adj.offset[a + 1]; ++i) {
        const Vertex w = mate_b[adj.target[i]];
        if (w == kNoVertex) {
          found_free_b = true;
        } else if (dist[w] == kUnreached) {
          dist[w] = dist[a] + 1;
          queue.push_back(w);
        }
      }
    }
    if (!found_free_b) break;

    // Vertex-disjoint shortest augmenting paths by iterative DFS.
    for (Vertex a = 0; a < n_a; ++a) next[a] = adj.offset[a];
    for (Vertex root = 0; root < n_a; ++root) {
      if (mate_a[root] != kNoVertex || dist[root] != 0) continue;
      stack.assign(1, root);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        if (next[u] == adj.offset[u + 1]) {
          dist[u] = kUnreached;
          stack.pop_back();
          continue;
        }
        const Vertex b = adj.target[next[u]];
        const Vertex w = mate_b[b];
        if (w == kNoVertex) {
          for (Vertex x : stack) {
            const Vertex y = adj.target[next[x]];
            mate_a[x] = y;
            mate_b[y] = x;
          }
          for (Vertex x : stack) dist[x] = kUnreached;
          break;
        }
        if (dist[w] != kUnreached && dist[w] == dist[u] + 1) {
          stack.push_back(w);
        } else {
          ++next[u];
        }
      }
    }
  }

  Matching m(n_a, g.n_b());
  for (Vertex a = 0; a < n_a; ++a) {
    if (mate_a[a] != kNoVertex) m.add({a, mate_a[a]});
  }
  return m;
}

bool DiffComponent::is_augmenting_for_m() const {
  return !is_cycle && length() % 2 == 1 &&
         origins.front() == EdgeOrigin::kOnlyInMStar;
}

std::size_t DiffDecomposition::total_edges() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.length();
  return n;
}

std::size_t DiffDecomposition::paths_of_length(std::size_t len) const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(),
                    [len](const DiffComponent& c) {
                      return !c.is_cycle && c.length() == len;
                    }));
}

namespace {

// Neighbor of v across an edge that lies in `in` but not in `other`.
std::optional<SideVertex> diff_neighbor(SideVertex v, const Matching& in,
                                        const Matching& other) {
  if (v.side == Side::kA) {
    const Vertex b = in.mate_of_a(v.id);
    if (b != kNoVertex && other.mate_of_a(v.id) != b) {
      return SideVertex{Side::kB, b};
    }
  } else {
    const Vertex a = in.mate_of_b(v.id);
    if (a != kNoVertex && other.mate_of_b(v.id) != a) {
      return SideVertex{Side::kA, a};
    }
  }
  return std::nullopt;
}

}  // namespace

DiffDecomposition decompose(const BipartiteGraph& g, const Matching& m,
                            const Matching& mstar) {
  if (!is_valid_matching(g, m) || !is_valid_matching(g, mstar)) {
    throw std::invalid_argument("decompose: invalid matching");
  }
  auto step = [&](SideVertex v, EdgeOrigin o) {
    return o == EdgeOrigin::kOnlyInM ? diff_neighbor(v, m, mstar)
                                     : diff_neighbor(v, mstar, m);
  };
  auto flip = [](EdgeOrigin o) {
    return o == EdgeOrigin::kOnlyInM ? EdgeOrigin::kOnlyInMStar
                                     : EdgeOrigin::kOnlyInM;
  };

  std::vector<bool> seen_a(g.n_a(), false);
  std::vector<bool> seen_b(g.n_b(), false);
  auto mark = [&](SideVertex v) {
    (v.side == Side::kA ? seen_a : seen_b)[v.id] = true;
  };
  auto seen = [&](SideVertex v) {
    return (v.side == Side::kA ? seen_a : seen_b)[v.id];
  };

  DiffDecomposition out;
  auto walk = [&](SideVertex start, EdgeOrigin first, bool cycle) {
    DiffComponent c;
    c.is_cycle = cycle;
    c.vertices.push_back(start);
    mark(start);
    SideVertex cur = start;
    EdgeOrigin o = first;
    while (auto nb = step(cur, o)) {
      c.origins.push_back(o);
      if (cycle && *nb == start) break;
      c.vertices.push_back(*nb);
      mark(*nb);
      cur = *nb;
      o = flip(o);
    }
    out.components.push_back(std::move(c));
  };

  // Paths start at their degree-1 endpoints, A side first.
  for (Side side : {Side::kA, Side::kB}) {
    const std::size_t n = side == Side::kA ? g.n_a() : g.n_b();
    for (Vertex id = 0; id < n; ++id) {
      const SideVertex v{side, id};
      if (seen(v)) continue;
      const bool via_m = step(v, EdgeOrigin::kOnlyInM).has_value();
      const bool via_star = step(v, EdgeOrigin::kOnlyInMStar).has_value();
      if (via_m != via_star) {
        walk(v, via_m ? EdgeOrigin::kOnlyInM : EdgeOrigin::kOnlyInMStar,
             false);
      }
    }
  }
  // What remains with degree 2 lies on cycles; each contains an A vertex.
  for (Vertex id = 0; id < g.n_a(); ++id) {
    const SideVertex v{Side::kA, id};
    if (!seen(v) && step(v, EdgeOrigin::kOnlyInM)) {
      walk(v, EdgeOrigin::kOnlyInM, true);
    }
  }
  return out;
}

std::size_t count_3_augmentable(const BipartiteGraph& g, const Matching& m,
                                const Matching& mstar) {
  if (!is_valid_matching(g, m) || !is_valid_matching(g, mstar)) {
    throw std::invalid_argument("count_3_augmentable: invalid matching");
  }
  if (mstar.size() != max_matching(g).size()) {
    throw std::invalid_argument("count_3_augmentable: M* is not maximum");
  }
  if (!is_maximal(g, m)) {
    throw std::invalid_argument("count_3_augmentable: M is not maximal");
  }
  std::size_t count = 0;
  for (const auto& c : decompose(g, m, mstar).components) {
    if (c.length() == 3 && c.is_augmenting_for_m()) ++count;
  }
  return count;
}

}  // namespace semistream
