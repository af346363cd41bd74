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

#ifndef SEMISTREAM_GRAPH_H_
#define SEMISTREAM_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semistream {

// Vertex ids are dense and 0-based per side.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable bipartite graph G = (A, B, E). Edges are a set: duplicates are
// rejected at construction, as are out-of-range endpoints.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t n_a, std::size_t n_b, std::vector<Edge> edges);

  std::size_t n_a() const { return n_a_; }
  std::size_t n_b() const { return n_b_; }
  std::size_t num_vertices() const { return n_a_ + n_b_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // O(log deg) membership test.
  bool has_edge(Edge e) const;

  friend bool operator==(const BipartiteGraph&,
                         const BipartiteGraph&) = default;

 private:
  std::size_t n_a_ = 0;
  std::size_t n_b_ = 0;
  std::vector<Edge> edges_;
  // Sorted copy for has_edge().
  std::vector<Edge> sorted_;
};

// A permutation of edge indices; defines the stream pi.
class ArrivalOrder {
 public:
  ArrivalOrder() = default;
  // Throws std::invalid_argument unless perm is a bijection on [0, m).
  explicit ArrivalOrder(std::vector<std::size_t> perm);

  static ArrivalOrder identity(std::size_t m);

  std::size_t size() const { return perm_.size(); }
  std::size_t operator[](std::size_t i) const { return perm_[i]; }
  std::span<const std::size_t> perm() const { return perm_; }

  friend bool operator==(const ArrivalOrder&, const ArrivalOrder&) = default;

 private:
  std::vector<std::size_t> perm_;
};

bool is_permutation_of_range(std::span<const std::size_t> perm);

// The edge sequence g.edges[order[0]], ..., g.edges[order[m-1]].
std::vector<Edge> edge_sequence(const BipartiteGraph& g,
                                const ArrivalOrder& order);

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdgeLine,
  kEndpointOutOfRange,
  kDuplicateEdge,
  kWrongEdgeCount,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  ParseErrorKind kind() const { return kind_; }
  // 1-based line number of the offending input line.
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Text format: "n_a n_b m\n" followed by exactly m lines "a b\n". The file
// order of edges is the arrival order, so the returned order is the identity.
std::pair<BipartiteGraph, ArrivalOrder> read_graph(std::string_view text);

// Emits edges in arrival order. For the identity order this is the exact
// inverse of read_graph; for other orders it preserves the edge stream.
std::string write_graph(const BipartiteGraph& g, const ArrivalOrder& order);

// Whitespace-separated edge indices; validated against m.
ArrivalOrder read_order(std::string_view text, std::size_t m);
std::string write_order(const ArrivalOrder& order);

}  // namespace semistream

#endif  // SEMISTREAM_GRAPH_H_
