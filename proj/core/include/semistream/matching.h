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

#ifndef SEMISTREAM_MATCHING_H_
#define SEMISTREAM_MATCHING_H_

#include <cstddef>
#include <vector>

#include "semistream/graph.h"

namespace semistream {

// A set of vertices on one side, one bit per vertex.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t universe, bool full)
      : bits_(universe, full), count_(full ? universe : 0) {}

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return count_; }
  bool contains(Vertex v) const { return v < bits_.size() && bits_[v]; }

  void insert(Vertex v) {
    if (!bits_[v]) {
      bits_[v] = true;
      ++count_;
    }
  }
  void erase(Vertex v) {
    if (bits_[v]) {
      bits_[v] = false;
      --count_;
    }
  }

  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

// Edge subset with degree <= 1 on both sides and O(1) mate lookup.
class Matching {
 public:
  Matching() = default;
  Matching(std::size_t n_a, std::size_t n_b)
      : mate_a_(n_a, kNoVertex), mate_b_(n_b, kNoVertex) {}

  std::size_t n_a() const { return mate_a_.size(); }
  std::size_t n_b() const { return mate_b_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  Vertex mate_of_a(Vertex a) const { return mate_a_[a]; }
  Vertex mate_of_b(Vertex b) const { return mate_b_[b]; }
  bool covers_a(Vertex a) const { return mate_a_[a] != kNoVertex; }
  bool covers_b(Vertex b) const { return mate_b_[b] != kNoVertex; }
  bool contains(Edge e) const {
    return e.a < mate_a_.size() && mate_a_[e.a] == e.b;
  }

  // True iff both endpoints are currently free.
  bool can_add(Edge e) const {
    return mate_a_[e.a] == kNoVertex && mate_b_[e.b] == kNoVertex;
  }
  // Throws std::logic_error if either endpoint is already matched.
  void add(Edge e);
  // Throws std::logic_error if e is not in the matching.
  void remove(Edge e);

  // Edges sorted by A endpoint.
  std::vector<Edge> edges() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_a_;
  std::vector<Vertex> mate_b_;
  std::size_t size_ = 0;
};

Matching matching_from_edges(std::size_t n_a, std::size_t n_b,
                             std::span<const Edge> edges);

// deg(a) <= 1 for every a, deg(b) <= lambda for every b.
class SemiMatching {
 public:
  SemiMatching() = default;
  SemiMatching(std::size_t n_a, std::size_t n_b, std::size_t lambda);

  std::size_t n_a() const { return partner_a_.size(); }
  std::size_t n_b() const { return deg_b_.size(); }
  std::size_t lambda() const { return lambda_; }
  std::size_t size() const { return size_; }
  // |A(S)|; equals size() because every A vertex has degree <= 1.
  std::size_t covered_a() const { return size_; }

  Vertex partner_of_a(Vertex a) const { return partner_a_[a]; }
  std::size_t degree_of_b(Vertex b) const { return deg_b_[b]; }

  bool can_add(Edge e) const {
    return partner_a_[e.a] == kNoVertex && deg_b_[e.b] < lambda_;
  }
  void add(Edge e);

  // Edges sorted by A endpoint.
  std::vector<Edge> edges() const;

 private:
  std::size_t lambda_ = 1;
  std::vector<Vertex> partner_a_;
  std::vector<std::size_t> deg_b_;
  std::size_t size_ = 0;
};

// True iff every edge of m is in g and the degree constraints hold.
bool is_valid_matching(const BipartiteGraph& g, const Matching& m);
bool is_valid_semi_matching(const BipartiteGraph& g, const SemiMatching& s);

// No edge of g has both endpoints free in m.
bool is_maximal(const BipartiteGraph& g, const Matching& m);

std::size_t intersection_size(const Matching& x, const Matching& y);

}  // namespace semistream

#endif  // SEMISTREAM_MATCHING_H_
