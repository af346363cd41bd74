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

#include "semistream/matching.h"

#include <stdexcept>

namespace semistream {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

void Matching::add(Edge e) {
  if (!can_add(e)) {
    throw std::logic_error("matching: endpoint already matched");
  }
  mate_a_[e.a] = e.b;
  mate_b_[e.b] = e.a;
  ++size_;
}

void Matching::remove(Edge e) {
  if (!contains(e)) {
    throw std::logic_error("matching: edge not present");
  }
  mate_a_[e.a] = kNoVertex;
  mate_b_[e.b] = kNoVertex;
  --size_;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::size_t a = 0; a < mate_a_.size(); ++a) {
    if (mate_a_[a] != kNoVertex) {
      out.push_back({static_cast<Vertex>(a), mate_a_[a]});
    }
  }
  return out;
}

Matching matching_from_edges(std::size_t n_a, std::size_t n_b,
                             std::span<const Edge> edges) {
  Matching m(n_a, n_b);
  for (const Edge& e : edges) m.add(e);
  return m;
}

SemiMatching::SemiMatching(std::size_t n_a, std::size_t n_b,
                           std::size_t lambda)
    : lambda_(lambda), partner_a_(n_a, kNoVertex), deg_b_(n_b, 0) {
  if (lambda < 1) throw std::invalid_argument("semi-matching: lambda < 1");
}

void SemiMatching::add(Edge e) {
  if (!can_add(e)) {
    throw std::logic_error("semi-matching: degree cap exceeded");
  }
  partner_a_[e.a] = e.b;
  ++deg_b_[e.b];
  ++size_;
}

std::vector<Edge> SemiMatching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::size_t a = 0; a < partner_a_.size(); ++a) {
    if (partner_a_[a] != kNoVertex) {
      out.push_back({static_cast<Vertex>(a), partner_a_[a]});
    }
  }
  return out;
}

bool is_valid_matching(const BipartiteGraph& g, const Matching& m) {
  if (m.n_a() != g.n_a() || m.n_b() != g.n_b()) return false;
  std::size_t count = 0;
  for (Vertex a = 0; a < m.n_a(); ++a) {
    Vertex b = m.mate_of_a(a);
    if (b == kNoVertex) continue;
    if (b >= m.n_b() || m.mate_of_b(b) != a) return false;
    if (!g.has_edge({a, b})) return false;
    ++count;
  }
  for (Vertex b = 0; b < m.n_b(); ++b) {
    Vertex a = m.mate_of_b(b);
    if (a != kNoVertex && (a >= m.n_a() || m.mate_of_a(a) != b)) return false;
  }
  return count == m.size();
}

bool is_valid_semi_matching(const BipartiteGraph& g, const SemiMatching& s) {
  if (s.n_a() != g.n_a() || s.n_b() != g.n_b()) return false;
  std::vector<std::size_t> deg(g.n_b(), 0);
  std::size_t count = 0;
  for (const Edge& e : s.edges()) {
    if (e.a >= g.n_a() || e.b >= g.n_b() || !g.has_edge(e)) return false;
    if (++deg[e.b] > s.lambda()) return false;
    ++count;
  }
  for (Vertex b = 0; b < g.n_b(); ++b) {
    if (deg[b] != s.degree_of_b(b)) return false;
  }
  return count == s.size();
}

bool is_maximal(const BipartiteGraph& g, const Matching& m) {
  for (const Edge& e : g.edges()) {
    if (m.can_add(e)) return false;
  }
  return true;
}

std::size_t intersection_size(const Matching& x, const Matching& y) {
  std::size_t n = 0;
  for (Vertex a = 0; a < x.n_a(); ++a) {
    Vertex b = x.mate_of_a(a);
    if (b != kNoVertex && a < y.n_a() && y.mate_of_a(a) == b) ++n;
  }
  return n;
}

}  // namespace semistream
