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

#include "semistream/graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace semistream {

BipartiteGraph::BipartiteGraph(std::size_t n_a, std::size_t n_b,
                               std::vector<Edge> edges)
    : n_a_(n_a), n_b_(n_b), edges_(std::move(edges)) {
  if (n_a_ >= kNoVertex || n_b_ >= kNoVertex) {
    throw std::invalid_argument("vertex count exceeds id range");
  }
  for (const Edge& e : edges_) {
    if (e.a >= n_a_ || e.b >= n_b_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  sorted_ = edges_;
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

bool BipartiteGraph::has_edge(Edge e) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), e);
}

bool is_permutation_of_range(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i : perm) {
    if (i >= perm.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

ArrivalOrder::ArrivalOrder(std::vector<std::size_t> perm)
    : perm_(std::move(perm)) {
  if (!is_permutation_of_range(perm_)) {
    throw std::invalid_argument("arrival order is not a permutation");
  }
}

ArrivalOrder ArrivalOrder::identity(std::size_t m) {
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  return ArrivalOrder(std::move(perm));
}

std::vector<Edge> edge_sequence(const BipartiteGraph& g,
                                const ArrivalOrder& order) {
  if (order.size() != g.num_edges()) {
    throw std::invalid_argument("arrival order length differs from m");
  }
  std::vector<Edge> seq;
  seq.reserve(order.size());
  for (std::size_t i : order.perm()) seq.push_back(g.edge(i));
  return seq;
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader:
      return "malformed header";
    case ParseErrorKind::kMalformedEdgeLine:
      return "malformed edge line";
    case ParseErrorKind::kEndpointOutOfRange:
      return "endpoint out of range";
    case ParseErrorKind::kDuplicateEdge:
      return "duplicate edge";
    case ParseErrorKind::kWrongEdgeCount:
      return "wrong edge count";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      line_(line) {}

namespace {

// Parses a line of exactly `count` decimal fields separated by single spaces.
bool parse_fields(std::string_view line, std::size_t count,
                  std::uint64_t* out) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') return false;
      ++p;
    }
    if (p == end || *p < '0' || *p > '9') return false;
    auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc()) return false;
    p = next;
  }
  return p == end;
}

}  // namespace

std::pair<BipartiteGraph, ArrivalOrder> read_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty()) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1, "empty input");
  }

  std::uint64_t header[3];
  if (!parse_fields(lines[0], 3, header)) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1,
                     "expected \"n_a n_b m\"");
  }
  const std::uint64_t n_a = header[0];
  const std::uint64_t n_b = header[1];
  const std::uint64_t m = header[2];
  if (n_a >= kNoVertex || n_b >= kNoVertex) {
    throw ParseError(ParseErrorKind::kMalformedHeader, 1,
                     "vertex count too large");
  }
  if (lines.size() - 1 != m) {
    throw ParseError(ParseErrorKind::kWrongEdgeCount, lines.size(),
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<std::pair<Edge, std::size_t>> seen;
  seen.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::uint64_t f[2];
    if (!parse_fields(lines[i], 2, f)) {
      throw ParseError(ParseErrorKind::kMalformedEdgeLine, i + 1,
                       "expected \"a b\"");
    }
    if (f[0] >= n_a || f[1] >= n_b) {
      throw ParseError(ParseErrorKind::kEndpointOutOfRange, i + 1,
                       std::to_string(f[0]) + " " + std::to_string(f[1]));
    }
    Edge e{static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])};
    edges.push_back(e);
    seen.emplace_back(e, i + 1);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, seen[i].second,
                       std::to_string(seen[i].first.a) + " " +
                           std::to_string(seen[i].first.b));
    }
  }
  return {BipartiteGraph(n_a, n_b, std::move(edges)),
          ArrivalOrder::identity(m)};
}

std::string write_graph(const BipartiteGraph& g, const ArrivalOrder& order) {
  std::ostringstream out;
  out << g.n_a() << ' ' << g.n_b() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : edge_sequence(g, order)) {
    out << e.a << ' ' << e.b << '\n';
  }
  return out.str();
}

ArrivalOrder read_order(std::string_view text, std::size_t m) {
  std::vector<std::size_t> perm;
  perm.reserve(m);
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p != end) {
    if (*p == ' ' || *p == '\n' || *p == '\t' || *p == '\r') {
      ++p;
      continue;
    }
    std::size_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p) {
      throw std::invalid_argument("order file: expected an edge index");
    }
    perm.push_back(v);
    p = next;
  }
  if (perm.size() != m) {
    throw std::invalid_argument("order file: expected " + std::to_string(m) +
                                " indices, found " +
                                std::to_string(perm.size()));
  }
  return ArrivalOrder(std::move(perm));
}

std::string write_order(const ArrivalOrder& order) {
  std::ostringstream out;
  for (std::size_t i : order.perm()) out << i << '\n';
  return out.str();
}

}  // namespace semistream
