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

#ifndef SEMISTREAM_STREAM_H_
#define SEMISTREAM_STREAM_H_

#include <cstddef>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>

#include "semistream/graph.h"

namespace semistream {

// Upper bound on the work units an algorithm may charge for a single arriving
// edge. One unit is one O(1) online consumer step.
inline constexpr std::size_t kPerEdgeWorkLimit = 4;

struct AuditReport {
  int passes_used = 0;
  // Maximum number of edges the audited algorithm held at once.
  std::size_t peak_retained_edges = 0;
  std::size_t max_work_per_edge = 0;
  bool per_edge_work_bound_ok = true;
};

class AuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pass-audited view of (graph, order). Algorithms see edges only through
// open_pass() and report their retained state through note_retained().
// Single-owner: not safe to share between threads.
class StreamSource {
 public:
  StreamSource(const BipartiteGraph& graph, const ArrivalOrder& order);

  // n_a, n_b and m are known before the first pass.
  std::size_t n_a() const { return graph_->n_a(); }
  std::size_t n_b() const { return graph_->n_b(); }
  std::size_t num_edges() const { return graph_->num_edges(); }

  // Once armed, opening more than `passes` passes throws AuditError.
  void arm_pass_budget(int passes) { budget_ = passes; }

  class Pass;
  Pass open_pass();

  int passes_opened() const { return passes_; }
  // Position within the current pass.
  std::size_t cursor() const { return cursor_; }

  void note_retained(std::size_t edges) {
    if (edges > peak_retained_) peak_retained_ = edges;
  }
  void note_work(std::size_t units) {
    edge_work_ += units;
    if (edge_work_ > max_edge_work_) max_edge_work_ = edge_work_;
  }

  AuditReport audit() const;

 private:
  const Edge& at(std::size_t pos) const { return graph_->edge((*order_)[pos]); }
  void advance() {
    ++cursor_;
    edge_work_ = 0;
  }

  const BipartiteGraph* graph_;
  const ArrivalOrder* order_;
  std::optional<int> budget_;
  int passes_ = 0;
  std::size_t cursor_ = 0;
  std::size_t peak_retained_ = 0;
  std::size_t edge_work_ = 0;
  std::size_t max_edge_work_ = 0;
};

// One traversal of the stream. Only one iterator per pass may be advanced.
class StreamSource::Pass {
 public:
  class iterator {
   public:
    using value_type = Edge;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Edge& operator*() const { return src_->at(pos_); }
    iterator& operator++() {
      ++pos_;
      src_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.pos_ >= it.end_;
    }

   private:
    friend class Pass;
    iterator(StreamSource* src, std::size_t end) : src_(src), end_(end) {}
    StreamSource* src_ = nullptr;
    std::size_t pos_ = 0;
    std::size_t end_ = 0;
  };

  iterator begin() { return iterator(src_, src_->num_edges()); }
  std::default_sentinel_t end() const { return {}; }

  std::size_t n_a() const { return src_->n_a(); }
  std::size_t n_b() const { return src_->n_b(); }
  std::size_t size() const { return src_->num_edges(); }
  StreamSource& source() const { return *src_; }

 private:
  friend class StreamSource;
  explicit Pass(StreamSource* src) : src_(src) {}
  StreamSource* src_;
};

inline StreamSource::Pass StreamSource::open_pass() {
  if (budget_ && passes_ >= *budget_) {
    throw AuditError("pass budget of " + std::to_string(*budget_) +
                     " exceeded");
  }
  ++passes_;
  cursor_ = 0;
  edge_work_ = 0;
  return Pass(this);
}

}  // namespace semistream

#endif  // SEMISTREAM_STREAM_H_
