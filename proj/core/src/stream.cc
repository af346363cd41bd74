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

#include "semistream/stream.h"

namespace semistream {

StreamSource::StreamSource(const BipartiteGraph& graph,
                           const ArrivalOrder& order)
    : graph_(&graph), order_(&order) {
  if (order.size() != graph.num_edges()) {
    throw std::invalid_argument("arrival order length differs from m");
  }
}

AuditReport StreamSource::audit() const {
  AuditReport r;
  r.passes_used = passes_;
  r.peak_retained_edges = peak_retained_;
  r.max_work_per_edge = max_edge_work_;
  r.per_edge_work_bound_ok = max_edge_work_ <= kPerEdgeWorkLimit;
  return r;
}

}  // namespace semistream
