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

#include "semistream/algorithms.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "semistream/random.h"

namespace semistream {

void PhaseSplit::validate() const {
  if (!(alpha >= 0.0 && alpha <= 0.5 && 0.5 < beta && beta < 1.0)) {
    throw std::invalid_argument("phase split requires 0 <= alpha <= 1/2 < "
                                "beta < 1");
  }
}

namespace {

void check_filter_shape(const EdgeFilter& f, std::size_t n_a,
                        std::size_t n_b) {
  if (f.allowed_a().universe() != n_a || f.allowed_b().universe() != n_b) {
    throw std::invalid_argument("edge filter does not match graph sides");
  }
}

void check_sample_shape(const SubsetSample& s, std::size_t n_a) {
  if (s.members.universe() != n_a) {
    throw std::invalid_argument("subset sample does not match |A|");
  }
}

VertexSet uncovered_b(const Matching& m) {
  VertexSet out(m.n_b(), false);
  for (Vertex b = 0; b < m.n_b(); ++b) {
    if (!m.covers_b(b)) out.insert(b);
  }
  return out;
}

// Right wings between B(m0) and the complement of A(m0), drawn from `edges`,
// plus the set of A vertices whose m0 mate received a wing.
void collect_right_wings(const Matching& m0, std::span<const Edge> edges,
                         std::vector<Edge>& wings, VertexSet& a2) {
  for (const Edge& e : edges) {
    if (m0.covers_b(e.b) && !m0.covers_a(e.a)) {
      wings.push_back(e);
      a2.insert(m0.mate_of_b(e.b));
    }
  }
}

// Second pass shared by both two-pass algorithms.
Matching left_wing_pass(StreamSource& src, const Matching& m0,
                        std::size_t right_wing_count, const VertexSet& a2) {
  EdgeFilter f2(a2, uncovered_b(m0));
  GreedyMatcher m2(src.n_a(), src.n_b());
  for (const Edge& e : src.open_pass()) {
    src.note_work(1);
    if (f2.accepts(e)) m2.offer(e);
    src.note_retained(m0.size() + right_wing_count + m2.matching().size());
  }
  return std::move(m2).release();
}

}  // namespace

Matching greedy(StreamSource::Pass pass, const EdgeFilter* filter) {
  if (filter != nullptr) check_filter_shape(*filter, pass.n_a(), pass.n_b());
  StreamSource& src = pass.source();
  GreedyMatcher g(pass.n_a(), pass.n_b());
  for (const Edge& e : pass) {
    src.note_work(1);
    if (filter == nullptr || filter->accepts(e)) g.offer(e);
    src.note_retained(g.matching().size());
  }
  return std::move(g).release();
}

Matching greedy(StreamSource& src, const EdgeFilter* filter) {
  return greedy(src.open_pass(), filter);
}

SemiMatching semi(StreamSource::Pass pass, std::size_t lambda) {
  if (lambda < 1) throw std::invalid_argument("semi: lambda must be >= 1");
  StreamSource& src = pass.source();
  SemiMatcher s(pass.n_a(), pass.n_b(), lambda);
  for (const Edge& e : pass) {
    src.note_work(1);
    s.offer(e);
    src.note_retained(s.semi_matching().size());
  }
  return std::move(s).release();
}

SemiMatching semi(StreamSource& src, std::size_t lambda) {
  if (lambda < 1) throw std::invalid_argument("semi: lambda must be >= 1");
  return semi(src.open_pass(), lambda);
}

SubsetSample sample_vertex_subset(std::size_t n_a, double p,
                                  std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("sample probability must lie in [0, 1]");
  }
  // floor(p * 2^64) does not fit in 64 bits when p == 1.
  const bool take_all = p >= 1.0;
  const auto threshold = take_all ? std::uint64_t{0}
                                  : static_cast<std::uint64_t>(
                                        std::ldexp(p, 64));
  SubsetSample sample{p, VertexSet(n_a, false)};
  SplitMix64 rng(seed);
  for (std::size_t a = 0; a < n_a; ++a) {
    const std::uint64_t draw = rng.next();
    if (take_all || draw < threshold) {
      sample.members.insert(static_cast<Vertex>(a));
    }
  }
  return sample;
}

Matching random_subset_greedy(StreamSource& src, const SubsetSample& sample) {
  check_sample_shape(sample, src.n_a());
  EdgeFilter f(sample.members, VertexSet(src.n_b(), true));
  return greedy(src, &f);
}

Matching augment_with_wings(const Matching& m0,
                            std::span<const Edge> right_wings,
                            const Matching& left_wings) {
  const std::size_t n_a = m0.n_a();
  const std::size_t n_b = m0.n_b();
  if (left_wings.n_a() != n_a || left_wings.n_b() != n_b) {
    throw WingError("left wings do not match the graph sides");
  }

  std::vector<Vertex> wing_of_b(n_b, kNoVertex);
  std::vector<bool> seen_c(n_a, false);
  for (const Edge& w : right_wings) {
    if (w.a >= n_a || w.b >= n_b) throw WingError("right wing out of range");
    if (m0.covers_a(w.a)) {
      throw WingError("right wing endpoint " + std::to_string(w.a) +
                      " is matched in M0");
    }
    if (!m0.covers_b(w.b)) {
      throw WingError("right wing endpoint " + std::to_string(w.b) +
                      " is not matched in M0");
    }
    if (seen_c[w.a]) {
      throw WingError("vertex " + std::to_string(w.a) +
                      " appears in two right wings");
    }
    seen_c[w.a] = true;
    if (wing_of_b[w.b] == kNoVertex || w.a < wing_of_b[w.b]) {
      wing_of_b[w.b] = w.a;
    }
  }

  Matching out = m0;
  for (const Edge& left : left_wings.edges()) {
    if (!m0.covers_a(left.a)) {
      throw WingError("left wing endpoint " + std::to_string(left.a) +
                      " is not matched in M0");
    }
    if (m0.covers_b(left.b)) {
      throw WingError("left wing endpoint " + std::to_string(left.b) +
                      " is matched in M0");
    }
    const Vertex b = m0.mate_of_a(left.a);
    const Vertex c = wing_of_b[b];
    if (c == kNoVertex) {
      throw WingError("no right wing at B vertex " + std::to_string(b));
    }
    out.remove({left.a, b});
    out.add(left);
    out.add({c, b});
  }
  return out;
}

OnePassTrace one_pass_random_order_trace(StreamSource& src,
                                         const PhaseSplit& split) {
  split.validate();
  const std::size_t n_a = src.n_a();
  const std::size_t n_b = src.n_b();
  const std::size_t m = src.num_edges();
  const auto phase1_end =
      static_cast<std::size_t>(std::floor(split.alpha * static_cast<double>(m)));
  const auto phase2_end =
      static_cast<std::size_t>(std::floor(split.beta * static_cast<double>(m)));

  GreedyMatcher all(n_a, n_b);
  GreedyMatcher m0(n_a, n_b);
  GreedyMatcher m1(n_a, n_b);
  GreedyMatcher m2(n_a, n_b);
  // F1 = complement(A(M0)) x B(M0); F2 = A' x complement(B(M0)).
  EdgeFilter f1(VertexSet(n_a, true), VertexSet(n_b, false));
  EdgeFilter f2(VertexSet(n_a, false), VertexSet(n_b, true));

  std::size_t t = 0;
  for (const Edge& e : src.open_pass()) {
    ++t;
    all.offer(e);
    if (t <= phase1_end) {
      if (m0.offer(e)) {
        f1.allowed_a().erase(e.a);
        f1.allowed_b().insert(e.b);
        f2.allowed_b().erase(e.b);
      }
    } else if (t <= phase2_end) {
      if (f1.accepts(e) && m1.offer(e)) {
        f2.allowed_a().insert(m0.matching().mate_of_b(e.b));
      }
    } else if (f2.accepts(e)) {
      m2.offer(e);
    }
    src.note_work(2);
    src.note_retained(all.matching().size() + m0.matching().size() +
                      m1.matching().size() + m2.matching().size());
  }

  OnePassTrace trace;
  trace.phase1_end = phase1_end;
  trace.phase2_end = phase2_end;
  trace.greedy_all = std::move(all).release();
  trace.m0 = std::move(m0).release();
  trace.m1 = std::move(m1).release();
  trace.m2 = std::move(m2).release();
  trace.augmented = augment_with_wings(trace.m0, trace.m1.edges(), trace.m2);
  trace.output = trace.augmented.size() >= trace.greedy_all.size()
                     ? trace.augmented
                     : trace.greedy_all;
  return trace;
}

Matching one_pass_random_order(StreamSource& src, const PhaseSplit& split) {
  return one_pass_random_order_trace(src, split).output;
}

TwoPassTrace two_pass_randomized_trace(StreamSource& src,
                                       const SubsetSample& sample) {
  check_sample_shape(sample, src.n_a());
  const std::size_t n_a = src.n_a();
  const std::size_t n_b = src.n_b();

  GreedyMatcher m0(n_a, n_b);
  GreedyMatcher sampled(n_a, n_b);
  for (const Edge& e : src.open_pass()) {
    m0.offer(e);
    if (sample.members.contains(e.a)) sampled.offer(e);
    src.note_work(2);
    src.note_retained(m0.matching().size() + sampled.matching().size());
  }

  TwoPassTrace trace;
  trace.m0 = std::move(m0).release();
  trace.a2 = VertexSet(n_a, false);
  collect_right_wings(trace.m0, sampled.matching().edges(), trace.m1,
                      trace.a2);
  trace.m2 = left_wing_pass(src, trace.m0, trace.m1.size(), trace.a2);
  trace.output = augment_with_wings(trace.m0, trace.m1, trace.m2);
  return trace;
}

Matching two_pass_randomized(StreamSource& src, const SubsetSample& sample) {
  return two_pass_randomized_trace(src, sample).output;
}

Matching two_pass_randomized(StreamSource& src, double p,
                             std::uint64_t seed) {
  return two_pass_randomized(src, sample_vertex_subset(src.n_a(), p, seed));
}

TwoPassTrace two_pass_deterministic_trace(StreamSource& src,
                                          std::size_t lambda) {
  if (lambda < 2) {
    throw std::invalid_argument("two_pass_deterministic: lambda must be >= 2");
  }
  const std::size_t n_a = src.n_a();
  const std::size_t n_b = src.n_b();

  GreedyMatcher m0(n_a, n_b);
  SemiMatcher s(n_a, n_b, lambda);
  for (const Edge& e : src.open_pass()) {
    m0.offer(e);
    s.offer(e);
    src.note_work(2);
    src.note_retained(m0.matching().size() + s.semi_matching().size());
  }

  TwoPassTrace trace;
  trace.m0 = std::move(m0).release();
  trace.a2 = VertexSet(n_a, false);
  collect_right_wings(trace.m0, s.semi_matching().edges(), trace.m1,
                      trace.a2);
  trace.m2 = left_wing_pass(src, trace.m0, trace.m1.size(), trace.a2);
  trace.output = augment_with_wings(trace.m0, trace.m1, trace.m2);
  return trace;
}

Matching two_pass_deterministic(StreamSource& src, std::size_t lambda) {
  return two_pass_deterministic_trace(src, lambda).output;
}

bool meets_deterministic_floor(std::size_t matched, std::size_t opt,
                               std::size_t lambda) {
  // matched / opt >= 1/2 + (l - 1) / d  <=>  2 d matched >= (d + 2 (l - 1)) opt
  using Wide = unsigned __int128;
  const Wide l = lambda < 1 ? 1 : lambda;
  const Wide d = 8 * l * l + 10 * l + 2;
  return 2 * d * Wide{matched} >= (d + 2 * (l - 1)) * Wide{opt};
}

double deterministic_floor_ratio(std::size_t lambda) {
  const double l = static_cast<double>(lambda);
  return 0.5 + (l - 1.0) / (8.0 * l * l + 10.0 * l + 2.0);
}

}  // namespace semistream
