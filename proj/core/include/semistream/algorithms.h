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

#ifndef SEMISTREAM_ALGORITHMS_H_
#define SEMISTREAM_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semistream/graph.h"
#include "semistream/matching.h"
#include "semistream/stream.h"

namespace semistream {

// Accepts (a, b) iff a is in the allowed A set and b in the allowed B set.
// Two bit arrays, O(1) membership.
class EdgeFilter {
 public:
  EdgeFilter(VertexSet allowed_a, VertexSet allowed_b)
      : allowed_a_(std::move(allowed_a)), allowed_b_(std::move(allowed_b)) {}

  static EdgeFilter accept_all(std::size_t n_a, std::size_t n_b) {
    return {VertexSet(n_a, true), VertexSet(n_b, true)};
  }

  bool accepts(Edge e) const {
    return allowed_a_.contains(e.a) && allowed_b_.contains(e.b);
  }

  VertexSet& allowed_a() { return allowed_a_; }
  VertexSet& allowed_b() { return allowed_b_; }
  const VertexSet& allowed_a() const { return allowed_a_; }
  const VertexSet& allowed_b() const { return allowed_b_; }

 private:
  VertexSet allowed_a_;
  VertexSet allowed_b_;
};

// Phase boundaries of the one-pass algorithm as fractions of m.
struct PhaseSplit {
  double alpha = 0.4312;
  double beta = 0.7595;

  // Throws std::invalid_argument unless 0 <= alpha <= 1/2 < beta < 1.
  void validate() const;
};

// sqrt(2) - 1 as the nearest double.
inline constexpr double kDefaultSampleProbability = 0.41421356237309515;
inline constexpr std::size_t kDefaultLambda = 3;

struct SubsetSample {
  double p = 0.0;
  VertexSet members;
};

// Online greedy: keeps an arriving edge iff both endpoints are free.
class GreedyMatcher {
 public:
  GreedyMatcher(std::size_t n_a, std::size_t n_b) : matching_(n_a, n_b) {}

  bool offer(Edge e) {
    if (!matching_.can_add(e)) return false;
    matching_.add(e);
    return true;
  }

  const Matching& matching() const { return matching_; }
  Matching release() && { return std::move(matching_); }

 private:
  Matching matching_;
};

// Online SEMI(lambda): keeps ab iff deg(a) = 0 and deg(b) <= lambda - 1.
class SemiMatcher {
 public:
  SemiMatcher(std::size_t n_a, std::size_t n_b, std::size_t lambda)
      : semi_(n_a, n_b, lambda) {}

  bool offer(Edge e) {
    if (!semi_.can_add(e)) return false;
    semi_.add(e);
    return true;
  }

  const SemiMatching& semi_matching() const { return semi_; }
  SemiMatching release() && { return std::move(semi_); }

 private:
  SemiMatching semi_;
};

// Greedy over one pass, optionally restricted to edges the filter accepts.
Matching greedy(StreamSource::Pass pass, const EdgeFilter* filter = nullptr);
// Opens one pass on src.
Matching greedy(StreamSource& src, const EdgeFilter* filter = nullptr);

// Throws std::invalid_argument if lambda < 1.
SemiMatching semi(StreamSource::Pass pass, std::size_t lambda);
SemiMatching semi(StreamSource& src, std::size_t lambda);

// a joins the sample iff the a-th splitmix64 draw is < floor(p * 2^64).
// Throws std::invalid_argument if p is outside [0, 1].
SubsetSample sample_vertex_subset(std::size_t n_a, double p,
                                  std::uint64_t seed);

// Greedy on the edges whose A endpoint is sampled. One pass.
Matching random_subset_greedy(StreamSource& src, const SubsetSample& sample);

// Thrown when augment_with_wings receives wings that do not form
// vertex-disjoint 3-augmenting paths. Indicates a bug in the caller.
class WingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Replaces each m0 edge a-b that has a left wing a-d (d free in m0) and a
// right wing c-b (c free in m0) by the two wings. Right wings are given as
// (c, b) edges; when b has several, the one with the smallest c is used.
// Left wings are given as (a, d) edges. |result| = |m0| + |left_wings|.
Matching augment_with_wings(const Matching& m0,
                            std::span<const Edge> right_wings,
                            const Matching& left_wings);

struct OnePassTrace {
  Matching greedy_all;  // M_G
  Matching m0;          // greedy on the first floor(alpha m) edges
  Matching m1;          // right wings from the middle phase
  Matching m2;          // left wings from the last phase
  Matching augmented;
  Matching output;
  std::size_t phase1_end = 0;
  std::size_t phase2_end = 0;
};

// One pass. Returns the larger of plain greedy and the wing-augmented
// phase-one matching; ties go to the augmented one.
OnePassTrace one_pass_random_order_trace(StreamSource& src,
                                         const PhaseSplit& split = {});
Matching one_pass_random_order(StreamSource& src,
                               const PhaseSplit& split = {});

struct TwoPassTrace {
  Matching m0;
  std::vector<Edge> m1;  // right wings (c, b)
  VertexSet a2;          // A vertices whose M0 mate has a right wing
  Matching m2;           // left wings (a, d)
  Matching output;
};

// Two passes; randomness only through the injected sample.
TwoPassTrace two_pass_randomized_trace(StreamSource& src,
                                       const SubsetSample& sample);
Matching two_pass_randomized(StreamSource& src, const SubsetSample& sample);
// Draws the sample with sample_vertex_subset(n_a, p, seed).
Matching two_pass_randomized(StreamSource& src, double p, std::uint64_t seed);

// Two passes, deterministic. Throws std::invalid_argument if lambda < 2.
TwoPassTrace two_pass_deterministic_trace(
    StreamSource& src, std::size_t lambda = kDefaultLambda);
Matching two_pass_deterministic(StreamSource& src,
                                std::size_t lambda = kDefaultLambda);

// Exact check of |m| >= (1/2 + eps0(lambda)) * opt with
// eps0 = (lambda - 1) / (8 lambda^2 + 10 lambda + 2).
bool meets_deterministic_floor(std::size_t matched, std::size_t opt,
                               std::size_t lambda);
double deterministic_floor_ratio(std::size_t lambda);

}  // namespace semistream

#endif  // SEMISTREAM_ALGORITHMS_H_
