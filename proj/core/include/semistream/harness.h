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

#ifndef SEMISTREAM_HARNESS_H_
#define SEMISTREAM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semistream/algorithms.h"
#include "semistream/graph.h"
#include "semistream/matching.h"
#include "semistream/stream.h"

namespace semistream::harness {

enum class AlgorithmId {
  kGreedy,
  kOnePass,
  kSubsetGreedy,
  kTwoPassRand,
  kSemi,
  kTwoPassDet,
};

std::string_view to_string(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);
int declared_passes(AlgorithmId id);
// True for algorithms that consume a sample seed.
bool uses_sample(AlgorithmId id);

struct AlgorithmParams {
  PhaseSplit split;
  double p = kDefaultSampleProbability;
  std::size_t lambda = kDefaultLambda;
  std::uint64_t sample_seed = 0;
};

// Result of one algorithm invocation. `matched` is |M| for matching
// algorithms and |A(S)| for semi.
struct AlgorithmOutcome {
  std::size_t matched = 0;
  std::optional<Matching> matching;
  std::optional<SemiMatching> semi;
};

using AlgorithmFn = std::function<AlgorithmOutcome(StreamSource&)>;

AlgorithmFn make_algorithm(AlgorithmId id, const AlgorithmParams& params);

// Memory cap of the audit: 4 * (n_a + n_b) simultaneously retained edges.
std::size_t retained_edge_budget(const BipartiteGraph& g);

struct AuditedRun {
  AlgorithmOutcome outcome;
  AuditReport audit;
};

// Runs fn on a fresh StreamSource with the pass budget armed. Throws
// AuditError if fn tries to open more than declared_passes passes.
AuditedRun run_audited(const AlgorithmFn& fn, int declared_passes,
                       const BipartiteGraph& g, const ArrivalOrder& order);
AuditedRun run_audited(AlgorithmId id, const AlgorithmParams& params,
                       const BipartiteGraph& g, const ArrivalOrder& order);

// Empty when the audit is clean; otherwise one message per violation.
std::vector<std::string> audit_violations(const AuditReport& report,
                                          int declared_passes,
                                          const BipartiteGraph& g);

// Matched / optimum, with 0 / 0 defined as 1.
double ratio(std::size_t matched, std::size_t opt);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  AuditReport audit;
  std::vector<Check> checks;

  bool ok() const;
};

// Audit checks plus validity of whatever the algorithm returned.
VerifyReport verify_custom(const BipartiteGraph& g, const ArrivalOrder& order,
                           const AlgorithmFn& fn, int declared_passes);
// Adds the algorithm-specific invariants against the exact oracle.
VerifyReport verify(const BipartiteGraph& g, const ArrivalOrder& order,
                    AlgorithmId id, const AlgorithmParams& params);

// ---------------------------------------------------------------------------
// Experiments.

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OrderModel { kFile, kUniform, kAdversarial };

struct GraphSource {
  // Exactly one of file / generator is set.
  std::string file;
  std::string generator;  // half_trap | random | perfect_noise
  std::size_t n = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
};

struct ExperimentSpec {
  AlgorithmId algorithm = AlgorithmId::kGreedy;
  GraphSource graph;
  OrderModel order = OrderModel::kFile;
  // Seed lists have length 1 (shared by all trials) or exactly `trials`.
  std::vector<std::uint64_t> order_seeds;
  std::vector<std::uint64_t> sample_seeds;
  AlgorithmParams params;
  std::size_t trials = 1;
  std::string output;
  bool record_time = false;
  std::size_t threads = 1;
};

// Parses the flat JSON spec object. Throws SpecError.
ExperimentSpec parse_spec(std::string_view json_text);
void validate(const ExperimentSpec& spec);

struct TrialRecord {
  std::string algorithm;
  std::string graph;
  std::optional<std::uint64_t> order_seed;
  std::optional<std::uint64_t> sample_seed;
  std::size_t matched = 0;
  std::size_t opt = 0;
  double ratio = 0.0;
  int passes = 0;
  std::size_t peak_edges = 0;
  double ms = 0.0;
};

struct Aggregate {
  std::size_t trials = 0;
  double mean_matched = 0.0;
  double mean_ratio = 0.0;
  double stddev_ratio = 0.0;  // sample standard deviation
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct ExperimentResult {
  std::string algorithm;
  std::string graph_id;
  std::size_t opt = 0;
  std::vector<TrialRecord> trials;
  Aggregate aggregate;
};

struct LoadedGraph {
  std::string id;
  BipartiteGraph graph;
  ArrivalOrder file_order;
  std::optional<ArrivalOrder> adversarial_order;
};

// Reads the graph file or runs the generator named by the spec.
LoadedGraph load_graph(const GraphSource& source);

// Runs every trial; throws AuditError on an audit violation and SpecError on
// an invalid spec.
ExperimentResult run(const ExperimentSpec& spec);

Aggregate aggregate(const std::vector<TrialRecord>& trials);

inline constexpr std::string_view kCsvHeader =
    "algorithm,graph,order_seed,sample_seed,matched,opt,ratio,passes,"
    "peak_edges,ms";

std::string to_csv(const ExperimentResult& result);

// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace semistream::harness

#endif  // SEMISTREAM_HARNESS_H_
