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

// Command-line front end: instance generation, experiment runs, audited
// verification of a single run, and the exact optimum.
//
// Exit codes: 0 ok, 1 usage, 2 IO/parse, 3 invariant or audit failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "semistream/generators.h"
#include "semistream/graph.h"
#include "semistream/harness.h"
#include "semistream/oracle.h"
#include "semistream/random.h"

namespace {

using namespace semistream;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvariant = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> order_seed;
  std::string output;
};

int run_gen(const GenOptions& o) {
  BipartiteGraph g;
  ArrivalOrder order;
  if (o.family == "half_trap") {
    // File order is the adversarial order.
    std::tie(g, order) = gen_half_trap(o.n);
  } else if (o.family == "random") {
    g = gen_random_bipartite(o.n_a, o.n_b, o.m, o.seed);
    order = ArrivalOrder::identity(g.num_edges());
  } else {
    g = gen_perfect_plus_noise(o.n, o.d, o.seed);
    order = ArrivalOrder::identity(g.num_edges());
  }
  if (o.order_seed) {
    // Re-stream the generated sequence in a uniform random order.
    const std::vector<Edge> seq = edge_sequence(g, order);
    const ArrivalOrder shuffle = uniform_order(seq.size(), *o.order_seed);
    std::vector<Edge> shuffled;
    shuffled.reserve(seq.size());
    for (std::size_t i : shuffle.perm()) shuffled.push_back(seq[i]);
    g = BipartiteGraph(g.n_a(), g.n_b(), std::move(shuffled));
    order = ArrivalOrder::identity(g.num_edges());
  }
  emit(o.output, write_graph(g, order));
  return kExitOk;
}

int run_run(const std::string& spec_path, const std::string& output) {
  harness::ExperimentSpec spec = harness::parse_spec(slurp(spec_path));
  if (!output.empty()) spec.output = output;
  const harness::ExperimentResult result = harness::run(spec);
  emit(spec.output, harness::to_csv(result));
  const auto& a = result.aggregate;
  std::cerr << result.algorithm << " on " << result.graph_id << ": "
            << a.trials << " trials, mean ratio "
            << harness::format_double(a.mean_ratio) << " (sd "
            << harness::format_double(a.stddev_ratio) << ")\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string graph;
  std::optional<std::uint64_t> order_seed;
  std::string order_file;
  std::string algorithm;
  harness::AlgorithmParams params;
};

int run_verify(const VerifyOptions& o) {
  const auto id = harness::parse_algorithm(o.algorithm);
  if (!id) {
    std::cerr << "unknown algorithm: " << o.algorithm << "\n";
    return kExitUsage;
  }
  const std::size_t min_lambda =
      *id == harness::AlgorithmId::kTwoPassDet ? 2 : 1;
  if (o.params.lambda < min_lambda || !(o.params.p >= 0.0 && o.params.p <= 1.0)) {
    std::cerr << "invalid algorithm parameters\n";
    return kExitUsage;
  }
  try {
    o.params.split.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  auto [g, order] = read_graph(slurp(o.graph));
  if (o.order_seed) {
    order = uniform_order(g.num_edges(), *o.order_seed);
  } else if (!o.order_file.empty()) {
    order = read_order(slurp(o.order_file), g.num_edges());
  }
  const harness::VerifyReport report = harness::verify(g, order, *id, o.params);
  std::cout << "algorithm " << o.algorithm << ": passes "
            << report.audit.passes_used << ", peak retained edges "
            << report.audit.peak_retained_edges << ", max work per edge "
            << report.audit.max_work_per_edge << "\n";
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail
              << "\n";
  }
  return report.ok() ? kExitOk : kExitInvariant;
}

int run_oracle(const std::string& path) {
  const auto [g, order] = read_graph(slurp(path));
  std::cout << max_matching(g).size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-streaming bipartite matching experiments"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen.family, "half_trap | random | perfect_noise")
      ->required()
      ->check(CLI::IsMember({"half_trap", "random", "perfect_noise"}));
  gen_cmd->add_option("--n", gen.n, "Size parameter (half_trap, perfect_noise)");
  gen_cmd->add_option("--n-a", gen.n_a, "|A| (random)");
  gen_cmd->add_option("--n-b", gen.n_b, "|B| (random)");
  gen_cmd->add_option("--m", gen.m, "Edge count (random)");
  gen_cmd->add_option("--d", gen.d, "Noise edges per vertex (perfect_noise)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--order-seed", gen.order_seed,
                      "Write edges in a uniform random order");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string spec_path;
  std::string run_output;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment spec");
  run_cmd->add_option("-c,--config", spec_path, "Spec JSON")->required();
  run_cmd->add_option("-o,--output", run_output, "CSV output (default stdout)");

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Audit one algorithm run");
  ver_cmd->add_option("-g,--graph", ver.graph, "Graph file")->required();
  auto* seed_opt =
      ver_cmd->add_option("--order-seed", ver.order_seed, "Uniform order seed");
  auto* file_opt = ver_cmd->add_option("--order-file", ver.order_file,
                                       "Edge-index permutation file");
  seed_opt->excludes(file_opt);
  ver_cmd->add_option("-a,--algorithm", ver.algorithm,
                      "greedy | one_pass | subset_greedy | two_pass_rand | "
                      "semi | two_pass_det")
      ->required();
  ver_cmd->add_option("--alpha", ver.params.split.alpha);
  ver_cmd->add_option("--beta", ver.params.split.beta);
  ver_cmd->add_option("--p", ver.params.p);
  ver_cmd->add_option("--lambda", ver.params.lambda);
  ver_cmd->add_option("--sample-seed", ver.params.sample_seed);

  std::string oracle_graph;
  auto* oracle_cmd = app.add_subcommand("oracle", "Print the optimum size");
  oracle_cmd->add_option("-g,--graph", oracle_graph, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*run_cmd) return run_run(spec_path, run_output);
    if (*ver_cmd) return run_verify(ver);
    if (*oracle_cmd) return run_oracle(oracle_graph);
  } catch (const harness::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AuditError& e) {
    std::cerr << "audit failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const WingError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
