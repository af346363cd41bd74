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

#include "semistream/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "semistream/generators.h"
#include "semistream/oracle.h"
#include "semistream/random.h"

namespace semistream::harness {

namespace {

struct AlgorithmInfo {
  AlgorithmId id;
  std::string_view name;
  int passes;
  bool sampled;
};

constexpr AlgorithmInfo kAlgorithms[] = {
    {AlgorithmId::kGreedy, "greedy", 1, false},
    {AlgorithmId::kOnePass, "one_pass", 1, false},
    {AlgorithmId::kSubsetGreedy, "subset_greedy", 1, true},
    {AlgorithmId::kTwoPassRand, "two_pass_rand", 2, true},
    {AlgorithmId::kSemi, "semi", 1, false},
    {AlgorithmId::kTwoPassDet, "two_pass_det", 2, false},
};

const AlgorithmInfo& info(AlgorithmId id) {
  for (const auto& a : kAlgorithms) {
    if (a.id == id) return a;
  }
  throw std::logic_error("unknown algorithm id");
}

AlgorithmOutcome from_matching(Matching m) {
  AlgorithmOutcome o;
  o.matched = m.size();
  o.matching = std::move(m);
  return o;
}

}  // namespace

std::string_view to_string(AlgorithmId id) { return info(id).name; }

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  for (const auto& a : kAlgorithms) {
    if (a.name == name) return a.id;
  }
  return std::nullopt;
}

int declared_passes(AlgorithmId id) { return info(id).passes; }

bool uses_sample(AlgorithmId id) { return info(id).sampled; }

AlgorithmFn make_algorithm(AlgorithmId id, const AlgorithmParams& params) {
  switch (id) {
    case AlgorithmId::kGreedy:
      return [](StreamSource& src) { return from_matching(greedy(src)); };
    case AlgorithmId::kOnePass:
      return [params](StreamSource& src) {
        return from_matching(one_pass_random_order(src, params.split));
      };
    case AlgorithmId::kSubsetGreedy:
      return [params](StreamSource& src) {
        return from_matching(random_subset_greedy(
            src, sample_vertex_subset(src.n_a(), params.p, params.sample_seed)));
      };
    case AlgorithmId::kTwoPassRand:
      return [params](StreamSource& src) {
        return from_matching(
            two_pass_randomized(src, params.p, params.sample_seed));
      };
    case AlgorithmId::kSemi:
      return [params](StreamSource& src) {
        AlgorithmOutcome o;
        o.semi = semi(src, params.lambda);
        o.matched = o.semi->covered_a();
        return o;
      };
    case AlgorithmId::kTwoPassDet:
      return [params](StreamSource& src) {
        return from_matching(two_pass_deterministic(src, params.lambda));
      };
  }
  throw std::logic_error("unknown algorithm id");
}

std::size_t retained_edge_budget(const BipartiteGraph& g) {
  return 4 * (g.n_a() + g.n_b());
}

AuditedRun run_audited(const AlgorithmFn& fn, int declared_passes,
                       const BipartiteGraph& g, const ArrivalOrder& order) {
  StreamSource src(g, order);
  src.arm_pass_budget(declared_passes);
  AuditedRun run;
  run.outcome = fn(src);
  run.audit = src.audit();
  return run;
}

AuditedRun run_audited(AlgorithmId id, const AlgorithmParams& params,
                       const BipartiteGraph& g, const ArrivalOrder& order) {
  return run_audited(make_algorithm(id, params), declared_passes(id), g,
                     order);
}

std::vector<std::string> audit_violations(const AuditReport& report,
                                          int declared_passes,
                                          const BipartiteGraph& g) {
  std::vector<std::string> out;
  if (report.passes_used != declared_passes) {
    out.push_back("used " + std::to_string(report.passes_used) +
                  " passes, declared " + std::to_string(declared_passes));
  }
  if (report.peak_retained_edges > retained_edge_budget(g)) {
    out.push_back("retained " + std::to_string(report.peak_retained_edges) +
                  " edges, budget " + std::to_string(retained_edge_budget(g)));
  }
  if (!report.per_edge_work_bound_ok) {
    out.push_back("charged " + std::to_string(report.max_work_per_edge) +
                  " work units for one edge, limit " +
                  std::to_string(kPerEdgeWorkLimit));
  }
  return out;
}

double ratio(std::size_t matched, std::size_t opt) {
  if (opt == 0) return 1.0;
  return static_cast<double>(matched) / static_cast<double>(opt);
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

VerifyReport verify_custom(const BipartiteGraph& g, const ArrivalOrder& order,
                           const AlgorithmFn& fn, int declared_passes) {
  VerifyReport report;
  AuditedRun run;
  try {
    run = run_audited(fn, declared_passes, g, order);
  } catch (const AuditError& e) {
    report.checks.push_back({"passes", false, e.what()});
    return report;
  }
  report.audit = run.audit;
  const AuditReport& a = run.audit;
  report.checks.push_back(
      {"passes", a.passes_used == declared_passes,
       "used " + std::to_string(a.passes_used) + ", declared " +
           std::to_string(declared_passes)});
  report.checks.push_back(
      {"peak_edges", a.peak_retained_edges <= retained_edge_budget(g),
       std::to_string(a.peak_retained_edges) + " <= " +
           std::to_string(retained_edge_budget(g))});
  report.checks.push_back({"per_edge_work", a.per_edge_work_bound_ok,
                           std::to_string(a.max_work_per_edge) + " <= " +
                               std::to_string(kPerEdgeWorkLimit)});
  if (run.outcome.matching) {
    report.checks.push_back({"valid_matching",
                             is_valid_matching(g, *run.outcome.matching),
                             std::to_string(run.outcome.matching->size()) +
                                 " edges"});
  }
  if (run.outcome.semi) {
    report.checks.push_back(
        {"valid_semi_matching", is_valid_semi_matching(g, *run.outcome.semi),
         std::to_string(run.outcome.semi->size()) + " edges, lambda " +
             std::to_string(run.outcome.semi->lambda())});
  }
  return report;
}

VerifyReport verify(const BipartiteGraph& g, const ArrivalOrder& order,
                    AlgorithmId id, const AlgorithmParams& params) {
  // Keep the outcome so the algorithm-specific checks see the same run.
  std::optional<AlgorithmOutcome> outcome;
  const AlgorithmFn inner = make_algorithm(id, params);
  VerifyReport report = verify_custom(
      g, order,
      [&](StreamSource& src) {
        outcome = inner(src);
        return *outcome;
      },
      declared_passes(id));
  if (!outcome) return report;

  const Matching mstar = max_matching(g);
  const std::size_t opt = mstar.size();
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  if (outcome->matching) {
    add("at_most_opt", outcome->matching->size() <= opt,
        std::to_string(outcome->matching->size()) + " <= " +
            std::to_string(opt));
  }
  if (id == AlgorithmId::kGreedy) {
    add("maximal", is_maximal(g, *outcome->matching), "no addable edge");
  }
  if (id == AlgorithmId::kSemi) {
    const std::size_t l = params.lambda;
    const std::size_t covered = outcome->semi->covered_a();
    add("semi_coverage", l < 2 || (l + 1) * covered >= l * opt,
        "|A(S)| = " + std::to_string(covered) + " vs lambda/(lambda+1) * " +
            std::to_string(opt));
  }
  if (id == AlgorithmId::kTwoPassDet) {
    const std::size_t got = outcome->matching->size();
    add("deterministic_floor",
        meets_deterministic_floor(got, opt, params.lambda),
        format_double(ratio(got, opt)) + " >= " +
            format_double(deterministic_floor_ratio(params.lambda)));
  }

  // Greedy-vs-optimum bounds on the greedy matching of the same stream.
  StreamSource reference(g, order);
  const Matching m = greedy(reference);
  const std::size_t both = intersection_size(m, mstar);
  add("greedy_overlap", both + opt <= 2 * m.size(),
      "|M & M*| = " + std::to_string(both) + " <= 2|M| - |M*| = " +
          std::to_string(static_cast<long long>(2 * m.size()) -
                         static_cast<long long>(opt)));
  const std::size_t k3 = count_3_augmentable(g, m, mstar);
  add("greedy_3_augmentable", k3 + 3 * m.size() >= 2 * opt,
      "k3 = " + std::to_string(k3) + " >= 2|M*| - 3|M| = " +
          std::to_string(static_cast<long long>(2 * opt) -
                         static_cast<long long>(3 * m.size())));
  return report;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

template <typename T>
T get_field(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SpecError(std::string("spec field \"") + key + "\" has wrong type");
  }
}

std::vector<std::uint64_t> get_seeds(const json& j, const char* key) {
  return get_field<std::vector<std::uint64_t>>(j, key, {});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ExperimentSpec parse_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec must be a JSON object");

  static constexpr const char* kKnown[] = {
      "algorithm", "graph_file", "generator", "n",         "n_a",
      "n_b",       "m",          "d",         "graph_seed", "order",
      "order_seeds", "sample_seeds", "alpha", "beta",      "p",
      "lambda",    "trials",     "output",    "record_time", "threads"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) ==
        std::end(kKnown)) {
      throw SpecError("unknown spec field \"" + key + "\"");
    }
  }

  ExperimentSpec spec;
  const auto algo = get_field<std::string>(j, "algorithm", "");
  const auto id = parse_algorithm(algo);
  if (!id) throw SpecError("unknown algorithm \"" + algo + "\"");
  spec.algorithm = *id;

  spec.graph.file = get_field<std::string>(j, "graph_file", "");
  spec.graph.generator = get_field<std::string>(j, "generator", "");
  spec.graph.n = get_field<std::size_t>(j, "n", 0);
  spec.graph.n_a = get_field<std::size_t>(j, "n_a", 0);
  spec.graph.n_b = get_field<std::size_t>(j, "n_b", 0);
  spec.graph.m = get_field<std::size_t>(j, "m", 0);
  spec.graph.d = get_field<std::size_t>(j, "d", 0);
  spec.graph.seed = get_field<std::uint64_t>(j, "graph_seed", 0);

  const auto order = get_field<std::string>(j, "order", "file");
  if (order == "file") {
    spec.order = OrderModel::kFile;
  } else if (order == "uniform") {
    spec.order = OrderModel::kUniform;
  } else if (order == "adversarial") {
    spec.order = OrderModel::kAdversarial;
  } else {
    throw SpecError("unknown order model \"" + order + "\"");
  }
  spec.order_seeds = get_seeds(j, "order_seeds");
  spec.sample_seeds = get_seeds(j, "sample_seeds");

  spec.params.split.alpha = get_field<double>(j, "alpha", PhaseSplit{}.alpha);
  spec.params.split.beta = get_field<double>(j, "beta", PhaseSplit{}.beta);
  spec.params.p = get_field<double>(j, "p", kDefaultSampleProbability);
  spec.params.lambda = get_field<std::size_t>(j, "lambda", kDefaultLambda);
  // A negative trial count must not wrap around.
  const auto trials = get_field<long long>(j, "trials", 1);
  if (trials < 1) throw SpecError("trials must be >= 1");
  spec.trials = static_cast<std::size_t>(trials);
  spec.output = get_field<std::string>(j, "output", "");
  spec.record_time = get_field<bool>(j, "record_time", false);
  spec.threads = get_field<std::size_t>(j, "threads", 1);
  validate(spec);
  return spec;
}

void validate(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw SpecError("trials must be >= 1");
  if (spec.threads < 1) throw SpecError("threads must be >= 1");
  const bool has_file = !spec.graph.file.empty();
  const bool has_gen = !spec.graph.generator.empty();
  if (has_file == has_gen) {
    throw SpecError("exactly one of graph_file and generator is required");
  }
  if (has_gen && spec.graph.generator != "half_trap" &&
      spec.graph.generator != "random" &&
      spec.graph.generator != "perfect_noise") {
    throw SpecError("unknown generator \"" + spec.graph.generator + "\"");
  }
  if (spec.order == OrderModel::kAdversarial &&
      spec.graph.generator != "half_trap") {
    throw SpecError("adversarial order is only defined for half_trap");
  }
  auto check_seeds = [&](const std::vector<std::uint64_t>& seeds,
                         const char* name, bool required) {
    if (!required) {
      if (!seeds.empty()) {
        throw SpecError(std::string(name) + " given but unused");
      }
      return;
    }
    if (seeds.size() != 1 && seeds.size() != spec.trials) {
      throw SpecError(std::string(name) + " must list 1 or `trials` seeds");
    }
  };
  check_seeds(spec.order_seeds, "order_seeds",
              spec.order == OrderModel::kUniform);
  check_seeds(spec.sample_seeds, "sample_seeds", uses_sample(spec.algorithm));
  try {
    spec.params.split.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  if (!(spec.params.p >= 0.0 && spec.params.p <= 1.0)) {
    throw SpecError("p must lie in [0, 1]");
  }
  const std::size_t min_lambda =
      spec.algorithm == AlgorithmId::kTwoPassDet ? 2 : 1;
  if (spec.params.lambda < min_lambda) {
    throw SpecError("lambda must be >= " + std::to_string(min_lambda));
  }
}

LoadedGraph load_graph(const GraphSource& source) {
  if (!source.file.empty()) {
    auto [g, order] = read_graph(read_file(source.file));
    return {source.file, std::move(g), std::move(order), std::nullopt};
  }
  const std::string& gen = source.generator;
  if (gen == "half_trap") {
    auto [g, adversarial] = gen_half_trap(source.n);
    const std::size_t m = g.num_edges();
    return {"half_trap-n" + std::to_string(source.n), std::move(g),
            ArrivalOrder::identity(m), std::move(adversarial)};
  }
  if (gen == "random") {
    BipartiteGraph g =
        gen_random_bipartite(source.n_a, source.n_b, source.m, source.seed);
    const std::size_t m = g.num_edges();
    return {"random-" + std::to_string(source.n_a) + "x" +
                std::to_string(source.n_b) + "-m" + std::to_string(source.m) +
                "-s" + std::to_string(source.seed),
            std::move(g), ArrivalOrder::identity(m), std::nullopt};
  }
  if (gen == "perfect_noise") {
    BipartiteGraph g = gen_perfect_plus_noise(source.n, source.d, source.seed);
    const std::size_t m = g.num_edges();
    return {"perfect_noise-n" + std::to_string(source.n) + "-d" +
                std::to_string(source.d) + "-s" + std::to_string(source.seed),
            std::move(g), ArrivalOrder::identity(m), std::nullopt};
  }
  throw SpecError("unknown generator \"" + gen + "\"");
}

Aggregate aggregate(const std::vector<TrialRecord>& trials) {
  Aggregate agg;
  agg.trials = trials.size();
  if (trials.empty()) return agg;
  double sum_ratio = 0.0;
  double sum_matched = 0.0;
  agg.min_ratio = trials.front().ratio;
  agg.max_ratio = trials.front().ratio;
  for (const auto& t : trials) {
    sum_ratio += t.ratio;
    sum_matched += static_cast<double>(t.matched);
    agg.min_ratio = std::min(agg.min_ratio, t.ratio);
    agg.max_ratio = std::max(agg.max_ratio, t.ratio);
  }
  const double n = static_cast<double>(trials.size());
  agg.mean_ratio = sum_ratio / n;
  agg.mean_matched = sum_matched / n;
  if (trials.size() > 1) {
    double ss = 0.0;
    for (const auto& t : trials) {
      ss += (t.ratio - agg.mean_ratio) * (t.ratio - agg.mean_ratio);
    }
    agg.stddev_ratio = std::sqrt(ss / (n - 1.0));
  }
  return agg;
}

ExperimentResult run(const ExperimentSpec& spec) {
  validate(spec);
  const LoadedGraph loaded = load_graph(spec.graph);
  const BipartiteGraph& g = loaded.graph;
  const std::size_t opt = max_matching(g).size();
  const int passes = declared_passes(spec.algorithm);

  ExperimentResult result;
  result.algorithm = std::string(to_string(spec.algorithm));
  result.graph_id = loaded.id;
  result.opt = opt;
  result.trials.resize(spec.trials);

  auto pick = [](const std::vector<std::uint64_t>& seeds, std::size_t i) {
    return seeds.size() == 1 ? seeds.front() : seeds[i];
  };

  auto run_trial = [&](std::size_t i) {
    TrialRecord rec;
    rec.algorithm = result.algorithm;
    rec.graph = loaded.id;
    ArrivalOrder order;
    switch (spec.order) {
      case OrderModel::kFile:
        order = loaded.file_order;
        break;
      case OrderModel::kAdversarial:
        order = *loaded.adversarial_order;
        break;
      case OrderModel::kUniform:
        rec.order_seed = pick(spec.order_seeds, i);
        order = uniform_order(g.num_edges(), *rec.order_seed);
        break;
    }
    AlgorithmParams params = spec.params;
    if (uses_sample(spec.algorithm)) {
      rec.sample_seed = pick(spec.sample_seeds, i);
      params.sample_seed = *rec.sample_seed;
    }

    const auto start = std::chrono::steady_clock::now();
    const AuditedRun audited = run_audited(spec.algorithm, params, g, order);
    const auto stop = std::chrono::steady_clock::now();

    const auto violations = audit_violations(audited.audit, passes, g);
    if (!violations.empty()) {
      throw AuditError("trial " + std::to_string(i) + ": " +
                       violations.front());
    }
    rec.matched = audited.outcome.matched;
    rec.opt = opt;
    rec.ratio = ratio(rec.matched, opt);
    rec.passes = audited.audit.passes_used;
    rec.peak_edges = audited.audit.peak_retained_edges;
    if (spec.record_time) {
      rec.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return rec;
  };

  const std::size_t workers = std::min(spec.threads, spec.trials);
  if (workers <= 1) {
    for (std::size_t i = 0; i < spec.trials; ++i) {
      result.trials[i] = run_trial(i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(spec.trials);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < spec.trials; i = next++) {
            try {
              result.trials[i] = run_trial(i);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
    }
    // Report the first failing trial in index order.
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  result.aggregate = aggregate(result.trials);
  return result;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& t : result.trials) {
    out << t.algorithm << ',' << t.graph << ',';
    if (t.order_seed) out << *t.order_seed;
    out << ',';
    if (t.sample_seed) out << *t.sample_seed;
    out << ',' << t.matched << ',' << t.opt << ',' << format_double(t.ratio)
        << ',' << t.passes << ',' << t.peak_edges << ',' << format_double(t.ms)
        << '\n';
  }
  const Aggregate& a = result.aggregate;
  out << result.algorithm << ":aggregate," << result.graph_id << ",n="
      << a.trials << ",," << format_double(a.mean_matched) << ','
      << result.opt << ',' << format_double(a.mean_ratio)
      << ",sd=" << format_double(a.stddev_ratio)
      << ",min=" << format_double(a.min_ratio)
      << ",max=" << format_double(a.max_ratio) << '\n';
  return out.str();
}

}  // namespace semistream::harness
