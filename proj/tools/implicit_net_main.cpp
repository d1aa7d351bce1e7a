// implicit-net: build implicit user networks from rating data, find their
// connected components, verify results against brute-force oracles and run
// the fraction-sweep benchmark.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "implicit_net/bench.hpp"
#include "implicit_net/bipartite.hpp"
#include "implicit_net/connectivity.hpp"
#include "implicit_net/oracle.hpp"
#include "implicit_net/output.hpp"
#include "implicit_net/projection.hpp"
#include "implicit_net/synthetic.hpp"

namespace {

using namespace implicit_net;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerify = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<RatingTriple> load_triples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return parse_triples(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

BipartiteRatingGraph load_graph(const std::string& path) {
  auto triples = load_triples(path);
  return BipartiteRatingGraph::from_triples(triples);
}

// Writes to the file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw IoError("write failed");
    }
  }

 private:
  std::ofstream file_;
};

template <class T, class Parse>
T parse_or_usage(const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct CommonArgs {
  std::string input;
  std::string algorithm = "clique";
  std::string mode = "sequential";
  std::optional<std::uint64_t> seed;
  std::string output;
  bool summary = false;
};

int cmd_project(const CommonArgs& args) {
  auto algorithm = parse_or_usage<ProjectionAlgorithm>(args.algorithm, parse_algorithm);
  auto g = load_graph(args.input);
  auto start = std::chrono::steady_clock::now();
  UserNetwork net = project(g, algorithm);
  double ms = elapsed_ms(start);

  Sink sink(args.output);
  write_edge_list(sink.stream(), net, g.user_labels());
  sink.close();
  std::fprintf(stderr, "n1=%zu n2=%zu m=%zu m_prime=%zu max_item_degree=%zu algorithm=%s wall_time_ms=%.3f\n",
               g.num_users(), g.num_items(), g.num_edges(), net.num_edges(), max_item_degree(g),
               std::string(algorithm_name(algorithm)).c_str(), ms);
  return kExitOk;
}

int cmd_components(const CommonArgs& args) {
  auto mode = parse_or_usage<DesignMode>(args.mode, parse_mode);
  auto algorithm = parse_or_usage<ProjectionAlgorithm>(args.algorithm, parse_algorithm);
  auto g = load_graph(args.input);

  auto start = std::chrono::steady_clock::now();
  ComponentSet cs;
  std::size_t edges = 0;
  if (mode == DesignMode::kSequential) {
    auto r = design_sequential(g, algorithm);
    edges = r.network.num_edges();
    cs = std::move(r.components);
  } else {
    PickPolicy policy = args.seed ? PickPolicy::uniform_random(*args.seed) : PickPolicy::lowest_index();
    auto r = design_concurrent(g, policy);
    edges = r.network.num_edges();
    cs = std::move(r.components);
  }
  double ms = elapsed_ms(start);

  ComponentSummary summary = summarize(cs, g.num_users());
  if (args.summary) {
    write_summary(std::cout, summary);
    if (!args.output.empty()) {
      Sink sink(args.output);
      write_components(sink.stream(), cs, g.user_labels());
      sink.close();
    }
  } else {
    Sink sink(args.output);
    write_components(sink.stream(), cs, g.user_labels());
    sink.close();
    write_summary(std::cerr, summary);
  }
  std::fprintf(stderr, "mode=%s m_prime=%zu wall_time_ms=%.3f\n", std::string(mode_name(mode)).c_str(), edges, ms);
  return kExitOk;
}

int cmd_stats(const CommonArgs& args) {
  auto g = load_graph(args.input);
  Sink sink(args.output);
  write_stats(sink.stream(), dataset_stats(g));
  sink.close();
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> algorithms{"exhaustive", "clique", "matmul"};
  std::size_t max_users = 2000;
  bool no_size_limit = false;
  bool key_value = false;
  std::size_t seeds = 5;
};

int cmd_verify(const CommonArgs& args, const VerifyArgs& vargs) {
  std::vector<ProjectionAlgorithm> algorithms;
  for (const auto& name : vargs.algorithms)
    algorithms.push_back(parse_or_usage<ProjectionAlgorithm>(name, parse_algorithm));
  auto g = load_graph(args.input);
  OracleOptions options{vargs.max_users, vargs.no_size_limit};

  auto prefixed = [](VerificationReport r, const std::string& prefix) {
    for (auto& c : r.checks) c.name = prefix + "." + c.name;
    return r;
  };

  VerificationReport report;
  try {
    report.merge(prefixed(verify_counts(g, two_path_counts(g), options), "matmul"));
    for (auto algorithm : algorithms) {
      std::string name(algorithm_name(algorithm));
      auto seq = design_sequential(g, algorithm);
      report.merge(prefixed(verify_projection(g, seq.network, options), name));
      report.merge(prefixed(verify_components(seq.network, seq.components, g.user_labels()), name + ".sequential"));
    }
    auto reference = design_sequential(g);
    for (std::size_t s = 0; s <= vargs.seeds; ++s) {
      PickPolicy policy = s == 0 ? PickPolicy::lowest_index() : PickPolicy::uniform_random(args.seed.value_or(0) + s);
      auto conc = design_concurrent(g, policy);
      std::string prefix = "concurrent.seed" + std::to_string(s);
      report.merge(prefixed(verify_components(conc.network, conc.components, g.user_labels()), prefix));
      report.add(prefix + ".matches_sequential",
                 conc.network == reference.network && conc.components == reference.components,
                 "network or partition differs from sequential design");
    }
  } catch (const SizeLimitError& e) {
    throw UsageError(std::string(e.what()) + " (use --no-size-limit)");
  }
  // Counterexamples of passing checks are meaningless; drop them.
  for (auto& c : report.checks)
    if (c.passed) c.counterexample.clear();

  std::cout << (vargs.key_value ? report.to_key_value() : report.to_text());
  return report.overall() ? kExitOk : kExitVerify;
}

struct BenchArgs {
  std::vector<std::string> algorithms{"exhaustive", "clique", "matmul"};
  std::vector<std::string> modes{"sequential", "concurrent"};
  std::size_t denominator = 5;
  std::size_t reps = 3;
  std::string csv;
  std::string synthetic;
  std::string dataset;
};

int cmd_bench(const CommonArgs& args, const BenchArgs& bargs) {
  SweepOptions options;
  for (const auto& name : bargs.algorithms)
    options.algorithms.push_back(parse_or_usage<ProjectionAlgorithm>(name, parse_algorithm));
  for (const auto& name : bargs.modes) options.modes.push_back(parse_or_usage<DesignMode>(name, parse_mode));
  options.denominator = bargs.denominator;
  options.repetitions = bargs.reps;
  options.sequential_projection = parse_or_usage<ProjectionAlgorithm>(args.algorithm, parse_algorithm);
  options.seed = args.seed.value_or(0);
  if (options.denominator == 0) throw UsageError("--fractions must be at least 1");
  if (options.repetitions == 0) throw UsageError("--reps must be at least 1");

  std::vector<RatingTriple> triples;
  if (!bargs.synthetic.empty()) {
    if (!args.input.empty()) throw UsageError("give either an input file or --synthetic, not both");
    auto spec = parse_or_usage<SyntheticSpec>(bargs.synthetic, parse_synthetic_spec);
    triples = generate_synthetic(spec, args.seed.value_or(42));
    options.dataset = bargs.dataset.empty() ? "synthetic" : bargs.dataset;
  } else {
    if (args.input.empty()) throw UsageError("bench needs an input file or --synthetic");
    triples = load_triples(args.input);
    options.dataset = bargs.dataset.empty() ? std::filesystem::path(args.input).filename().string() : bargs.dataset;
  }

  auto records = run_sweep(triples, options);
  Sink sink(bargs.csv);
  write_bench_csv(sink.stream(), records);
  sink.close();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicit user network construction and connectivity from user-item ratings",
               "implicit-net"};
  app.require_subcommand(1);

  CommonArgs common;
  VerifyArgs vargs;
  BenchArgs bargs;

  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("input", common.input, "Rating file: <user> <item> [weight] [timestamp] per line");
    if (required) opt->required();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for random user picks (concurrent mode) and synthetic data");
  };

  auto* project_cmd = app.add_subcommand("project", "Write the implicit user network as an edge list");
  add_input(project_cmd, true);
  project_cmd->add_option("--algorithm", common.algorithm, "exhaustive | clique | matmul")->capture_default_str();
  project_cmd->add_option("--output", common.output, "Edge list path (default: stdout)");

  auto* components_cmd = app.add_subcommand("components", "Write the connected components of the network");
  add_input(components_cmd, true);
  components_cmd->add_option("--mode", common.mode, "sequential | concurrent")->capture_default_str();
  components_cmd->add_option("--algorithm", common.algorithm, "Projection used by sequential mode")
      ->capture_default_str();
  add_seed(components_cmd);
  components_cmd->add_option("--output", common.output, "Components path (default: stdout)");
  components_cmd->add_flag("--summary", common.summary, "Print k, the five largest sizes and the giant fraction");

  auto* verify_cmd = app.add_subcommand("verify", "Check every algorithm against the brute-force oracles");
  add_input(verify_cmd, true);
  verify_cmd->add_option("--algorithm", vargs.algorithms, "Algorithms to verify")->delimiter(',')->capture_default_str();
  add_seed(verify_cmd);
  verify_cmd->add_option("--seeds", vargs.seeds, "Random pick seeds tried for the concurrent design")->capture_default_str();
  verify_cmd->add_option("--max-users", vargs.max_users, "User limit for quadratic checks")->capture_default_str();
  verify_cmd->add_flag("--no-size-limit", vargs.no_size_limit, "Run quadratic checks regardless of size");
  verify_cmd->add_flag("--kv", vargs.key_value, "Machine-readable check=... lines");

  auto* bench_cmd = app.add_subcommand("bench", "Fraction-sweep benchmark writing timing CSV");
  add_input(bench_cmd, false);
  bench_cmd->add_option("--algorithm", bargs.algorithms, "Projection algorithms to time (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--mode", bargs.modes, "Design modes to time (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--sequential-projection", common.algorithm, "Projection used by sequential mode")
      ->capture_default_str();
  bench_cmd->add_option("--fractions", bargs.denominator, "Number of prefix fractions k/N")->capture_default_str();
  bench_cmd->add_option("--reps", bargs.reps, "Repetitions per measurement (median reported)")->capture_default_str();
  bench_cmd->add_option("--csv", bargs.csv, "CSV output path (default: stdout)");
  bench_cmd->add_option("--synthetic", bargs.synthetic, "Generate data instead of reading: n1,n2,m,skew");
  bench_cmd->add_option("--dataset", bargs.dataset, "Dataset name written to the CSV");
  add_seed(bench_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Print dataset statistics");
  add_input(stats_cmd, true);
  stats_cmd->add_option("--output", common.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*project_cmd) return cmd_project(common);
    if (*components_cmd) return cmd_components(common);
    if (*verify_cmd) return cmd_verify(common, vargs);
    if (*bench_cmd) return cmd_bench(common, bargs);
    if (*stats_cmd) return cmd_stats(common);
  } catch (const UsageError& e) {
    std::cerr << "implicit-net: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "implicit-net: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "implicit-net: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
