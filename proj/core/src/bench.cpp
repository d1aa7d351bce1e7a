#include "implicit_net/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>

namespace implicit_net {

DesignMode parse_mode(std::string_view name) {
  if (name == "sequential") return DesignMode::kSequential;
  if (name == "concurrent") return DesignMode::kConcurrent;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected sequential or concurrent)");
}

std::string_view mode_name(DesignMode mode) {
  return mode == DesignMode::kSequential ? "sequential" : "concurrent";
}

double median(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

namespace {

struct Outcome {
  std::size_t edges = 0;
  std::size_t components = 0;
};

struct Run {
  std::string name;
  std::function<Outcome(const BipartiteRatingGraph&)> body;
  // Component count for projection-only runs is computed outside the timer.
  bool count_components_after = false;
};

template <class F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::vector<BenchRecord> run_sweep(std::span<const RatingTriple> triples, const SweepOptions& options) {
  if (options.denominator == 0) throw std::invalid_argument("fraction denominator must be positive");
  if (options.repetitions == 0) throw std::invalid_argument("repetitions must be positive");

  std::vector<Run> runs;
  for (auto algorithm : options.algorithms) {
    runs.push_back({std::string(algorithm_name(algorithm)),
                    [algorithm](const BipartiteRatingGraph& g) {
                      UserNetwork net = project(g, algorithm);
                      return Outcome{net.num_edges(), 0};
                    },
                    true});
  }
  for (auto mode : options.modes) {
    if (mode == DesignMode::kSequential) {
      auto projection = options.sequential_projection;
      runs.push_back({"sequential",
                      [projection](const BipartiteRatingGraph& g) {
                        auto r = design_sequential(g, projection);
                        return Outcome{r.network.num_edges(), r.components.size()};
                      },
                      false});
    } else {
      PickPolicy policy = options.seed == 0 ? PickPolicy::lowest_index() : PickPolicy::uniform_random(options.seed);
      runs.push_back({"concurrent",
                      [policy](const BipartiteRatingGraph& g) {
                        auto r = design_concurrent(g, policy);
                        return Outcome{r.network.num_edges(), r.components.size()};
                      },
                      false});
    }
  }

  std::vector<BenchRecord> records;
  for (std::size_t k = 1; k <= options.denominator; ++k) {
    BipartiteRatingGraph g = slice_fraction(triples, k, options.denominator);
    std::vector<BenchRecord> slice_records(runs.size());
    std::vector<Outcome> outcomes(runs.size());
    // Repetitions are interleaved across runs so drift affects all alike.
    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
      for (std::size_t r = 0; r < runs.size(); ++r) {
        double ms = time_ms([&] { outcomes[r] = runs[r].body(g); });
        slice_records[r].samples_ms.push_back(ms);
      }
    }
    // Every projection yields the same network, so one component count serves
    // all projection-only rows.
    std::optional<std::size_t> projected_components;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      BenchRecord& rec = slice_records[r];
      rec.dataset = options.dataset;
      rec.numerator = k;
      rec.denominator = options.denominator;
      rec.algorithm = runs[r].name;
      rec.n_users = g.num_users();
      rec.n_items = g.num_items();
      rec.n_ratings = g.num_edges();
      rec.n_edges = outcomes[r].edges;
      rec.n_components = outcomes[r].components;
      if (runs[r].count_components_after) {
        if (!projected_components) projected_components = bfs_components(project_clique_addition(g)).size();
        rec.n_components = *projected_components;
      }
      rec.wall_time_ms = median(rec.samples_ms);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records, bool with_header) {
  if (with_header) out << kBenchCsvHeader << '\n';
  char time_buf[64];
  for (const auto& r : records) {
    std::snprintf(time_buf, sizeof time_buf, "%.3f", r.wall_time_ms);
    out << r.dataset << ',' << r.numerator << '/' << r.denominator << ',' << r.algorithm << ','
        << r.n_users << ',' << r.n_items << ',' << r.n_ratings << ',' << r.n_edges << ','
        << r.n_components << ',' << time_buf << '\n';
  }
}

}  // namespace implicit_net
