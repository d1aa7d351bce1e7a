#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "implicit_net/bipartite.hpp"
#include "implicit_net/connectivity.hpp"
#include "implicit_net/projection.hpp"

namespace implicit_net {

enum class DesignMode { kSequential, kConcurrent };

DesignMode parse_mode(std::string_view name);
std::string_view mode_name(DesignMode mode);

/// One measured (fraction, algorithm) run.
struct BenchRecord {
  std::string dataset;
  std::size_t numerator = 0;
  std::size_t denominator = 1;
  std::string algorithm;
  std::size_t n_users = 0;
  std::size_t n_items = 0;
  std::size_t n_ratings = 0;
  std::size_t n_edges = 0;
  std::size_t n_components = 0;
  double wall_time_ms = 0.0;  // median over repetitions
  std::vector<double> samples_ms;
};

struct SweepOptions {
  std::string dataset = "dataset";
  std::vector<ProjectionAlgorithm> algorithms;
  std::vector<DesignMode> modes;
  std::size_t denominator = 5;
  std::size_t repetitions = 3;
  /// Projection used by the sequential mode.
  ProjectionAlgorithm sequential_projection = ProjectionAlgorithm::kCliqueAddition;
  /// Seed for the concurrent mode's pick policy; 0 keeps lowest-index picks.
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "dataset,fraction,algorithm,n_users,n_items,n_ratings,n_edges,n_components,wall_time_ms";

/// Runs every requested algorithm and mode on each prefix slice k/denominator,
/// k = 1..denominator. Only the projection / design call is timed; slicing
/// and graph construction are not.
std::vector<BenchRecord> run_sweep(std::span<const RatingTriple> triples, const SweepOptions& options);

double median(std::vector<double> samples);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records, bool with_header = true);

}  // namespace implicit_net
