#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "implicit_net/bipartite.hpp"
#include "implicit_net/user_network.hpp"

namespace implicit_net {

enum class ProjectionAlgorithm { kExhaustive, kCliqueAddition, kMatrixProduct };

/// "exhaustive", "clique" or "matmul". Throws std::invalid_argument otherwise.
ProjectionAlgorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(ProjectionAlgorithm algorithm);

/// Sparse n_users x n_users matrix of co-rating counts, i.e. B * B^T for the
/// 0/1 bi-adjacency matrix B. Entry (x, y) is the number of length-2 paths
/// x - item - y; the diagonal holds user degrees. Rows are CSR with sorted
/// column indices and only nonzero entries stored.
class CountMatrix {
 public:
  struct Entry {
    UserIndex column;
    std::uint32_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  CountMatrix() = default;
  CountMatrix(std::vector<std::size_t> row_offsets, std::vector<Entry> entries)
      : offsets_(std::move(row_offsets)), entries_(std::move(entries)) {}

  std::size_t num_rows() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_nonzeros() const noexcept { return entries_.size(); }

  std::span<const Entry> row(UserIndex x) const {
    return {entries_.data() + offsets_[x], entries_.data() + offsets_[x + 1]};
  }
  /// Zero for entries not stored.
  std::uint32_t at(UserIndex x, UserIndex y) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Entry> entries_;
};

/// Checks every user pair for a shared item by merging the two sorted item
/// lists. Quadratic in the number of users.
UserNetwork project_exhaustive(const BipartiteRatingGraph& g);

/// Adds, for every item rated by more than one user, the clique on its raters.
UserNetwork project_clique_addition(const BipartiteRatingGraph& g);

/// Row-by-row sparse product of B with B^T (Gustavson's scheme, dense
/// accumulator per row).
CountMatrix two_path_counts(const BipartiteRatingGraph& g);

/// Thresholds two_path_counts(): zero diagonal, any positive count becomes 1.
UserNetwork project_matmul(const BipartiteRatingGraph& g);
UserNetwork threshold_counts(const CountMatrix& counts);

UserNetwork project(const BipartiteRatingGraph& g, ProjectionAlgorithm algorithm);

}  // namespace implicit_net
