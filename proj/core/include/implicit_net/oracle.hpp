#pragma once

// Brute-force reference checks. Nothing here calls into the projection or
// connectivity code; agreement between the two is the point.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "implicit_net/bipartite.hpp"
#include "implicit_net/connectivity.hpp"
#include "implicit_net/projection.hpp"
#include "implicit_net/user_network.hpp"

namespace implicit_net {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const;
  void add(std::string name, bool passed, std::string counterexample = {});
  /// Appends all checks of another report.
  void merge(const VerificationReport& other);

  std::string to_text() const;
  /// One `check=<name> pass=<bool> counterexample=<...>` line per check.
  std::string to_key_value() const;
};

/// Raised when a quadratic check is requested on a graph larger than the
/// configured user limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  std::size_t max_users = 2000;
  bool ignore_size_limit = false;
};

/// True iff some item was rated by both u and v. Scans every item and tests
/// membership of both endpoints. Throws std::invalid_argument for u == v or
/// an index out of range.
bool oracle_two_path(const BipartiteRatingGraph& g, UserIndex u, UserIndex v);

/// Dense user x item incidence bitmap answering the same question as
/// oracle_two_path with a word-parallel AND over all items. Used for the
/// all-pairs scans.
class IncidenceBitmap {
 public:
  explicit IncidenceBitmap(const BipartiteRatingGraph& g);

  bool rated(UserIndex u, ItemIndex i) const;
  bool share_item(UserIndex u, UserIndex v) const;
  std::size_t shared_items(UserIndex u, UserIndex v) const;

 private:
  std::span<const std::uint64_t> row(UserIndex u) const {
    return {words_.data() + u * stride_, stride_};
  }
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Checks a projected network against the rating data:
///   edge_criterion    edge present iff the pair co-rated an item (all pairs)
///   item_cliques      raters of every item are pairwise adjacent
///   symmetry          adjacency lists sorted, symmetric, loop free
///   degree_diagonal   2-paths from a user back to itself equal its degree
/// Throws std::invalid_argument if the user counts differ and SizeLimitError
/// past the size gate.
VerificationReport verify_projection(const BipartiteRatingGraph& g, const UserNetwork& net,
                                     const OracleOptions& options = {});

/// Checks every entry of a co-rating count matrix against the bitmap oracle,
/// including the diagonal against user degrees.
VerificationReport verify_counts(const BipartiteRatingGraph& g, const CountMatrix& counts,
                                 const OracleOptions& options = {});

/// Checks a component partition: disjoint, exhaustive, no edge between two
/// components, each component connected. Violations are reported as failed
/// checks. Labels, when given, are used in counterexamples.
VerificationReport verify_components(const UserNetwork& net, const ComponentSet& cs,
                                     std::span<const std::string> labels = {});

}  // namespace implicit_net
