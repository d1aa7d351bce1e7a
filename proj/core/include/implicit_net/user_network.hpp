#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "implicit_net/bipartite.hpp"

namespace implicit_net {

/// The implicit user network: undirected, unweighted, no self loops.
/// Every user of the source rating data is a vertex, including users that
/// end up isolated. Neighbor lists are sorted ascending.
class UserNetwork {
 public:
  UserNetwork() = default;
  explicit UserNetwork(std::size_t n_users) : adjacency_(n_users) {}

  /// Takes ownership of per-user neighbor lists. Lists must already be
  /// sorted, duplicate free, symmetric and loop free; see is_canonical().
  static UserNetwork from_sorted_lists(std::vector<std::vector<UserIndex>> adjacency);

  std::size_t num_users() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const UserIndex> neighbors(UserIndex u) const { return adjacency_[u]; }
  std::size_t degree(UserIndex u) const { return adjacency_[u].size(); }

  /// Binary search in the sorted neighbor list of u.
  bool has_edge(UserIndex u, UserIndex v) const;

  /// Checks sortedness, symmetry, irreflexivity and the edge count.
  bool is_canonical() const;

  friend bool operator==(const UserNetwork&, const UserNetwork&) = default;

 private:
  std::vector<std::vector<UserIndex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Mutable network under construction. Edge insertion is idempotent: the
/// membership test is a dense bit matrix when n_users is small enough,
/// otherwise a hash set of packed pairs. In dense mode the adjacency lists
/// are only materialized by finish().
class NetworkBuilder {
 public:
  explicit NetworkBuilder(std::size_t n_users);

  std::size_t num_users() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  /// Returns true when the edge was not present before. Self loops are ignored.
  bool add_edge(UserIndex u, UserIndex v);
  bool has_edge(UserIndex u, UserIndex v) const;

  /// Sorts the neighbor lists and hands them to a UserNetwork.
  UserNetwork finish() &&;

  /// Largest user count that gets the dense bit matrix.
  static constexpr std::size_t kDenseLimit = 32768;

 private:
  std::size_t bit_index(UserIndex lo, UserIndex hi) const {
    return static_cast<std::size_t>(lo) * adjacency_.size() + hi;
  }

  std::vector<std::vector<UserIndex>> adjacency_;
  struct FreeDeleter {
    void operator()(std::uint64_t* p) const noexcept { std::free(p); }
  };

  // calloc'd so untouched pages of a large, sparse matrix are never faulted in.
  std::unique_ptr<std::uint64_t[], FreeDeleter> bits_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> upper_degree_;
  std::unordered_set<std::uint64_t> sparse_;
  bool dense_ = true;
  std::size_t num_edges_ = 0;
};

/// Inserts every unordered pair of members as an edge. A member set of size
/// zero or one changes nothing.
void add_clique(NetworkBuilder& net, std::span<const UserIndex> members);

}  // namespace implicit_net
