#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "implicit_net/bipartite.hpp"
#include "implicit_net/projection.hpp"
#include "implicit_net/user_network.hpp"

namespace implicit_net {

/// Partition of the users into connected components. Each component is
/// sorted, and components are ordered by their smallest member.
struct ComponentSet {
  std::vector<std::vector<UserIndex>> components;

  std::size_t size() const noexcept { return components.size(); }
  /// Component id per user; users absent from every component map to -1.
  std::vector<std::int64_t> labels(std::size_t n_users) const;

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;
};

/// Sorts members and orders components by smallest member.
void canonicalize(ComponentSet& cs);

ComponentSet bfs_components(const UserNetwork& net);

struct DesignResult {
  UserNetwork network;
  ComponentSet components;
};

/// Projects with the chosen algorithm, then runs BFS over the result.
DesignResult design_sequential(const BipartiteRatingGraph& g,
                               ProjectionAlgorithm algorithm = ProjectionAlgorithm::kCliqueAddition);

/// How the concurrent design picks the next seed user from the users not yet
/// placed in a component.
class PickPolicy {
 public:
  enum class Kind { kLowestIndex, kUniformRandom };

  static PickPolicy lowest_index() { return PickPolicy(Kind::kLowestIndex, 0); }
  static PickPolicy uniform_random(std::uint64_t seed) { return PickPolicy(Kind::kUniformRandom, seed); }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  PickPolicy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

/// Instrumentation collected by design_concurrent.
struct ConcurrentTrace {
  /// One per iteration of the outer loop (a new component is opened).
  std::size_t pick_events = 0;
  /// Picks that landed on a user with no ratings; each yields a singleton.
  std::size_t isolated_picks = 0;
  /// Items popped from the worklist.
  std::size_t item_pops = 0;
  /// Add-clique invocations per item.
  std::vector<std::uint32_t> add_clique_calls;
  /// Final per-item "clique added" flags.
  std::vector<bool> item_status;
};

struct ConcurrentResult {
  UserNetwork network;
  ComponentSet components;
  ConcurrentTrace trace;
};

/// Builds the network and its components in one pass: each seed user opens
/// a component that grows by adding item cliques reachable through shared
/// raters, so every clique is inserted exactly once. Users without ratings
/// become singleton components.
ConcurrentResult design_concurrent(const BipartiteRatingGraph& g,
                                   PickPolicy policy = PickPolicy::lowest_index());

}  // namespace implicit_net
