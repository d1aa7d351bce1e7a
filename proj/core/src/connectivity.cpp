#include "implicit_net/connectivity.hpp"

#include <algorithm>
#include <random>

namespace implicit_net {

std::vector<std::int64_t> ComponentSet::labels(std::size_t n_users) const {
  std::vector<std::int64_t> label(n_users, -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (UserIndex u : components[c]) {
      if (u < n_users) label[u] = static_cast<std::int64_t>(c);
    }
  }
  return label;
}

void canonicalize(ComponentSet& cs) {
  for (auto& c : cs.components) std::sort(c.begin(), c.end());
  std::sort(cs.components.begin(), cs.components.end(),
            [](const auto& a, const auto& b) {
              if (a.empty() || b.empty()) return a.size() < b.size();
              return a.front() < b.front();
            });
}

ComponentSet bfs_components(const UserNetwork& net) {
  const std::size_t n = net.num_users();
  ComponentSet cs;
  std::vector<bool> visited(n, false);
  for (UserIndex start = 0; start < n; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    std::vector<UserIndex> component{start};
    // component doubles as the BFS queue
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (UserIndex v : net.neighbors(component[head])) {
        if (!visited[v]) {
          visited[v] = true;
          component.push_back(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    cs.components.push_back(std::move(component));
  }
  return cs;
}

DesignResult design_sequential(const BipartiteRatingGraph& g, ProjectionAlgorithm algorithm) {
  UserNetwork net = project(g, algorithm);
  ComponentSet cs = bfs_components(net);
  return {std::move(net), std::move(cs)};
}

namespace {

// The set U of users not yet assigned to a component. The lowest-index policy
// only walks a cursor over the removed flags; uniform sampling additionally
// keeps a position-indexed dense array for O(1) removal and O(1) draws.
class RemainingUsers {
 public:
  RemainingUsers(std::size_t n, bool sampling) : removed_(n, 0), left_(n), sampling_(sampling) {
    if (sampling_) {
      members_.resize(n);
      position_.resize(n);
      for (std::size_t u = 0; u < n; ++u) {
        members_[u] = static_cast<UserIndex>(u);
        position_[u] = static_cast<UserIndex>(u);
      }
    }
  }

  bool empty() const noexcept { return left_ == 0; }
  bool assigned(UserIndex u) const { return removed_[u] != 0; }

  void remove(UserIndex u) {
    if (removed_[u]) return;
    removed_[u] = 1;
    --left_;
    if (!sampling_) return;
    UserIndex pos = position_[u];
    UserIndex last = members_.back();
    members_[pos] = last;
    position_[last] = pos;
    members_.pop_back();
  }

  UserIndex lowest() {
    while (removed_[cursor_]) ++cursor_;
    return static_cast<UserIndex>(cursor_);
  }

  template <class Rng>
  UserIndex sample(Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, members_.size() - 1);
    return members_[pick(rng)];
  }

 private:
  std::vector<std::uint8_t> removed_;
  std::vector<UserIndex> members_;
  std::vector<UserIndex> position_;
  std::size_t left_;
  std::size_t cursor_ = 0;
  bool sampling_;
};

// Buckets users by component id in ascending user order, renumbering ids by
// smallest member. The result is canonical without any sorting.
ComponentSet group_by_component(const std::vector<std::uint32_t>& component_of, std::uint32_t count) {
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> rank(count, kUnseen);
  std::vector<std::size_t> sizes;
  sizes.reserve(count);
  for (std::uint32_t c : component_of) {
    if (rank[c] == kUnseen) {
      rank[c] = static_cast<std::uint32_t>(sizes.size());
      sizes.push_back(0);
    }
    ++sizes[rank[c]];
  }
  ComponentSet cs;
  cs.components.resize(sizes.size());
  for (std::size_t k = 0; k < sizes.size(); ++k) cs.components[k].reserve(sizes[k]);
  for (std::size_t u = 0; u < component_of.size(); ++u)
    cs.components[rank[component_of[u]]].push_back(static_cast<UserIndex>(u));
  return cs;
}

}  // namespace

ConcurrentResult design_concurrent(const BipartiteRatingGraph& g, PickPolicy policy) {
  const std::size_t n1 = g.num_users();
  const std::size_t n2 = g.num_items();

  NetworkBuilder builder(n1);
  ConcurrentTrace trace;
  trace.add_clique_calls.assign(n2, 0);

  std::vector<std::uint8_t> status(n2, 0);
  std::vector<std::uint8_t> queued(n2, 0);
  const bool lowest = policy.kind() == PickPolicy::Kind::kLowestIndex;
  RemainingUsers remaining(n1, !lowest);
  std::mt19937_64 rng(policy.seed());
  std::vector<std::uint32_t> component_of(n1);
  std::uint32_t opened = 0;
  // An item is queued at most once over the whole run, so a flat array with a
  // moving head serves as the FIFO worklist for every component.
  std::vector<ItemIndex> worklist;
  worklist.reserve(n2);
  std::size_t head = 0;

  auto enqueue_items_of = [&](UserIndex v) {
    for (ItemIndex p : g.items_of(v)) {
      if (!queued[p]) {
        queued[p] = 1;
        worklist.push_back(p);
      }
    }
  };

  while (!remaining.empty()) {
    UserIndex u = lowest ? remaining.lowest() : remaining.sample(rng);
    ++trace.pick_events;

    if (g.user_degree(u) == 0) {
      // Without this the seed would never leave U.
      ++trace.isolated_picks;
      remaining.remove(u);
      component_of[u] = opened++;
      continue;
    }

    const std::uint32_t j = opened++;
    enqueue_items_of(u);
    while (head < worklist.size()) {
      ItemIndex i = worklist[head++];
      ++trace.item_pops;
      if (status[i]) continue;

      auto raters = g.users_of(i);
      add_clique(builder, raters);
      ++trace.add_clique_calls[i];
      status[i] = 1;

      for (UserIndex v : raters) {
        // Every rater reached here belongs to the open component.
        if (remaining.assigned(v)) continue;
        component_of[v] = j;
        remaining.remove(v);
        // Items of users absorbed earlier are already queued or done, so
        // only newly absorbed users can contribute new items.
        enqueue_items_of(v);
      }
    }
  }

  trace.item_status.assign(status.begin(), status.end());
  return {std::move(builder).finish(), group_by_component(component_of, opened), std::move(trace)};
}

}  // namespace implicit_net
