#include "corpus.hpp"

#include <random>
#include <sstream>

#include "implicit_net/user_network.hpp"

namespace implicit_net::testing {

std::vector<std::string> toy_lines() {
  return {"u1 i3", "u2 i1", "u3 i2", "u3 i3", "u4 i1", "u5 i2", "u5 i3"};
}

std::string toy_text() {
  std::string text;
  for (const auto& line : toy_lines()) text += line + "\n";
  return text;
}

BipartiteRatingGraph toy_graph() {
  std::istringstream in(toy_text());
  return parse_ratings(in);
}

BipartiteRatingGraph random_graph(std::uint64_t seed, std::size_t max_side, double max_density) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n1 = side(rng);
  const std::size_t n2 = side(rng);
  const double density = max_density * unit(rng);
  std::vector<std::pair<UserIndex, ItemIndex>> pairs;
  for (UserIndex u = 0; u < n1; ++u) {
    for (ItemIndex i = 0; i < n2; ++i) {
      if (unit(rng) < density) pairs.emplace_back(u, i);
    }
  }
  return BipartiteRatingGraph::from_index_pairs(n1, n2, pairs);
}

std::vector<NamedGraph> adversarial_graphs() {
  using Pairs = std::vector<std::pair<UserIndex, ItemIndex>>;
  std::vector<NamedGraph> out;
  out.push_back({"empty", BipartiteRatingGraph{}});
  out.push_back({"isolated_users", BipartiteRatingGraph::from_index_pairs(4, 0, Pairs{})});

  Pairs popular;
  for (UserIndex u = 0; u < 30; ++u) popular.emplace_back(u, 0);
  out.push_back({"single_popular_item", BipartiteRatingGraph::from_index_pairs(30, 1, popular)});

  Pairs stars;
  for (ItemIndex i = 0; i < 8; ++i)
    for (UserIndex k = 0; k < 4; ++k) stars.emplace_back(i * 4 + k, i);
  out.push_back({"disjoint_stars", BipartiteRatingGraph::from_index_pairs(32, 8, stars)});

  Pairs twins{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  out.push_back({"identical_rater_sets", BipartiteRatingGraph::from_index_pairs(2, 2, twins)});

  Pairs chain;
  for (ItemIndex i = 0; i < 20; ++i) {
    chain.emplace_back(i, i);
    chain.emplace_back(i + 1, i);
  }
  out.push_back({"item_chain", BipartiteRatingGraph::from_index_pairs(21, 20, chain)});

  Pairs singles;
  for (UserIndex u = 0; u < 10; ++u) singles.emplace_back(u, u);
  out.push_back({"one_rater_items", BipartiteRatingGraph::from_index_pairs(10, 10, singles)});

  Pairs mixed{{1, 0}, {2, 0}, {4, 1}, {5, 1}, {5, 2}, {7, 2}};
  out.push_back({"isolated_among_active", BipartiteRatingGraph::from_index_pairs(9, 4, mixed)});
  return out;
}

std::vector<NamedGraph> corpus(std::size_t count, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back({"random_" + std::to_string(k), random_graph(seed + k)});
  }
  for (auto& g : adversarial_graphs()) out.push_back(std::move(g));
  out.push_back({"toy", toy_graph()});
  return out;
}

std::set<std::set<UserIndex>> as_set_of_sets(const ComponentSet& cs) {
  std::set<std::set<UserIndex>> out;
  for (const auto& c : cs.components) out.emplace(c.begin(), c.end());
  return out;
}

std::vector<std::pair<UserIndex, UserIndex>> edge_set(const UserNetwork& net) {
  std::vector<std::pair<UserIndex, UserIndex>> edges;
  for (UserIndex u = 0; u < net.num_users(); ++u)
    for (UserIndex v : net.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::vector<std::uint32_t>> brute_force_two_paths(
    std::size_t n_users, const std::vector<std::pair<UserIndex, ItemIndex>>& pairs) {
  std::vector<std::vector<std::uint32_t>> counts(n_users, std::vector<std::uint32_t>(n_users, 0));
  for (const auto& [x, i] : pairs)
    for (const auto& [y, j] : pairs)
      if (i == j) ++counts[x][y];
  return counts;
}

std::vector<std::pair<UserIndex, ItemIndex>> pairs_of(const BipartiteRatingGraph& g) {
  std::vector<std::pair<UserIndex, ItemIndex>> pairs;
  for (UserIndex u = 0; u < g.num_users(); ++u)
    for (ItemIndex i : g.items_of(u)) pairs.emplace_back(u, i);
  return pairs;
}

}  // namespace implicit_net::testing
