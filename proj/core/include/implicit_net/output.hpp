#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "implicit_net/bipartite.hpp"
#include "implicit_net/connectivity.hpp"
#include "implicit_net/user_network.hpp"

namespace implicit_net {

/// `<label> <label>` per edge, lower index first, lines in (u, v) index order.
void write_edge_list(std::ostream& out, const UserNetwork& net, std::span<const std::string> labels);

/// One component per line, labels separated by single spaces.
void write_components(std::ostream& out, const ComponentSet& cs, std::span<const std::string> labels);

struct ComponentSummary {
  std::size_t count = 0;
  std::vector<std::size_t> largest;  // up to five sizes, descending
  double giant_fraction = 0.0;       // largest size / users, 0 for no users
};

ComponentSummary summarize(const ComponentSet& cs, std::size_t n_users);
void write_summary(std::ostream& out, const ComponentSummary& summary);

struct DatasetStats {
  std::size_t users = 0;
  std::size_t items = 0;
  std::size_t ratings = 0;     // distinct (user, item) pairs
  std::size_t raw_ratings = 0; // input lines before collapsing duplicates
  std::size_t duplicates = 0;
  double density = 0.0;        // ratings / (users * items)
  double raw_density = 0.0;    // raw_ratings / (users * items)
  std::size_t max_item_degree = 0;
};

DatasetStats dataset_stats(const BipartiteRatingGraph& g);
void write_stats(std::ostream& out, const DatasetStats& stats);

}  // namespace implicit_net
