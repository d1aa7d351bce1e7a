#include "implicit_net/projection.hpp"

#include <algorithm>
#include <stdexcept>

namespace implicit_net {

ProjectionAlgorithm parse_algorithm(std::string_view name) {
  if (name == "exhaustive") return ProjectionAlgorithm::kExhaustive;
  if (name == "clique") return ProjectionAlgorithm::kCliqueAddition;
  if (name == "matmul") return ProjectionAlgorithm::kMatrixProduct;
  throw std::invalid_argument("unknown projection algorithm '" + std::string(name) +
                              "' (expected exhaustive, clique or matmul)");
}

std::string_view algorithm_name(ProjectionAlgorithm algorithm) {
  switch (algorithm) {
    case ProjectionAlgorithm::kExhaustive: return "exhaustive";
    case ProjectionAlgorithm::kCliqueAddition: return "clique";
    case ProjectionAlgorithm::kMatrixProduct: return "matmul";
  }
  return "unknown";
}

std::uint32_t CountMatrix::at(UserIndex x, UserIndex y) const {
  auto entries = row(x);
  auto it = std::lower_bound(entries.begin(), entries.end(), y,
                             [](const Entry& e, UserIndex col) { return e.column < col; });
  return (it != entries.end() && it->column == y) ? it->count : 0;
}

namespace {

bool share_item(std::span<const ItemIndex> a, std::span<const ItemIndex> b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

UserNetwork project_exhaustive(const BipartiteRatingGraph& g) {
  const auto n1 = static_cast<UserIndex>(g.num_users());
  std::vector<std::vector<UserIndex>> adjacency(n1);
  // x ascending in the outer loop and y ascending in the inner loop leave
  // every list sorted without a final pass.
  for (UserIndex x = 0; x < n1; ++x) {
    auto items_x = g.items_of(x);
    if (items_x.empty()) continue;
    for (UserIndex y = x + 1; y < n1; ++y) {
      if (share_item(items_x, g.items_of(y))) {
        adjacency[x].push_back(y);
        adjacency[y].push_back(x);
      }
    }
  }
  return UserNetwork::from_sorted_lists(std::move(adjacency));
}

UserNetwork project_clique_addition(const BipartiteRatingGraph& g) {
  NetworkBuilder builder(g.num_users());
  for (ItemIndex i = 0; i < g.num_items(); ++i) {
    auto raters = g.users_of(i);
    if (raters.size() > 1) add_clique(builder, raters);
  }
  return std::move(builder).finish();
}

CountMatrix two_path_counts(const BipartiteRatingGraph& g) {
  const std::size_t n1 = g.num_users();
  std::vector<std::size_t> offsets(n1 + 1, 0);
  std::vector<CountMatrix::Entry> entries;
  std::vector<std::uint32_t> accumulator(n1, 0);
  std::vector<UserIndex> touched;

  for (UserIndex x = 0; x < n1; ++x) {
    for (ItemIndex i : g.items_of(x)) {
      for (UserIndex y : g.users_of(i)) {
        if (accumulator[y]++ == 0) touched.push_back(y);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (UserIndex y : touched) {
      entries.push_back({y, accumulator[y]});
      accumulator[y] = 0;
    }
    touched.clear();
    offsets[x + 1] = entries.size();
  }
  return CountMatrix(std::move(offsets), std::move(entries));
}

UserNetwork threshold_counts(const CountMatrix& counts) {
  const std::size_t n1 = counts.num_rows();
  std::vector<std::vector<UserIndex>> adjacency(n1);
  for (UserIndex x = 0; x < n1; ++x) {
    auto row = counts.row(x);
    auto& list = adjacency[x];
    list.reserve(row.size());
    for (const auto& [y, count] : row) {
      if (y != x && count >= 1) list.push_back(y);
    }
  }
  return UserNetwork::from_sorted_lists(std::move(adjacency));
}

UserNetwork project_matmul(const BipartiteRatingGraph& g) {
  return threshold_counts(two_path_counts(g));
}

UserNetwork project(const BipartiteRatingGraph& g, ProjectionAlgorithm algorithm) {
  switch (algorithm) {
    case ProjectionAlgorithm::kExhaustive: return project_exhaustive(g);
    case ProjectionAlgorithm::kCliqueAddition: return project_clique_addition(g);
    case ProjectionAlgorithm::kMatrixProduct: return project_matmul(g);
  }
  throw std::invalid_argument("unknown projection algorithm");
}

}  // namespace implicit_net
