#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "implicit_net/bipartite.hpp"

namespace implicit_net {

/// Parameters of a synthetic rating set: n_users x n_items with exactly
/// `ratings` distinct pairs. Item popularity follows a power law with
/// exponent `skew` (item k has weight (k + 1)^-skew); users are uniform.
struct SyntheticSpec {
  std::size_t users = 0;
  std::size_t items = 0;
  std::size_t ratings = 0;
  double skew = 1.0;
};

/// Parses "n1,n2,m,skew". Throws std::invalid_argument on malformed or
/// infeasible specs (m > n1 * n2, m > 0 with an empty side, negative skew).
SyntheticSpec parse_synthetic_spec(std::string_view text);

/// Distinct ratings in random order, labelled "u<k>" / "i<k>".
/// Deterministic for a given seed.
std::vector<RatingTriple> generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

/// One item rated by every one of `users` users plus `singleton_items`
/// items each rated by a single user (round robin). A sparse rating set whose
/// projection holds a complete graph on all users.
std::vector<RatingTriple> generate_star_heavy(std::size_t users, std::size_t singleton_items);

}  // namespace implicit_net
