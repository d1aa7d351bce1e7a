#include "implicit_net/synthetic.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace implicit_net {

namespace {

template <class T>
T parse_field(std::string_view text, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("synthetic spec: bad ") + what + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

SyntheticSpec parse_synthetic_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("synthetic spec must be n1,n2,m,skew");

  SyntheticSpec spec;
  spec.users = parse_field<std::size_t>(parts[0], "n1");
  spec.items = parse_field<std::size_t>(parts[1], "n2");
  spec.ratings = parse_field<std::size_t>(parts[2], "m");
  spec.skew = parse_field<double>(parts[3], "skew");
  if (!(spec.skew >= 0.0) || !std::isfinite(spec.skew))
    throw std::invalid_argument("synthetic spec: skew must be a finite non-negative number");
  if (spec.ratings > 0 && (spec.users == 0 || spec.items == 0))
    throw std::invalid_argument("synthetic spec: ratings need at least one user and one item");
  if (spec.users > 0 && spec.items > 0 && spec.users <= spec.ratings / spec.items &&
      spec.users * spec.items < spec.ratings)
    throw std::invalid_argument("synthetic spec: more ratings than user-item cells");
  return spec;
}

std::vector<RatingTriple> generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> weights(spec.items);
  for (std::size_t k = 0; k < spec.items; ++k) weights[k] = std::pow(static_cast<double>(k + 1), -spec.skew);
  std::vector<std::size_t> item_fill(spec.items, 0);

  std::discrete_distribution<std::size_t> pick_item(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> pick_user(0, spec.users ? spec.users - 1 : 0);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(spec.ratings * 2);

  std::vector<RatingTriple> triples;
  triples.reserve(spec.ratings);
  while (triples.size() < spec.ratings) {
    std::size_t item = pick_item(rng);
    if (item_fill[item] == spec.users) {
      // Saturated item: drop it from the distribution.
      weights[item] = 0.0;
      pick_item = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
      continue;
    }
    std::size_t user = pick_user(rng);
    std::uint64_t key = static_cast<std::uint64_t>(user) * spec.items + item;
    if (!taken.insert(key).second) continue;
    ++item_fill[item];
    triples.push_back({"u" + std::to_string(user), "i" + std::to_string(item), 1.0, std::nullopt});
  }
  return triples;
}

std::vector<RatingTriple> generate_star_heavy(std::size_t users, std::size_t singleton_items) {
  std::vector<RatingTriple> triples;
  triples.reserve(users + singleton_items);
  for (std::size_t u = 0; u < users; ++u)
    triples.push_back({"u" + std::to_string(u), "popular", std::nullopt, std::nullopt});
  for (std::size_t k = 0; k < singleton_items && users > 0; ++k)
    triples.push_back({"u" + std::to_string(k % users), "i" + std::to_string(k), std::nullopt, std::nullopt});
  return triples;
}

}  // namespace implicit_net
