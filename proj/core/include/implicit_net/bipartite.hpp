#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace implicit_net {

using UserIndex = std::uint32_t;
using ItemIndex = std::uint32_t;

/// One line of rating input. Only the (user, item) pair matters downstream;
/// weight and timestamp are kept for completeness and never consulted.
struct RatingTriple {
  std::string user;
  std::string item;
  std::optional<double> weight;
  std::optional<std::int64_t> timestamp;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// User-item rating data as a binary bipartite graph. Both sides are stored
/// in CSR form with sorted, duplicate-free neighbor lists, so N(u) and N(i)
/// are available as contiguous spans.
class BipartiteRatingGraph {
 public:
  BipartiteRatingGraph() = default;

  std::size_t num_users() const noexcept { return user_labels_.size(); }
  std::size_t num_items() const noexcept { return item_labels_.size(); }
  std::size_t num_edges() const noexcept { return user_items_.size(); }

  /// Number of input ratings that repeated an already seen (user, item) pair.
  std::size_t duplicates_collapsed() const noexcept { return duplicates_; }
  /// Ratings read before binarization; num_edges() + duplicates_collapsed().
  std::size_t raw_ratings() const noexcept { return num_edges() + duplicates_; }

  std::span<const ItemIndex> items_of(UserIndex u) const {
    return {user_items_.data() + user_offsets_[u], user_items_.data() + user_offsets_[u + 1]};
  }
  std::span<const UserIndex> users_of(ItemIndex i) const {
    return {item_users_.data() + item_offsets_[i], item_users_.data() + item_offsets_[i + 1]};
  }
  std::size_t user_degree(UserIndex u) const { return user_offsets_[u + 1] - user_offsets_[u]; }
  std::size_t item_degree(ItemIndex i) const { return item_offsets_[i + 1] - item_offsets_[i]; }

  const std::string& user_label(UserIndex u) const { return user_labels_[u]; }
  const std::string& item_label(ItemIndex i) const { return item_labels_[i]; }
  const std::vector<std::string>& user_labels() const noexcept { return user_labels_; }
  const std::vector<std::string>& item_labels() const noexcept { return item_labels_; }

  /// Builds the graph from labelled pairs. Indices are assigned in order of
  /// first occurrence; repeated pairs collapse into one edge.
  static BipartiteRatingGraph from_triples(std::span<const RatingTriple> triples);

  /// Builds the graph from already-indexed pairs (used by generators and
  /// tests). Labels default to "u<index>" / "i<index>".
  static BipartiteRatingGraph from_index_pairs(
      std::size_t n_users, std::size_t n_items,
      std::span<const std::pair<UserIndex, ItemIndex>> pairs);

 private:
  void build_csr(std::vector<std::pair<UserIndex, ItemIndex>> pairs);

  std::vector<std::string> user_labels_;
  std::vector<std::string> item_labels_;
  std::vector<std::size_t> user_offsets_{0};
  std::vector<ItemIndex> user_items_;
  std::vector<std::size_t> item_offsets_{0};
  std::vector<UserIndex> item_users_;
  std::size_t duplicates_ = 0;
};

/// Reads whitespace-separated `<user> <item> [weight] [timestamp] ...` lines.
/// Blank lines and lines starting with '%' or '#' are skipped.
/// Throws ParseError on a line with fewer than two fields or a non-numeric
/// weight/timestamp.
std::vector<RatingTriple> parse_triples(std::istream& in);

BipartiteRatingGraph parse_ratings(std::istream& in);

/// Graph over the first floor(numerator * size / denominator) triples.
/// Throws std::invalid_argument unless 1 <= numerator <= denominator.
BipartiteRatingGraph slice_fraction(std::span<const RatingTriple> triples,
                                    std::size_t numerator, std::size_t denominator);

/// Length of the prefix slice_fraction() uses.
std::size_t slice_length(std::size_t total, std::size_t numerator, std::size_t denominator);

std::size_t max_item_degree(const BipartiteRatingGraph& g);

}  // namespace implicit_net
