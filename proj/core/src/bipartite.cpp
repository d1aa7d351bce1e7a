#include "implicit_net/bipartite.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>
#include <unordered_map>

namespace implicit_net {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <class T>
bool parse_number(std::string_view text, T& out) {
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// Index assignment in order of first appearance.
class LabelIndex {
 public:
  std::uint32_t intern(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string> release() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::string> labels_;
};

}  // namespace

void BipartiteRatingGraph::build_csr(std::vector<std::pair<UserIndex, ItemIndex>> pairs) {
  const std::size_t raw = pairs.size();
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  duplicates_ = raw - pairs.size();

  const std::size_t n1 = user_labels_.size();
  const std::size_t n2 = item_labels_.size();
  user_offsets_.assign(n1 + 1, 0);
  item_offsets_.assign(n2 + 1, 0);
  for (auto [u, i] : pairs) {
    ++user_offsets_[u + 1];
    ++item_offsets_[i + 1];
  }
  for (std::size_t u = 0; u < n1; ++u) user_offsets_[u + 1] += user_offsets_[u];
  for (std::size_t i = 0; i < n2; ++i) item_offsets_[i + 1] += item_offsets_[i];

  user_items_.resize(pairs.size());
  item_users_.resize(pairs.size());
  std::vector<std::size_t> item_fill(item_offsets_.begin(), item_offsets_.end() - 1);
  // pairs are sorted by (user, item): user rows come out sorted, and each
  // item column receives users in ascending order.
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [u, i] = pairs[k];
    user_items_[k] = i;
    item_users_[item_fill[i]++] = u;
  }
}

BipartiteRatingGraph BipartiteRatingGraph::from_triples(std::span<const RatingTriple> triples) {
  LabelIndex users;
  LabelIndex items;
  std::vector<std::pair<UserIndex, ItemIndex>> pairs;
  pairs.reserve(triples.size());
  for (const auto& t : triples) {
    UserIndex u = users.intern(t.user);
    ItemIndex i = items.intern(t.item);
    pairs.emplace_back(u, i);
  }
  BipartiteRatingGraph g;
  g.user_labels_ = users.release();
  g.item_labels_ = items.release();
  g.build_csr(std::move(pairs));
  return g;
}

BipartiteRatingGraph BipartiteRatingGraph::from_index_pairs(
    std::size_t n_users, std::size_t n_items,
    std::span<const std::pair<UserIndex, ItemIndex>> pairs) {
  BipartiteRatingGraph g;
  g.user_labels_.reserve(n_users);
  g.item_labels_.reserve(n_items);
  for (std::size_t u = 0; u < n_users; ++u) g.user_labels_.push_back("u" + std::to_string(u));
  for (std::size_t i = 0; i < n_items; ++i) g.item_labels_.push_back("i" + std::to_string(i));
  for (auto [u, i] : pairs) {
    if (u >= n_users || i >= n_items) throw std::out_of_range("index pair outside graph bounds");
  }
  g.build_csr({pairs.begin(), pairs.end()});
  return g;
}

std::vector<RatingTriple> parse_triples(std::istream& in) {
  std::vector<RatingTriple> triples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.front().front() == '%' || fields.front().front() == '#') continue;
    if (fields.size() < 2) throw ParseError(line_no, "expected at least <user> <item>");

    RatingTriple t{std::string(fields[0]), std::string(fields[1]), std::nullopt, std::nullopt};
    if (fields.size() >= 3) {
      double w = 0.0;
      if (!parse_number(fields[2], w) || !(w > 0.0))
        throw ParseError(line_no, "rating weight must be a positive number, got '" +
                                      std::string(fields[2]) + "'");
      t.weight = w;
    }
    if (fields.size() >= 4) {
      std::int64_t ts = 0;
      if (!parse_number(fields[3], ts))
        throw ParseError(line_no, "timestamp must be an integer, got '" + std::string(fields[3]) + "'");
      t.timestamp = ts;
    }
    triples.push_back(std::move(t));
  }
  return triples;
}

BipartiteRatingGraph parse_ratings(std::istream& in) {
  auto triples = parse_triples(in);
  return BipartiteRatingGraph::from_triples(triples);
}

std::size_t slice_length(std::size_t total, std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) throw std::invalid_argument("fraction denominator must be positive");
  if (numerator < 1 || numerator > denominator)
    throw std::invalid_argument("fraction numerator must lie in [1, denominator]");
  // floor(total * numerator / denominator) without forming the product
  return (total / denominator) * numerator + (total % denominator) * numerator / denominator;
}

BipartiteRatingGraph slice_fraction(std::span<const RatingTriple> triples,
                                    std::size_t numerator, std::size_t denominator) {
  return BipartiteRatingGraph::from_triples(
      triples.first(slice_length(triples.size(), numerator, denominator)));
}

std::size_t max_item_degree(const BipartiteRatingGraph& g) {
  std::size_t best = 0;
  for (ItemIndex i = 0; i < g.num_items(); ++i) best = std::max(best, g.item_degree(i));
  return best;
}

}  // namespace implicit_net
