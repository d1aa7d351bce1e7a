#include "implicit_net/output.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace implicit_net {

namespace {

const std::string& label_or(std::span<const std::string> labels, UserIndex u, std::string& scratch) {
  if (u < labels.size()) return labels[u];
  scratch = std::to_string(u);
  return scratch;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

void write_edge_list(std::ostream& out, const UserNetwork& net, std::span<const std::string> labels) {
  std::string a;
  std::string b;
  for (UserIndex u = 0; u < net.num_users(); ++u) {
    for (UserIndex v : net.neighbors(u)) {
      if (v > u) out << label_or(labels, u, a) << ' ' << label_or(labels, v, b) << '\n';
    }
  }
}

void write_components(std::ostream& out, const ComponentSet& cs, std::span<const std::string> labels) {
  std::string scratch;
  for (const auto& component : cs.components) {
    for (std::size_t k = 0; k < component.size(); ++k) {
      if (k) out << ' ';
      out << label_or(labels, component[k], scratch);
    }
    out << '\n';
  }
}

ComponentSummary summarize(const ComponentSet& cs, std::size_t n_users) {
  ComponentSummary s;
  s.count = cs.size();
  std::vector<std::size_t> sizes;
  sizes.reserve(cs.size());
  for (const auto& c : cs.components) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  sizes.resize(std::min<std::size_t>(sizes.size(), 5));
  s.largest = sizes;
  if (n_users > 0 && !sizes.empty()) s.giant_fraction = static_cast<double>(sizes.front()) / n_users;
  return s;
}

void write_summary(std::ostream& out, const ComponentSummary& summary) {
  out << "k=" << summary.count << '\n' << "largest=";
  for (std::size_t k = 0; k < summary.largest.size(); ++k) out << (k ? " " : "") << summary.largest[k];
  out << '\n' << "giant_fraction=" << fixed6(summary.giant_fraction) << '\n';
}

DatasetStats dataset_stats(const BipartiteRatingGraph& g) {
  DatasetStats s;
  s.users = g.num_users();
  s.items = g.num_items();
  s.ratings = g.num_edges();
  s.raw_ratings = g.raw_ratings();
  s.duplicates = g.duplicates_collapsed();
  const double cells = static_cast<double>(s.users) * static_cast<double>(s.items);
  if (cells > 0) {
    s.density = static_cast<double>(s.ratings) / cells;
    s.raw_density = static_cast<double>(s.raw_ratings) / cells;
  }
  s.max_item_degree = max_item_degree(g);
  return s;
}

void write_stats(std::ostream& out, const DatasetStats& s) {
  out << "users=" << s.users << '\n'
      << "items=" << s.items << '\n'
      << "ratings=" << s.ratings << '\n'
      << "raw_ratings=" << s.raw_ratings << '\n'
      << "duplicates_collapsed=" << s.duplicates << '\n'
      << "density=" << fixed6(s.density) << '\n'
      << "raw_density=" << fixed6(s.raw_density) << '\n'
      << "max_item_degree=" << s.max_item_degree << '\n';
}

}  // namespace implicit_net
