#include "implicit_net/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace implicit_net {

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool passed, std::string counterexample) {
  checks.push_back({std::move(name), passed, std::move(counterexample)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.counterexample.empty()) out << ": " << c.counterexample;
    out << '\n';
  }
  out << (overall() ? "overall: PASS" : "overall: FAIL") << '\n';
  return out.str();
}

std::string VerificationReport::to_key_value() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "check=" << c.name << " pass=" << (c.passed ? "true" : "false")
        << " counterexample=" << (c.counterexample.empty() ? "-" : c.counterexample) << '\n';
  }
  return out.str();
}

bool oracle_two_path(const BipartiteRatingGraph& g, UserIndex u, UserIndex v) {
  if (u == v) throw std::invalid_argument("two-path oracle needs two distinct users");
  if (u >= g.num_users() || v >= g.num_users())
    throw std::invalid_argument("two-path oracle: user index out of range");
  for (ItemIndex i = 0; i < g.num_items(); ++i) {
    auto raters = g.users_of(i);
    bool has_u = std::find(raters.begin(), raters.end(), u) != raters.end();
    bool has_v = std::find(raters.begin(), raters.end(), v) != raters.end();
    if (has_u && has_v) return true;
  }
  return false;
}

IncidenceBitmap::IncidenceBitmap(const BipartiteRatingGraph& g)
    : stride_((g.num_items() + 63) / 64), words_(g.num_users() * stride_, 0) {
  // Filled from the item side so that user-side degrees remain an independent
  // quantity to compare against.
  for (ItemIndex i = 0; i < g.num_items(); ++i) {
    for (UserIndex u : g.users_of(i)) words_[u * stride_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool IncidenceBitmap::rated(UserIndex u, ItemIndex i) const {
  return (words_[u * stride_ + i / 64] >> (i % 64)) & 1u;
}

bool IncidenceBitmap::share_item(UserIndex u, UserIndex v) const {
  auto a = row(u);
  auto b = row(v);
  for (std::size_t w = 0; w < stride_; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

std::size_t IncidenceBitmap::shared_items(UserIndex u, UserIndex v) const {
  auto a = row(u);
  auto b = row(v);
  std::size_t total = 0;
  for (std::size_t w = 0; w < stride_; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

namespace {

std::string label_of(std::span<const std::string> labels, UserIndex u) {
  if (u < labels.size()) return labels[u];
  return "#" + std::to_string(u);
}

std::string pair_text(std::span<const std::string> labels, UserIndex u, UserIndex v) {
  return "(" + label_of(labels, u) + "," + label_of(labels, v) + ")";
}

void enforce_gate(std::size_t n_users, const OracleOptions& options) {
  if (!options.ignore_size_limit && n_users > options.max_users) {
    throw SizeLimitError("quadratic verification limited to " + std::to_string(options.max_users) +
                         " users (graph has " + std::to_string(n_users) +
                         "); raise the limit explicitly to proceed");
  }
}

}  // namespace

VerificationReport verify_projection(const BipartiteRatingGraph& g, const UserNetwork& net,
                                     const OracleOptions& options) {
  const std::size_t n = g.num_users();
  if (net.num_users() != n)
    throw std::invalid_argument("network has " + std::to_string(net.num_users()) +
                                " users but rating data has " + std::to_string(n));
  enforce_gate(n, options);
  std::span<const std::string> labels = g.user_labels();
  VerificationReport report;

  // symmetry / irreflexivity / sortedness / declared edge count
  {
    std::string bad;
    std::size_t endpoints = 0;
    for (UserIndex u = 0; u < n && bad.empty(); ++u) {
      auto list = net.neighbors(u);
      endpoints += list.size();
      for (std::size_t k = 0; k < list.size(); ++k) {
        UserIndex v = list[k];
        if (v >= n) {
          bad = label_of(labels, u) + " lists out-of-range neighbor #" + std::to_string(v);
        } else if (v == u) {
          bad = "self loop at " + label_of(labels, u);
        } else if (k > 0 && list[k - 1] >= v) {
          bad = "unsorted or repeated neighbor list at " + label_of(labels, u);
        } else {
          auto back = net.neighbors(v);
          if (std::find(back.begin(), back.end(), u) == back.end())
            bad = "asymmetric edge " + pair_text(labels, u, v);
        }
        if (!bad.empty()) break;
      }
    }
    if (bad.empty() && endpoints != 2 * net.num_edges())
      bad = "edge count " + std::to_string(net.num_edges()) + " disagrees with " +
            std::to_string(endpoints) + " list entries";
    report.add("symmetry", bad.empty(), bad);
  }

  IncidenceBitmap bitmap(g);

  {
    std::string bad;
    for (UserIndex u = 0; u < n && bad.empty(); ++u) {
      for (UserIndex v = u + 1; v < n; ++v) {
        bool expected = bitmap.share_item(u, v);
        if (expected != net.has_edge(u, v)) {
          // Confirm with the scalar oracle before reporting.
          expected = oracle_two_path(g, u, v);
          bad = pair_text(labels, u, v) +
                (expected ? " co-rated an item but edge is missing" : " share no item but edge is present");
          break;
        }
      }
    }
    report.add("edge_criterion", bad.empty(), bad);
  }

  {
    std::string bad;
    for (ItemIndex i = 0; i < g.num_items() && bad.empty(); ++i) {
      auto raters = g.users_of(i);
      for (std::size_t x = 0; x < raters.size() && bad.empty(); ++x) {
        for (std::size_t y = x + 1; y < raters.size(); ++y) {
          if (!net.has_edge(raters[x], raters[y])) {
            bad = "item " + g.item_label(i) + " raters " + pair_text(labels, raters[x], raters[y]) +
                  " not adjacent";
            break;
          }
        }
      }
    }
    report.add("item_cliques", bad.empty(), bad);
  }

  {
    std::string bad;
    for (UserIndex u = 0; u < n; ++u) {
      std::size_t closed_walks = bitmap.shared_items(u, u);
      if (closed_walks != g.items_of(u).size()) {
        bad = label_of(labels, u) + " has " + std::to_string(closed_walks) +
              " closed 2-paths but degree " + std::to_string(g.items_of(u).size());
        break;
      }
    }
    report.add("degree_diagonal", bad.empty(), bad);
  }
  return report;
}

VerificationReport verify_counts(const BipartiteRatingGraph& g, const CountMatrix& counts,
                                 const OracleOptions& options) {
  const std::size_t n = g.num_users();
  if (counts.num_rows() != n)
    throw std::invalid_argument("count matrix has " + std::to_string(counts.num_rows()) +
                                " rows but rating data has " + std::to_string(n) + " users");
  enforce_gate(n, options);
  std::span<const std::string> labels = g.user_labels();
  IncidenceBitmap bitmap(g);
  VerificationReport report;

  std::string bad_entry;
  std::string bad_diag;
  for (UserIndex x = 0; x < n; ++x) {
    for (const auto& e : counts.row(x)) {
      if (e.count == 0 && bad_entry.empty()) bad_entry = "explicit zero stored at " + pair_text(labels, x, e.column);
    }
    for (UserIndex y = 0; y < n; ++y) {
      std::size_t expected = bitmap.shared_items(x, y);
      std::size_t got = counts.at(x, y);
      if (x == y && got != g.items_of(x).size() && bad_diag.empty())
        bad_diag = label_of(labels, x) + " diagonal " + std::to_string(got) + " vs degree " +
                   std::to_string(g.items_of(x).size());
      if (got != expected && bad_entry.empty())
        bad_entry = pair_text(labels, x, y) + " count " + std::to_string(got) + " expected " +
                    std::to_string(expected);
    }
  }
  report.add("count_entries", bad_entry.empty(), bad_entry);
  report.add("count_diagonal", bad_diag.empty(), bad_diag);
  return report;
}

VerificationReport verify_components(const UserNetwork& net, const ComponentSet& cs,
                                     std::span<const std::string> labels) {
  const std::size_t n = net.num_users();
  VerificationReport report;
  std::vector<std::int64_t> owner(n, -1);

  std::string range_bad;
  std::string disjoint_bad;
  for (std::size_t c = 0; c < cs.components.size(); ++c) {
    if (cs.components[c].empty() && range_bad.empty()) range_bad = "component " + std::to_string(c) + " is empty";
    for (UserIndex u : cs.components[c]) {
      if (u >= n) {
        if (range_bad.empty()) range_bad = "member #" + std::to_string(u) + " outside the network";
        continue;
      }
      if (owner[u] != -1) {
        if (disjoint_bad.empty())
          disjoint_bad = label_of(labels, u) + " in components " + std::to_string(owner[u]) + " and " +
                         std::to_string(c);
        continue;
      }
      owner[u] = static_cast<std::int64_t>(c);
    }
  }
  report.add("in_range", range_bad.empty(), range_bad);
  report.add("disjoint", disjoint_bad.empty(), disjoint_bad);

  {
    auto missing = std::find(owner.begin(), owner.end(), -1);
    std::string bad;
    if (missing != owner.end())
      bad = label_of(labels, static_cast<UserIndex>(missing - owner.begin())) + " belongs to no component";
    report.add("exhaustive", bad.empty(), bad);
  }

  {
    std::string bad;
    for (UserIndex u = 0; u < n && bad.empty(); ++u) {
      for (UserIndex v : net.neighbors(u)) {
        if (v < n && owner[u] != owner[v]) {
          bad = "edge " + pair_text(labels, std::min(u, v), std::max(u, v)) + " crosses components";
          break;
        }
      }
    }
    report.add("no_cross_edge", bad.empty(), bad);
  }

  {
    std::string bad;
    std::vector<bool> seen(n, false);
    std::vector<UserIndex> stack;
    for (std::size_t c = 0; c < cs.components.size() && bad.empty(); ++c) {
      const auto& members = cs.components[c];
      if (members.empty() || members.front() >= n) continue;
      std::size_t reached = 0;
      stack.assign(1, members.front());
      seen[members.front()] = true;
      while (!stack.empty()) {
        UserIndex u = stack.back();
        stack.pop_back();
        ++reached;
        for (UserIndex v : net.neighbors(u)) {
          if (v < n && !seen[v] && owner[v] == static_cast<std::int64_t>(c)) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
      std::size_t owned = 0;
      for (UserIndex u : members) owned += (u < n && owner[u] == static_cast<std::int64_t>(c));
      if (reached != owned) {
        auto unreached = std::find_if(members.begin(), members.end(),
                                      [&](UserIndex u) { return u < n && !seen[u]; });
        bad = "component " + std::to_string(c) + " disconnected: " + label_of(labels, members.front()) +
              " cannot reach " + (unreached != members.end() ? label_of(labels, *unreached) : "?");
      }
    }
    report.add("connected", bad.empty(), bad);
  }
  return report;
}

}  // namespace implicit_net
