#include "implicit_net/user_network.hpp"

#include <algorithm>
#include <bit>
#include <new>
#include <stdexcept>

namespace implicit_net {

UserNetwork UserNetwork::from_sorted_lists(std::vector<std::vector<UserIndex>> adjacency) {
  UserNetwork net;
  std::size_t endpoints = 0;
  for (const auto& list : adjacency) endpoints += list.size();
  net.adjacency_ = std::move(adjacency);
  net.num_edges_ = endpoints / 2;
  return net;
}

bool UserNetwork::has_edge(UserIndex u, UserIndex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool UserNetwork::is_canonical() const {
  std::size_t endpoints = 0;
  for (UserIndex u = 0; u < adjacency_.size(); ++u) {
    const auto& list = adjacency_[u];
    endpoints += list.size();
    for (std::size_t k = 0; k < list.size(); ++k) {
      UserIndex v = list[k];
      if (v >= adjacency_.size() || v == u) return false;
      if (k > 0 && list[k - 1] >= v) return false;
      if (!has_edge(v, u)) return false;
    }
  }
  return endpoints % 2 == 0 && endpoints / 2 == num_edges_;
}

NetworkBuilder::NetworkBuilder(std::size_t n_users) : adjacency_(n_users) {
  dense_ = n_users <= kDenseLimit;
  if (dense_) {
    std::size_t words = std::max<std::size_t>(1, (n_users * n_users + 63) / 64);
    bits_.reset(static_cast<std::uint64_t*>(std::calloc(words, sizeof(std::uint64_t))));
    if (!bits_) throw std::bad_alloc();
    degree_.assign(n_users, 0);
    upper_degree_.assign(n_users, 0);
  }
}

bool NetworkBuilder::add_edge(UserIndex u, UserIndex v) {
  if (u == v) return false;
  UserIndex lo = std::min(u, v);
  UserIndex hi = std::max(u, v);
  if (hi >= adjacency_.size()) throw std::out_of_range("edge endpoint outside network");
  if (dense_) {
    std::size_t bit = bit_index(lo, hi);
    std::uint64_t mask = std::uint64_t{1} << (bit & 63);
    std::uint64_t& word = bits_[bit >> 6];
    if (word & mask) return false;
    word |= mask;
    ++degree_[lo];
    ++degree_[hi];
    ++upper_degree_[lo];
  } else {
    std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    if (!sparse_.insert(key).second) return false;
    adjacency_[lo].push_back(hi);
    adjacency_[hi].push_back(lo);
  }
  ++num_edges_;
  return true;
}

bool NetworkBuilder::has_edge(UserIndex u, UserIndex v) const {
  if (u == v) return false;
  UserIndex lo = std::min(u, v);
  UserIndex hi = std::max(u, v);
  if (dense_) {
    std::size_t bit = bit_index(lo, hi);
    return (bits_[bit >> 6] >> (bit & 63)) & 1u;
  }
  return sparse_.contains((static_cast<std::uint64_t>(lo) << 32) | hi);
}

UserNetwork NetworkBuilder::finish() && {
  if (dense_) {
    // Rows scanned in ascending order: each list first receives its lower
    // neighbors (from earlier rows), then its own row, so lists come out sorted.
    const std::size_t n = adjacency_.size();
    for (std::size_t u = 0; u < n; ++u) adjacency_[u].reserve(degree_[u]);
    for (std::size_t lo = 0; lo < n; ++lo) {
      std::uint32_t pending = upper_degree_[lo];
      std::size_t bit = bit_index(static_cast<UserIndex>(lo), static_cast<UserIndex>(lo + 1));
      while (pending > 0) {
        std::uint64_t word = bits_[bit >> 6] >> (bit & 63);
        if (word == 0) {
          bit = (bit | 63) + 1;
          continue;
        }
        bit += static_cast<std::size_t>(std::countr_zero(word));
        auto hi = static_cast<UserIndex>(bit - lo * n);
        adjacency_[lo].push_back(hi);
        adjacency_[hi].push_back(static_cast<UserIndex>(lo));
        --pending;
        ++bit;
      }
    }
    bits_.reset();
  } else {
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    sparse_.clear();
  }
  return UserNetwork::from_sorted_lists(std::move(adjacency_));
}

void add_clique(NetworkBuilder& net, std::span<const UserIndex> members) {
  if (members.size() <= 1) return;
  for (UserIndex m : members)
    if (m >= net.num_users()) throw std::out_of_range("clique member outside network");
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) net.add_edge(members[x], members[y]);
  }
}

}  // namespace implicit_net
