#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "posetop/poset.hpp"

namespace posetop {

namespace detail {

// Smallest relation-matrix bit string over all relabelings that keep the
// (down-set size, up-set size) profile sorted. Two posets are isomorphic iff
// their keys agree.
inline std::string canonical_key(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> profile(n, {0, 0});
  for (const auto& [a, b] : p.relations()) {
    ++profile[b].first;
    ++profile[a].second;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return profile[x] != profile[y] ? profile[x] < profile[y] : x < y;
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && profile[order[j]] == profile[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::string best;
  std::string key(n * n, '0');
  auto consider = [&]() {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) key[r * n + c] = p.less(order[r], order[c]) ? '1' : '0';
    if (best.empty() || key < best) best = key;
  };
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      consider();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].second);
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return std::to_string(n) + ":" + best;
}

}  // namespace detail

/// One representative of every isomorphism class of posets on `n` elements,
/// naturally labeled ("1".."n", relations only go from smaller to larger
/// index). Deterministic order. Sizes 0..7 give 1, 1, 2, 5, 16, 63, 318, 2045.
inline std::vector<Poset> posets_of_size(std::size_t n) {
  std::vector<Poset> reps{Poset{}};
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<Poset> next;
    for (const Poset& base : reps) {
      const std::size_t m = base.size();
      // The new element goes on top of an order ideal of `base`.
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        bool ideal = true;
        for (const auto& [a, b] : base.relations()) {
          if (((mask >> b) & 1u) && !((mask >> a) & 1u)) {
            ideal = false;
            break;
          }
        }
        if (!ideal) continue;
        std::vector<IndexPair> pairs = base.relations();
        for (std::size_t a = 0; a < m; ++a)
          if ((mask >> a) & 1u) pairs.emplace_back(a, m);
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
        Poset candidate = Poset::from_index_pairs(std::move(labels), pairs);
        if (seen.insert(detail::canonical_key(candidate)).second) next.push_back(std::move(candidate));
      }
    }
    reps = std::move(next);
  }
  return reps;
}

/// Every isomorphism class with at most `max_size` elements, smallest first.
inline std::vector<Poset> posets_up_to(std::size_t max_size) {
  std::vector<Poset> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    auto level = posets_of_size(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace posetop
