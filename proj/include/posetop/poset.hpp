#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetop/error.hpp"

namespace posetop {

using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// A finite strict partial order on labeled elements.
///
/// The relation is stored transitively closed. The order of `labels()` is the
/// slot order used when the poset acts as an operation in `lex_sum`: the i-th
/// inner poset replaces the i-th declared element.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `covers`. Throws DuplicateLabel,
  /// UnknownLabel or CycleDetected.
  static Poset from_covers(std::vector<std::string> labels, const std::vector<LabelPair>& covers) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!index.emplace(labels[i], i).second) {
        throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' declared twice");
      }
    }
    std::vector<IndexPair> pairs;
    pairs.reserve(covers.size());
    for (const auto& [a, b] : covers) {
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + a + "' is not declared");
      if (ib == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + b + "' is not declared");
      pairs.emplace_back(ia->second, ib->second);
    }
    return from_index_pairs(std::move(labels), pairs);
  }

  /// Same as `from_covers` with pairs given by element index.
  static Poset from_index_pairs(std::vector<std::string> labels, const std::vector<IndexPair>& pairs) {
    Poset p;
    p.labels_ = std::move(labels);
    const std::size_t n = p.labels_.size();
    p.less_.assign(n * n, 0);
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(ErrorKind::UnknownLabel, "relation index out of range");
      if (a == b) throw Error(ErrorKind::CycleDetected, "'" + p.labels_[a] + "' below itself");
      p.less_[a * n + b] = 1;
    }
    p.close();
    return p;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool less(std::size_t a, std::size_t b) const { return less_[a * size() + b] != 0; }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "'" + label + "' is not an element");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// All pairs (a, b) with a < b, row-major.
  std::vector<IndexPair> relations() const {
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (less(a, b)) out.emplace_back(a, b);
    return out;
  }

  /// The transitive reduction (Hasse diagram edges), row-major.
  std::vector<IndexPair> cover_relations() const {
    std::vector<IndexPair> out;
    for (const auto& [a, b] : relations()) {
      bool covered = true;
      for (std::size_t c = 0; c < size() && covered; ++c) {
        if (less(a, c) && less(c, b)) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
    return out;
  }

  std::vector<std::size_t> predecessors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < size(); ++u)
      if (less(u, v)) out.push_back(u);
    return out;
  }

  std::vector<std::size_t> successors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < size(); ++w)
      if (less(v, w)) out.push_back(w);
    return out;
  }

  /// A linear extension: every element appears after all of its predecessors.
  /// Ties keep declaration order, so the result is deterministic.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> down(size(), 0);
    for (const auto& [a, b] : relations()) ++down[b];
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return down[x] < down[y]; });
    return order;
  }

  /// Same labels in the same order and the same relation.
  friend bool operator==(const Poset& x, const Poset& y) {
    return x.labels_ == y.labels_ && x.less_ == y.less_;
  }

  /// Same relation on element indices, ignoring labels.
  bool same_shape(const Poset& other) const { return less_ == other.less_; }

 private:
  // Closure by relational squaring: R <- R u R.R until it stops growing.
  void close() {
    const std::size_t n = size();
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint8_t> next = less_;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
          if (!less_[a * n + c]) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (less_[c * n + b] && !next[a * n + b]) {
              next[a * n + b] = 1;
              grew = true;
            }
          }
        }
      less_ = std::move(next);
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (less_[a * n + a]) {
        throw Error(ErrorKind::CycleDetected, "relation through '" + labels_[a] + "' is cyclic");
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> less_;
};

enum class Canonical { chain, antichain };

/// chain(n) is 1 < 2 < ... < n; antichain(n) has no relations. Labels "1".."n".
inline Poset canonical_poset(Canonical kind, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<IndexPair> pairs;
  if (kind == Canonical::chain) {
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  }
  return Poset::from_index_pairs(std::move(labels), pairs);
}

inline Poset chain(std::size_t n) { return canonical_poset(Canonical::chain, n); }
inline Poset antichain(std::size_t n) { return canonical_poset(Canonical::antichain, n); }

/// Lexicographic sum: `inner[i]` replaces the i-th element of `outer`.
/// Elements of the result are labeled "slot.inner" and listed block by block.
inline Poset lex_sum(const Poset& outer, const std::vector<Poset>& inner) {
  if (inner.size() != outer.size()) {
    throw Error(ErrorKind::ArityMismatch, "poset of size " + std::to_string(outer.size()) +
                                              " applied to " + std::to_string(inner.size()) +
                                              " arguments");
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> block_of;
  std::vector<std::size_t> offset(inner.size() + 1, 0);
  for (std::size_t s = 0; s < inner.size(); ++s) {
    offset[s + 1] = offset[s] + inner[s].size();
    for (const auto& l : inner[s].labels()) {
      labels.push_back(outer.label(s) + "." + l);
      block_of.push_back(s);
    }
  }
  std::vector<IndexPair> pairs;
  for (std::size_t s = 0; s < inner.size(); ++s) {
    for (const auto& [a, b] : inner[s].relations()) pairs.emplace_back(offset[s] + a, offset[s] + b);
  }
  for (std::size_t s = 0; s < inner.size(); ++s)
    for (std::size_t t = 0; t < inner.size(); ++t) {
      if (!outer.less(s, t)) continue;
      for (std::size_t a = offset[s]; a < offset[s + 1]; ++a)
        for (std::size_t b = offset[t]; b < offset[t + 1]; ++b) pairs.emplace_back(a, b);
    }
  return Poset::from_index_pairs(std::move(labels), pairs);
}

/// P | Q: the lexicographic sum over a two-element antichain.
inline Poset disjoint_union(const Poset& p, const Poset& q) {
  return lex_sum(Poset::from_index_pairs({"l", "r"}, {}), {p, q});
}

/// P * Q: every element of P below every element of Q.
inline Poset ordinal_sum(const Poset& p, const Poset& q) {
  return lex_sum(Poset::from_index_pairs({"l", "r"}, {{0, 1}}), {p, q});
}

/// Longest weighted chain: the maximum over chains of the summed weights.
inline std::size_t heaviest_chain(const Poset& p, const std::vector<std::size_t>& weight) {
  std::vector<std::size_t> best(p.size(), 0);
  std::size_t result = 0;
  for (std::size_t v : p.linear_extension()) {
    std::size_t below = 0;
    for (std::size_t u : p.predecessors(v)) below = std::max(below, best[u]);
    best[v] = below + weight[v];
    result = std::max(result, best[v]);
  }
  return result;
}

/// Number of elements in a longest chain; 0 for the empty poset.
inline std::size_t max_chain_length(const Poset& p) {
  return heaviest_chain(p, std::vector<std::size_t>(p.size(), 1));
}

/// The tropical action: the longest chain of lex_sum(P, [chain(l_i)]).
inline std::size_t tropical_eval(const Poset& p, const std::vector<std::size_t>& lengths) {
  if (lengths.size() != p.size()) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(p.size()) + " lengths, got " +
                                              std::to_string(lengths.size()));
  }
  return heaviest_chain(p, lengths);
}

/// The same relation with labels replaced by "1".."n".
inline Poset relabeled(const Poset& p) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= p.size(); ++i) labels.push_back(std::to_string(i));
  return Poset::from_index_pairs(std::move(labels), p.relations());
}

/// Linear extensions, counted by dynamic programming over down-sets.
/// Only meant for small posets (|P| <= 20).
inline unsigned long long count_linear_extensions(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw Error(ErrorKind::EnumerationGuard, "linear extensions need |P| <= 20");
  std::vector<std::uint32_t> pred_mask(n, 0);
  for (const auto& [a, b] : p.relations()) pred_mask[b] |= (1u << a);
  std::vector<unsigned long long> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::uint32_t set = 0; set < ways.size(); ++set) {
    if (ways[set] == 0) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if ((set >> v) & 1u) continue;
      if ((pred_mask[v] & set) != pred_mask[v]) continue;
      ways[set | (1u << v)] += ways[set];
    }
  }
  return ways.back();
}

}  // namespace posetop
