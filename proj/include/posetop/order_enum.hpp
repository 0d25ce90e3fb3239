#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetop/error.hpp"
#include "posetop/kernels.hpp"
#include "posetop/polynomial.hpp"
#include "posetop/poset.hpp"
#include "posetop/rational.hpp"

namespace posetop {

/// Strict maps send x < y to f(x) < f(y); weak maps to f(x) <= f(y).
enum class MapMode { strict, weak };

inline const char* to_string(MapMode m) { return m == MapMode::strict ? "strict" : "weak"; }

/// Caps for map enumeration. Exceeding either raises EnumerationGuard.
struct EnumerationLimits {
  std::size_t max_elements = 12;
  std::size_t max_target = 64;
};

namespace detail {

inline void check_limits(const Poset& p, std::size_t target, const EnumerationLimits& limits) {
  if (p.size() > limits.max_elements) {
    throw Error(ErrorKind::EnumerationGuard, "poset has " + std::to_string(p.size()) +
                                                 " elements, cap is " +
                                                 std::to_string(limits.max_elements));
  }
  if (target > limits.max_target) {
    throw Error(ErrorKind::EnumerationGuard, "target chain of length " + std::to_string(target) +
                                                 " exceeds cap " +
                                                 std::to_string(limits.max_target));
  }
}

// Backtracking over a linear extension. Values are assigned in extension
// order, so every constraint touching an unassigned element is a lower bound
// coming from an assigned predecessor. The remaining count therefore depends
// only on (position, lower bounds of the unassigned elements[, values used]),
// which is the memo key.
class MapCounter {
 public:
  MapCounter(const Poset& p, std::size_t target, MapMode mode, bool surjective)
      : size_(p.size()), target_(target), mode_(mode), surjective_(surjective) {
    const auto order = p.linear_extension();
    std::vector<std::size_t> position(size_);
    for (std::size_t i = 0; i < size_; ++i) position[order[i]] = i;
    successors_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t s : p.successors(order[i])) successors_[i].push_back(position[s]);
    // Strict maps need room for the longest chain above each element.
    height_above_.assign(size_, 0);
    for (std::size_t i = size_; i-- > 0;)
      for (std::size_t s : successors_[i])
        height_above_[i] = std::max(height_above_[i], height_above_[s] + 1);
    memo_.resize(size_ + 1);
  }

  Integer run() {
    std::vector<std::uint8_t> lower(size_, 1);
    return count(0, lower, 0);
  }

 private:
  Integer count(std::size_t pos, const std::vector<std::uint8_t>& lower, std::uint64_t used) {
    if (pos == size_) {
      if (!surjective_) return 1;
      return used == full_mask() ? Integer(1) : Integer(0);
    }
    std::string key(lower.begin() + static_cast<std::ptrdiff_t>(pos), lower.end());
    if (surjective_) key.append(reinterpret_cast<const char*>(&used), sizeof(used));
    auto& table = memo_[pos];
    if (auto it = table.find(key); it != table.end()) return it->second;

    const std::size_t slack = (mode_ == MapMode::strict) ? height_above_[pos] : 0;
    Integer total = 0;
    if (target_ >= slack + 1) {
      const std::size_t hi = target_ - slack;
      std::vector<std::uint8_t> next(lower);
      for (std::size_t v = lower[pos]; v <= hi; ++v) {
        next = lower;
        const std::size_t bound = (mode_ == MapMode::strict) ? v + 1 : v;
        for (std::size_t s : successors_[pos])
          next[s] = std::max<std::uint8_t>(next[s], static_cast<std::uint8_t>(bound));
        total += count(pos + 1, next, used | (std::uint64_t{1} << (v - 1)));
      }
    }
    table.emplace(std::move(key), total);
    return total;
  }

  std::uint64_t full_mask() const {
    return target_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << target_) - 1);
  }

  std::size_t size_;
  std::size_t target_;
  MapMode mode_;
  bool surjective_;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::size_t> height_above_;
  std::vector<std::unordered_map<std::string, Integer>> memo_;
};

}  // namespace detail

/// Number of order-preserving maps P -> chain(n) in the given mode.
inline Integer count_maps(const Poset& p, std::size_t n, MapMode mode,
                          const EnumerationLimits& limits = {}) {
  detail::check_limits(p, n, limits);
  return detail::MapCounter(p, n, mode, false).run();
}

/// Number of strict maps P -> chain(n) hitting every value.
inline Integer count_strict_surjections(const Poset& p, std::size_t n,
                                        const EnumerationLimits& limits = {}) {
  detail::check_limits(p, n, limits);
  if (n > p.size()) return 0;
  return detail::MapCounter(p, n, MapMode::strict, true).run();
}

/// The inclusion-exclusion vector d_1..d_|P| of a poset.
struct DVector {
  Poset poset;
  std::vector<Integer> d;  // d[i - 1] holds d_i

  /// d_i for 1 <= i <= |P|; zero outside that range.
  Integer at(std::size_t i) const { return (i >= 1 && i <= d.size()) ? d[i - 1] : Integer(0); }
  friend bool operator==(const DVector& a, const DVector& b) { return a.d == b.d; }
};

/// d_i = sum_{j<=i} (-1)^{i-j} C(i, j) count_maps(P, j, strict).
inline DVector d_vector(const Poset& p, const EnumerationLimits& limits = {}) {
  detail::check_limits(p, p.size(), limits);
  const std::size_t n = p.size();
  std::vector<Integer> counts;
  for (std::size_t j = 0; j <= n; ++j) counts.push_back(count_maps(p, j, MapMode::strict, limits));
  DVector out{p, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    Integer di = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      Integer term = binomial(i, j) * counts[j];
      if ((i - j) % 2 == 0) di += term;
      else di -= term;
    }
    out.d.push_back(di);
  }
  return out;
}

/// Same vector, counting strict surjections onto each chain(i) directly.
inline DVector d_vector_by_surjections(const Poset& p, const EnumerationLimits& limits = {}) {
  DVector out{p, {}};
  for (std::size_t i = 1; i <= p.size(); ++i) out.d.push_back(count_strict_surjections(p, i, limits));
  return out;
}

/// Coefficients over C(x, i) of the strict order polynomial. The empty poset
/// contributes the constant 1 at index 0.
inline BinomialPoly strict_coefficients(const DVector& dv) {
  BinomialPoly p = BinomialPoly::from_coefficients(dv.d, 1);
  if (dv.poset.empty()) p.set(0, 1);
  return p;
}

/// Coefficients (-1)^{|P|-i} d_i over the multiset basis C(x + i - 1, i).
inline BinomialPoly weak_multiset_coefficients(const DVector& dv) {
  BinomialPoly p;
  const std::size_t n = dv.poset.size();
  for (std::size_t i = 1; i <= n; ++i) p.set(i, Rational(dv.at(i)) * sign_of_power(n - i));
  if (dv.poset.empty()) p.set(0, 1);
  return p;
}

/// The strict or weak order polynomial, always in the binomial basis.
inline BinomialPoly order_polynomial(const DVector& dv, MapMode mode) {
  if (mode == MapMode::strict) return strict_coefficients(dv);
  return multiset_to_binomial(weak_multiset_coefficients(dv));
}

inline BinomialPoly order_polynomial(const Poset& p, MapMode mode, const EnumerationLimits& limits = {}) {
  return order_polynomial(d_vector(p, limits), mode);
}

struct ReciprocityReport {
  MonomialPoly signed_reflected_strict;  // (-1)^|P| Omega_strict(-x)
  MonomialPoly weak;                     // Omega_weak(x), interpolated from weak counts
  bool pass = false;
};

/// Checks (-1)^|P| Omega_strict(P, -x) = Omega_weak(P, x) as polynomials.
/// The weak side is interpolated from weak map counts, not from d.
inline ReciprocityReport reciprocity_check(const Poset& p, const EnumerationLimits& limits = {}) {
  ReciprocityReport r;
  r.signed_reflected_strict =
      to_monomial(order_polynomial(p, MapMode::strict, limits)).reflected() *
      Rational(sign_of_power(p.size()));
  std::vector<Integer> weak_counts;
  for (std::size_t j = 0; j <= p.size(); ++j) weak_counts.push_back(count_maps(p, j, MapMode::weak, limits));
  r.weak = to_monomial(BinomialPoly::interpolate(weak_counts));
  r.pass = (r.signed_reflected_strict == r.weak);
  return r;
}

struct NestedSumReport {
  Integer binomial_value;  // C(n + k - q, k)
  Integer nested_value;    // the k-fold sum, iterated directly
  Integer weak_maps;       // weak maps chain(k) -> chain(n - q + 1)
  bool pass = false;
};

/// C(n+k-q, k) = sum_{i_k=q}^{n} sum_{i_{k-1}=q}^{i_k} ... sum_{i_1=q}^{i_2} 1.
inline NestedSumReport nested_sum_identity_check(std::size_t n, std::size_t k, std::size_t q) {
  if (q < 1 || q > n || k < 1) {
    throw Error(ErrorKind::IndexOutOfRange, "nested sum needs 1 <= q <= n and k >= 1");
  }
  NestedSumReport r;
  r.binomial_value = binomial(n + k - q, k);
  auto nested = [&](auto&& self, std::size_t depth, std::size_t upper) -> Integer {
    if (depth == 0) return 1;
    Integer total = 0;
    for (std::size_t i = q; i <= upper; ++i) total += self(self, depth - 1, i);
    return total;
  };
  r.nested_value = nested(nested, k, n);
  r.weak_maps = count_maps(chain(k), n - q + 1, MapMode::weak);
  r.pass = (r.binomial_value == r.nested_value) && (r.nested_value == r.weak_maps);
  return r;
}

struct StirlingSymmetryReport {
  std::size_t n = 0;
  MonomialPoly lhs;            // sum_k k! S(n,k) x^{k-1} (1-x)^{n-k}
  MonomialPoly corrected_rhs;  // sum_k (-1)^{n-k} k! S(n,k) (1-x)^{n-k}
  MonomialPoly printed_rhs;    // sum_k (n-k)! S(n,n-k) (1-x)^k
  bool corrected_holds = false;
  bool printed_holds = false;
};

/// Strict = weak series for n points, cleared of denominators, in the
/// derived form and in the commonly printed form without the alternating sign.
inline StirlingSymmetryReport stirling_symmetry_check(std::size_t n) {
  StirlingSymmetryReport r;
  r.n = n;
  const MonomialPoly x({Rational(0), Rational(1)});
  const MonomialPoly one_minus_x({Rational(1), Rational(-1)});
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational dk(factorial(k) * stirling2(n, k));
    r.lhs += x.pow(k - 1) * one_minus_x.pow(n - k) * dk;
    r.corrected_rhs += one_minus_x.pow(n - k) * (dk * sign_of_power(n - k));
    r.printed_rhs += one_minus_x.pow(k) * Rational(factorial(n - k) * stirling2(n, n - k));
  }
  r.corrected_holds = (r.lhs == r.corrected_rhs);
  r.printed_holds = (r.lhs == r.printed_rhs);
  return r;
}

}  // namespace posetop
