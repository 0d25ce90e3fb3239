#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "posetop/error.hpp"
#include "posetop/rational.hpp"

namespace posetop {

/// Stirling numbers of the second kind, S(n, k). Rows are memoized.
inline Integer stirling2(std::size_t n, std::size_t k) {
  static std::mutex guard;
  static std::vector<std::vector<Integer>> rows{{Integer(1)}};
  if (k > n) return 0;
  std::lock_guard lock(guard);
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    const std::size_t m = rows.size();
    std::vector<Integer> row(m + 1, 0);
    for (std::size_t j = 1; j <= m; ++j) {
      Integer carry = (j < prev.size()) ? prev[j] * static_cast<unsigned long>(j) : Integer(0);
      row[j] = carry + prev[j - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

/// Eulerian number A(n, i): permutations of n letters with i descents,
/// from Euler's alternating sum sum_r (-1)^r C(n+1, r) (i+1-r)^n.
/// A(0, 0) = 1; otherwise 0 <= i <= n-1 is required.
inline Integer eulerian_number(std::size_t n, std::size_t i) {
  if (n == 0 && i == 0) return 1;
  if (i + 1 > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "A(" + std::to_string(n) + ", " + std::to_string(i) + ") needs i <= n-1");
  }
  Integer total = 0;
  for (std::size_t r = 0; r <= i; ++r) {
    Integer base = static_cast<unsigned long>(i + 1 - r);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n);
    Integer term = binomial(n + 1, r) * power;
    if (r % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

/// Row A(n, 0..n-1) (the coefficient list of the Eulerian polynomial A_n).
inline std::vector<Integer> eulerian_row(std::size_t n) {
  if (n == 0) return {Integer(1)};
  std::vector<Integer> row;
  for (std::size_t i = 0; i < n; ++i) row.push_back(eulerian_number(n, i));
  return row;
}

/// Bernoulli numbers for the generating function x / (1 - e^{-x}), so
/// B_1 = +1/2. Even-index values coincide with every common convention.
inline Rational bernoulli_number(std::size_t m) {
  static std::mutex guard;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(guard);
  // The table holds the x/(e^x - 1) values; only B_1 differs.
  while (table.size() <= m) {
    const std::size_t k = table.size();
    Rational sum = 0;
    for (std::size_t j = 0; j < k; ++j) sum += Rational(binomial(k + 1, j)) * table[j];
    table.push_back(-sum / static_cast<long>(k + 1));
  }
  return m == 1 ? -table[1] : table[m];
}

}  // namespace posetop
