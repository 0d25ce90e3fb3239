#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "posetop/corpus.hpp"
#include "posetop/discrepancy.hpp"
#include "posetop/dsl.hpp"
#include "posetop/kernels.hpp"
#include "posetop/order_enum.hpp"
#include "posetop/series.hpp"
#include "posetop/zeta.hpp"

namespace posetop {

struct SuiteResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteCase {
  std::string id;
  std::function<SuiteResult()> run;
};

namespace detail {

inline std::string pad(std::size_t v, int width = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, v);
  return buf;
}

inline SuiteResult identity_result(const std::string& id, const IdentityRecord& r) {
  std::string detail = r.rhs.to_string();
  if (r.verified) {
    detail += " | lhs " + r.lhs_numeric->str(16) + " rhs " + r.rhs_numeric->str(16) + " ± " +
              r.error_bound->str(2);
  }
  return {id, r.pass, detail};
}

}  // namespace detail

/// The seven rows of 4-element operations evaluated on (Z_1, Z_1, Z_1, Z_1).
struct FourPointRow {
  std::vector<std::string> posets;
  std::map<std::size_t, long> expected;
};

inline std::vector<FourPointRow> four_point_table() {
  return {
      {{"{x<y<z<w}"}, {{4, 1}}},
      {{"{x<y<z,w}"}, {{3, 3}, {4, 4}}},
      {{"{x<y,z<w}", "{x<y,x<z,x<w}", "{y<x,z<x,w<x}"}, {{2, 1}, {3, 6}, {4, 6}}},
      {{"{x,y,z<w}"}, {{2, 4}, {3, 15}, {4, 12}}},
      {{"{x,y,z,w}"}, {{1, 1}, {2, 14}, {3, 36}, {4, 24}}},
      {{"{x<y>z,w}", "{x,y>z<w}"}, {{2, 2}, {3, 9}, {4, 8}}},
      {{"{x<y>z<w}"}, {{2, 1}, {3, 5}, {4, 5}}},
  };
}

/// Every check of the verification battery, unsorted and not yet run.
inline std::vector<SuiteCase> verify_suite_cases(const PrecisionContext& ctx, const EnumerationLimits& limits) {
  std::vector<SuiteCase> cases;
  auto add = [&](std::string id, std::function<SuiteResult(const std::string&)> fn) {
    cases.push_back({id, [id, fn] { return fn(id); }});
  };

  const auto table = four_point_table();
  for (std::size_t row = 0; row < table.size(); ++row) {
    for (const auto& text : table[row].posets) {
      add("four-point/" + std::to_string(row + 1) + "/" + text, [text, row, table, limits](const std::string& id) {
        const Poset p = parse_poset(text);
        const OperadEvaluation ev = operad_eval_series(p, std::vector<SeriesVec>(4, SeriesVec::basis(1)), limits);
        SeriesVec expected;
        for (const auto& [i, c] : table[row].expected) expected.add(i, Rational(c));
        return SuiteResult{id, ev.result == expected && ev.consistent, detail::describe(ev.result)};
      });
    }
  }

  const auto corpus = posets_up_to(5);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Poset p = corpus[i];
    add("reciprocity/" + detail::pad(i), [p, limits](const std::string& id) {
      const ReciprocityReport r = reciprocity_check(p, limits);
      return SuiteResult{id, r.pass, std::to_string(p.size()) + " elements"};
    });
  }

  add("zeta/goldbach", [ctx](const std::string& id) {
    return detail::identity_result(id, verify_identity(goldbach_record(), ctx));
  });
  add("zeta/alternating-half", [ctx](const std::string& id) {
    return detail::identity_result(id, verify_identity(alternating_half_record(), ctx));
  });
  for (std::size_t k = 1; k <= 6; ++k) {
    add("zeta/binomial-alternating/" + std::to_string(k), [ctx, k](const std::string& id) {
      return detail::identity_result(id, verify_identity(binomial_alternating_record(k), ctx));
    });
    add("zeta/binomial/" + std::to_string(k), [ctx, k](const std::string& id) {
      return detail::identity_result(id, verify_identity(binomial_record(k), ctx));
    });
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    add("zeta/reciprocal-product/" + std::to_string(k), [ctx, k](const std::string& id) {
      const IdentityRecord r = reciprocal_product_check(k, ctx);
      SuiteResult out = detail::identity_result(id, r);
      for (const auto& n : r.notes) out.detail += " | " + n;
      return out;
    });
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    add("zeta/even-closed-form/" + std::to_string(2 * n), [ctx, n](const std::string& id) {
      const Approx z = zeta_value(static_cast<long>(2 * n), ctx, false);
      const Real closed = zeta_even_closed_form(n, ctx);
      const Real gap = abs(z.value - closed);
      return SuiteResult{id, gap <= z.error + ulp(closed) * Real(16.0, ctx.bits()), "gap " + gap.str(3)};
    });
  }

  std::vector<Poset> finite_corpus = posets_up_to(4);
  for (std::size_t n = 5; n <= 6; ++n) {
    finite_corpus.push_back(chain(n));
    finite_corpus.push_back(antichain(n));
  }
  for (std::size_t i = 0; i < finite_corpus.size(); ++i) {
    const Poset p = finite_corpus[i];
    add("finite-form/" + detail::pad(i), [p, ctx, limits](const std::string& id) {
      return detail::identity_result(id, verify_identity(finite_form_identity(p, limits), ctx));
    });
  }

  struct InverseCase {
    std::string text;
    long num, den;
    MapMode mode;
    std::string expected;
  };
  const std::vector<InverseCase> inverse{{"A5", 2, 1, MapMode::strict, "1082"},
                                         {"A5", 3, 1, MapMode::strict, "273/4"},
                                         {"C1 * (C1 | C1 | C1)", 5, 1, MapMode::strict, "115/512"},
                                         {"C1 * (C1 | C1 | C1)", 5, 1, MapMode::weak, "575/512"}};
  for (const auto& c : inverse) {
    add("inverse-sum/" + c.text + "/" + std::to_string(c.num) + "/" + to_string(c.mode),
        [c, limits](const std::string& id) {
          const Rational v = inverse_power_sum(parse_poset(c.text), ratio(c.num, c.den), c.mode, limits);
          return SuiteResult{id, v.get_str() == c.expected, v.get_str()};
        });
  }

  for (std::size_t s = 0; s <= 2; ++s)
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; q <= 2; ++q) {
        IdentityParams params;
        params.values = {{"s", static_cast<long>(s)}, {"p", static_cast<long>(p)}, {"q", static_cast<long>(q)}};
        add("series/distributivity/" + std::to_string(s) + std::to_string(p) + std::to_string(q),
            [params, limits](const std::string& id) {
              const IdentityCheck c = series_identity_check("distributivity", params, limits);
              return SuiteResult{id, c.pass, c.details.empty() ? "" : c.details.front()};
            });
      }
  add("series/zigzag-reversal", [limits](const std::string& id) {
    const IdentityCheck c = series_identity_check("zigzag-reversal", {}, limits);
    return SuiteResult{id, c.pass, std::to_string(c.details.size()) + " comparisons"};
  });
  for (std::size_t k = 1; k <= 3; ++k) {
    add("series/zigzag-slot-formulas/" + std::to_string(k), [k, limits](const std::string& id) {
      IdentityParams params;
      params.values = {{"k", static_cast<long>(k)}};
      const IdentityCheck c = series_identity_check("zigzag-slot-formulas", params, limits);
      return SuiteResult{id, c.pass, std::to_string(c.details.size()) + " comparisons"};
    });
  }
  const auto small = posets_up_to(4);
  for (std::size_t i = 0; i < small.size(); ++i) {
    const Poset p = small[i];
    add("series/h-star-top-vanishing/" + detail::pad(i), [p, limits](const std::string& id) {
      IdentityParams params;
      params.poset = p;
      const IdentityCheck c = series_identity_check("h-star-top-vanishing", params, limits);
      return SuiteResult{id, c.pass, c.details.empty() ? "" : c.details.front()};
    });
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    add("series/antichain-strict-weak/" + std::to_string(n), [n, limits](const std::string& id) {
      IdentityParams params;
      params.values = {{"n", static_cast<long>(n)}};
      const IdentityCheck c = series_identity_check("antichain-strict-weak", params, limits);
      return SuiteResult{id, c.pass, ""};
    });
  }

  add("kernels/eulerian-symmetry", [](const std::string& id) {
    bool ok = true;
    for (std::size_t n = 1; n <= 10; ++n)
      for (std::size_t i = 0; i < n; ++i) ok = ok && eulerian_number(n, i) == eulerian_number(n, n - 1 - i);
    return SuiteResult{id, ok, "n <= 10"};
  });
  add("kernels/worpitzky", [](const std::string& id) {
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n)
      for (unsigned long k = 0; k <= 10; ++k) {
        Integer rhs = 0;
        for (std::size_t i = 0; i < n; ++i) rhs += eulerian_number(n, i) * binomial(k + i, n);
        Integer lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), k, n);
        ok = ok && lhs == rhs;
      }
    return SuiteResult{id, ok, "n <= 6, k <= 10"};
  });
  add("kernels/monomial-to-binomial", [](const std::string& id) {
    bool ok = true;
    for (std::size_t n = 0; n <= 8; ++n) {
      const BinomialPoly b = to_binomial(MonomialPoly::x_power(n));
      for (std::size_t k = 0; k <= n; ++k) ok = ok && b.coeff(k) == Rational(factorial(k) * stirling2(n, k));
    }
    return SuiteResult{id, ok, "n <= 8"};
  });

  for (const auto& make : {zigzag_low_index_discrepancy, zigzag_zeta_discrepancy}) {
    add("discrepancy/" + make().id, [make](const std::string& id) {
      const Discrepancy d = make();
      return SuiteResult{id, d.flagged, "published " + d.published + " | derived " + d.derived};
    });
  }
  add("discrepancy/stirling-symmetry-sign", [](const std::string& id) {
    const Discrepancy d = stirling_symmetry_discrepancy();
    bool derived_ok = true;
    for (std::size_t n = 1; n <= 6; ++n) derived_ok = derived_ok && stirling_symmetry_check(n).corrected_holds;
    return SuiteResult{id, d.flagged && derived_ok, "published " + d.published + " | derived " + d.derived};
  });
  return cases;
}

/// Runs the cases on `threads` workers. The result order is by case id and
/// does not depend on scheduling.
inline std::vector<SuiteResult> run_suite(const std::vector<SuiteCase>& cases, unsigned threads = 1) {
  std::vector<SuiteResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i].run();
      } catch (const std::exception& e) {
        results[i] = {cases[i].id, false, std::string("error: ") + e.what()};
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const SuiteResult& a, const SuiteResult& b) { return a.id < b.id; });
  return results;
}

}  // namespace posetop
