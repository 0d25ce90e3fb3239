#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posetop/dsl.hpp"
#include "posetop/json.hpp"
#include "posetop/suite.hpp"

namespace posetop::cli {

enum ExitCode { ok = 0, verify_failed = 1, usage = 2, guard = 3 };

struct RunConfig {
  std::string command;
  std::string expr;
  bool strict = false;
  bool weak = false;
  std::string r = "2";
  std::string at = "0";
  std::vector<std::size_t> lengths;
  std::size_t eulerian = 0;
  std::size_t stirling = 0;
  bool json = false;
  PrecisionContext precision;
  EnumerationLimits limits;
  unsigned threads = 1;
  std::vector<std::string> defines;
};

inline std::string describe(const BinomialPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [i, a] : p.coeffs()) {
    if (!out.empty()) out += (a < 0) ? " - " : " + ";
    else if (a < 0) out += "-";
    const Rational mag = abs(a);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    out += (mag == 1 ? "" : mag.get_str() + "*") + "C(x," + std::to_string(i) + ")";
  }
  return out;
}

inline std::string describe(const MonomialPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += (c < 0) ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    if (i == 0) out += mag.get_str();
    else out += (mag == 1 ? "" : mag.get_str() + "*") + (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out;
}

inline std::string describe(const Poset& p) {
  std::string out = "{";
  std::vector<bool> touched(p.size(), false);
  std::string items;
  for (const auto& [a, b] : p.cover_relations()) {
    items += (items.empty() ? "" : ",") + p.label(a) + "<" + p.label(b);
    touched[a] = touched[b] = true;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!touched[i]) items += (items.empty() ? "" : ",") + p.label(i);
  return out + items + "}";
}

inline std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x.get_str();
  return "[" + out + "]";
}

namespace detail {

inline Environment environment(const RunConfig& cfg) {
  Environment env;
  for (const auto& d : cfg.defines) {
    const auto eq = d.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::SyntaxError, "--define expects NAME=EXPR, got '" + d + "'");
    }
    env[d.substr(0, eq)] = parse_poset(d.substr(eq + 1), env);
  }
  return env;
}

// One expression through one command. Returns the exit status.
inline int run_one(const RunConfig& cfg, const std::string& text, const Environment& env, std::ostream& out) {
  const Poset p = parse_poset(text, env);
  const auto& limits = cfg.limits;

  if (cfg.command == "poly") {
    const Json report = poly_report(p, limits);
    if (cfg.json) {
      out << report.dump() << "\n";
      return ok;
    }
    const DVector dv = d_vector(p, limits);
    const BinomialPoly strict = order_polynomial(dv, MapMode::strict);
    const BinomialPoly weak = order_polynomial(dv, MapMode::weak);
    out << "poset: " << describe(p) << "\n";
    out << "d = " << join(dv.d) << "\n";
    out << "strict: " << describe(strict) << " = " << describe(to_monomial(strict)) << "\n";
    out << "weak: " << describe(weak) << " = " << describe(to_monomial(weak)) << "\n";
    out << "reciprocity: " << (report["reciprocity"].get<bool>() ? "pass" : "FAIL") << "\n";
    return ok;
  }

  if (cfg.command == "series") {
    const SeriesMode mode = cfg.weak ? SeriesMode::weak : SeriesMode::strict;
    const SeriesVec s = series_of(p, mode, limits);
    const ClosedForm f = closed_form(s);
    if (cfg.json) {
      out << Json{{"schema", report_schema_version}, {"series", to_json(s)}, {"closed_form", to_json(f)}}.dump()
          << "\n";
      return ok;
    }
    out << to_string(mode) << ": " << posetop::detail::describe(s) << "\n";
    out << "closed form: (" << describe(f.numerator) << ") / (1-x)^" << f.den_power << "\n";
    return ok;
  }

  if (cfg.command == "zeta-identity") {
    const IdentityRecord r = verify_identity(finite_form_identity(p, limits), cfg.precision);
    if (cfg.json) {
      out << to_json(r).dump() << "\n";
    } else {
      out << "poset: " << describe(p) << "\n";
      out << "lhs: " << r.lhs_text << "\n";
      out << "rhs: " << r.rhs.to_shifted_string() << "\n";
      out << "   = " << r.rhs.to_string() << "\n";
      out << "lhs value: " << r.lhs_numeric->str(25) << "\n";
      out << "rhs value: " << r.rhs_numeric->str(25) << " ± " << r.error_bound->str(3) << "\n";
      out << "terms: " << r.terms_used << "\n";
      for (const auto& n : r.notes) out << "note: " << n << "\n";
      out << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? ok : verify_failed;
  }

  if (cfg.command == "inverse-sum") {
    const Rational r = parse_rational(cfg.r);
    const MapMode mode = cfg.weak ? MapMode::weak : MapMode::strict;
    const Rational v = inverse_power_sum(p, r, mode, limits);
    if (cfg.json) {
      out << Json{{"schema", report_schema_version}, {"poset", to_json(p)}, {"r", to_fraction_string(r)},
                  {"mode", to_string(mode)}, {"value", to_fraction_string(v)}}
                 .dump()
          << "\n";
    } else {
      out << v.get_str() << "\n";
    }
    return ok;
  }

  if (cfg.command == "eval") {
    const Rational x = parse_rational(cfg.at);
    const DVector dv = d_vector(p, limits);
    const Rational strict = order_polynomial(dv, MapMode::strict).eval(x);
    const Rational weak = order_polynomial(dv, MapMode::weak).eval(x);
    if (cfg.json) {
      out << Json{{"schema", report_schema_version}, {"poset", to_json(p)}, {"at", to_fraction_string(x)},
                  {"strict", to_fraction_string(strict)}, {"weak", to_fraction_string(weak)}}
                 .dump()
          << "\n";
    } else {
      if (!cfg.weak) out << "strict: " << strict.get_str() << "\n";
      if (!cfg.strict) out << "weak: " << weak.get_str() << "\n";
    }
    return ok;
  }

  if (cfg.command == "tropical") {
    const std::size_t v = tropical_eval(p, cfg.lengths);
    if (cfg.json) {
      out << Json{{"schema", report_schema_version}, {"poset", to_json(p)}, {"lengths", cfg.lengths}, {"value", v}}
                 .dump()
          << "\n";
    } else {
      out << v << "\n";
    }
    return ok;
  }
  throw Error(ErrorKind::SyntaxError, "unknown command '" + cfg.command + "'");
}

inline int run_tables(const RunConfig& cfg, std::ostream& out) {
  Json rows = Json::array();
  std::string name;
  if (cfg.eulerian > 0) {
    name = "eulerian";
    for (std::size_t n = 1; n <= cfg.eulerian; ++n) {
      Json row = Json::array();
      for (const auto& v : eulerian_row(n)) row.push_back(v.get_str());
      rows.push_back(row);
    }
  } else if (cfg.stirling > 0) {
    name = "stirling";
    for (std::size_t n = 0; n <= cfg.stirling; ++n) {
      Json row = Json::array();
      for (std::size_t k = 0; k <= n; ++k) row.push_back(stirling2(n, k).get_str());
      rows.push_back(row);
    }
  } else {
    throw Error(ErrorKind::SyntaxError, "tables needs --eulerian N or --stirling N");
  }
  if (cfg.json) {
    out << Json{{"schema", report_schema_version}, {"table", name}, {"rows", rows}}.dump() << "\n";
    return ok;
  }
  const std::size_t first = name == "eulerian" ? 1 : 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "n=" << i + first << ":";
    for (const auto& v : rows[i]) out << " " << v.get<std::string>();
    out << "\n";
  }
  return ok;
}

inline int run_suite_command(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_suite(verify_suite_cases(cfg.precision, cfg.limits), cfg.threads);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  if (cfg.json) {
    Json cases = Json::array();
    for (const auto& r : results) cases.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    Json ledger = Json::array();
    for (const auto& d : discrepancy_ledger()) ledger.push_back(to_json(d));
    out << Json{{"schema", report_schema_version}, {"cases", cases}, {"passed", passed},
                {"total", results.size()}, {"discrepancies", ledger}}
               .dump()
        << "\n";
  } else {
    for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.detail << "\n";
    out << passed << "/" << results.size() << " passed\n";
  }
  return passed == results.size() ? ok : verify_failed;
}

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::EnumerationGuard: return guard;
    case ErrorKind::PrecisionUnachievable: return verify_failed;
    default: return usage;
  }
}

}  // namespace detail

/// Parses `args` (without the program name), runs the command and returns
/// the process exit status. An expression of "-" reads one expression per
/// line from `in`; blank lines and lines starting with '#' are skipped.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("POSETOPERAD_DIGITS")) {
    try {
      cfg.precision.working_digits = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: POSETOPERAD_DIGITS must be a positive integer\n";
      return usage;
    }
  }

  CLI::App app{"Order polynomials, order series and zeta identities of finite posets", "posetop"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--digits", cfg.precision.working_digits, "Working precision in decimal digits")
      ->check(CLI::Range(10u, 2000u));
  app.add_option("--tolerance", cfg.precision.verify_tolerance, "Verification tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--term-cap", cfg.precision.series_term_cap, "Maximum number of summed terms");
  app.add_option("--guard", cfg.limits.max_elements, "Largest poset accepted for enumeration");
  app.add_option("--threads", cfg.threads, "Workers for verify-suite")->check(CLI::Range(1u, 256u));
  app.add_option("--define", cfg.defines, "NAME=EXPR binding usable in later expressions");

  auto expr_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("expr", cfg.expr, "Poset expression, or - to read lines from stdin")->required();
    return sub;
  };
  expr_command("poly", "d-vector and both order polynomials");
  CLI::App* series = expr_command("series", "Order series and closed form");
  auto* strict_flag = series->add_flag("--strict", cfg.strict, "Strict order series (default)");
  series->add_flag("--weak", cfg.weak, "Weak order series")->excludes(strict_flag);
  expr_command("zeta-identity", "Finite-form zeta identity with numeric verification");
  CLI::App* inverse = expr_command("inverse-sum", "Exact sum of Omega(P, n) / r^n");
  inverse->add_option("--r", cfg.r, "Rational parameter with |r| > 1")->required();
  inverse->add_flag("--weak", cfg.weak, "Use the weak order polynomial");
  CLI::App* eval = expr_command("eval", "Order polynomials at a point");
  eval->add_option("--at", cfg.at, "Evaluation point (rational)")->required();
  auto* eval_strict = eval->add_flag("--strict", cfg.strict, "Only the strict polynomial");
  eval->add_flag("--weak", cfg.weak, "Only the weak polynomial")->excludes(eval_strict);
  CLI::App* tropical = expr_command("tropical", "Heaviest chain with the given slot lengths");
  tropical->add_option("--lengths", cfg.lengths, "Comma-separated lengths")->delimiter(',')->required();
  CLI::App* tables = app.add_subcommand("tables", "Eulerian or Stirling triangles");
  auto* eulerian = tables->add_option("--eulerian", cfg.eulerian, "Rows 1..N of Eulerian numbers");
  tables->add_option("--stirling", cfg.stirling, "Rows 0..N of Stirling numbers of the second kind")
      ->excludes(eulerian);
  app.add_subcommand("verify-suite", "Run the full verification battery");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? ok : usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "tables") return detail::run_tables(cfg, out);
    if (cfg.command == "verify-suite") return detail::run_suite_command(cfg, out);
    const Environment env = detail::environment(cfg);
    if (cfg.expr != "-") return detail::run_one(cfg, cfg.expr, env, out);

    int status = ok;
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        if (!cfg.json) out << "# " << line.substr(first) << "\n";
        status = std::max(status, detail::run_one(cfg, line, env, out));
      } catch (const Error& e) {
        err << "error: " << e.what() << " (input: " << line << ")\n";
        status = std::max(status, detail::exit_code_for(e));
      }
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace posetop::cli
