#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetop/error.hpp"
#include "posetop/poset.hpp"

namespace posetop {

/// Syntax tree of a poset expression.
///
///   expr    := term (('|' | '⊔') term)*
///   term    := factor ('*' factor)*
///   factor  := literal | literal '(' expr (',' expr)* ')' | '(' expr ')'
///   literal := 'C' nat | 'A' nat | '{' relations '}' | name
///
/// Relations are comma-separated items, each a bare label or a chain such as
/// x<y>z<w. Labels are ordered by first appearance, which is also the slot
/// order when the literal is applied to arguments.
struct Expr {
  enum class Kind { chain, antichain, hasse, disjoint_union, ordinal_sum, apply, var };

  Kind kind = Kind::chain;
  std::size_t n = 0;                      // chain / antichain size
  std::vector<std::string> labels;        // hasse
  std::vector<LabelPair> covers;          // hasse, normalized to (lower, upper)
  std::string name;                       // var
  std::vector<Expr> children;             // binary: {l, r}; apply: {outer, args...}
  std::size_t line = 1, column = 1;       // source position, ignored by ==

  static Expr chain_lit(std::size_t n) { return Expr{Kind::chain, n, {}, {}, {}, {}}; }
  static Expr antichain_lit(std::size_t n) { return Expr{Kind::antichain, n, {}, {}, {}, {}}; }
  static Expr hasse_lit(std::vector<std::string> labels, std::vector<LabelPair> covers) {
    return Expr{Kind::hasse, 0, std::move(labels), std::move(covers), {}, {}};
  }
  static Expr var(std::string name) { return Expr{Kind::var, 0, {}, {}, std::move(name), {}}; }
  static Expr binary(Kind k, Expr l, Expr r) { return Expr{k, 0, {}, {}, {}, {std::move(l), std::move(r)}}; }
  static Expr apply(Expr outer, std::vector<Expr> args) {
    Expr e{Kind::apply, 0, {}, {}, {}, {std::move(outer)}};
    for (auto& a : args) e.children.push_back(std::move(a));
    return e;
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.n == b.n && a.labels == b.labels && a.covers == b.covers &&
           a.name == b.name && a.children == b.children;
  }
};

namespace detail {

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.';
}
inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
inline bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("operator, ',' or end of input");
    return e;
  }

 private:
  Expr expr() {
    Expr left = term();
    for (;;) {
      skip_space();
      if (!accept_union()) return left;
      Expr right = term();
      left = positioned(Expr::binary(Expr::Kind::disjoint_union, std::move(left), std::move(right)), left);
    }
  }

  Expr term() {
    Expr left = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return left;
      ++pos_;
      Expr right = factor();
      left = positioned(Expr::binary(Expr::Kind::ordinal_sum, std::move(left), std::move(right)), left);
    }
  }

  Expr factor() {
    skip_space();
    const auto [line, column] = location();
    if (peek() == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    Expr lit = literal();
    skip_space();
    if (peek() != '(') return lit;
    ++pos_;
    std::vector<Expr> args;
    args.push_back(expr());
    skip_space();
    while (peek() == ',') {
      ++pos_;
      args.push_back(expr());
      skip_space();
    }
    expect(')');
    const std::size_t arity = literal_size(lit);
    if (lit.kind != Expr::Kind::var && arity != args.size()) {
      throw ParseError(ErrorKind::ArityError, line, column,
                       "operation of arity " + std::to_string(arity) + " given " +
                           std::to_string(args.size()) + " arguments");
    }
    Expr out = Expr::apply(std::move(lit), std::move(args));
    out.line = line;
    out.column = column;
    return out;
  }

  Expr literal() {
    skip_space();
    const auto [line, column] = location();
    Expr e;
    if (peek() == '{') {
      e = hasse();
    } else if (is_name_start(peek())) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      const std::string word = text_.substr(start, pos_ - start);
      if (word.size() > 1 && (word[0] == 'C' || word[0] == 'A') &&
          word.find_first_not_of("0123456789", 1) == std::string::npos) {
        std::size_t n = 0;
        try {
          n = std::stoul(word.substr(1));
        } catch (const std::out_of_range&) {
          throw ParseError(ErrorKind::SyntaxError, line, column, "size in '" + word + "' is too large");
        }
        e = word[0] == 'C' ? Expr::chain_lit(n) : Expr::antichain_lit(n);
      } else {
        e = Expr::var(word);
      }
    } else {
      fail("'C<n>', 'A<n>', '{', a name or '('");
    }
    e.line = line;
    e.column = column;
    return e;
  }

  Expr hasse() {
    expect('{');
    std::vector<std::string> labels;
    std::vector<LabelPair> covers;
    auto declare = [&](const std::string& l) {
      for (const auto& existing : labels)
        if (existing == l) return;
      labels.push_back(l);
    };
    skip_space();
    if (peek() == '}') {
      ++pos_;
      return Expr::hasse_lit({}, {});
    }
    for (;;) {
      std::string prev = label();
      declare(prev);
      for (;;) {
        skip_space();
        const char op = peek();
        if (op != '<' && op != '>') break;
        ++pos_;
        std::string next = label();
        declare(next);
        if (op == '<') covers.emplace_back(prev, next);
        else covers.emplace_back(next, prev);
        prev = std::move(next);
      }
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return Expr::hasse_lit(std::move(labels), std::move(covers));
    }
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("a label");
    return text_.substr(start, pos_ - start);
  }

  static std::size_t literal_size(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::chain:
      case Expr::Kind::antichain: return e.n;
      case Expr::Kind::hasse: return e.labels.size();
      default: return 0;
    }
  }

  static Expr positioned(Expr e, const Expr& from) {
    e.line = from.line;
    e.column = from.column;
    return e;
  }

  bool accept_union() {
    if (peek() == '|') {
      ++pos_;
      return true;
    }
    static const std::string cup = "\xE2\x8A\x94";  // U+2294
    if (text_.compare(pos_, cup.size(), cup) == 0) {
      pos_ += cup.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<std::size_t, std::size_t> location() const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    return {line, column};
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const auto [line, column] = location();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(ErrorKind::SyntaxError, line, column, "expected " + expected + ", found " + found);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(const std::string& text) { return detail::Parser(text).parse(); }

/// Prints an expression so that parse_expr gives it back unchanged. Binary
/// nodes are always parenthesized.
inline std::string format_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::chain: return "C" + std::to_string(e.n);
    case Expr::Kind::antichain: return "A" + std::to_string(e.n);
    case Expr::Kind::var: return e.name;
    case Expr::Kind::disjoint_union:
      return "(" + format_expr(e.children[0]) + " | " + format_expr(e.children[1]) + ")";
    case Expr::Kind::ordinal_sum:
      return "(" + format_expr(e.children[0]) + " * " + format_expr(e.children[1]) + ")";
    case Expr::Kind::apply: {
      std::string out = format_expr(e.children[0]) + "(";
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        if (i > 1) out += ", ";
        out += format_expr(e.children[i]);
      }
      return out + ")";
    }
    case Expr::Kind::hasse: {
      std::vector<std::string> items;
      std::vector<std::string> seen;
      auto note = [&](const std::string& l) {
        for (const auto& s : seen)
          if (s == l) return;
        seen.push_back(l);
      };
      for (const auto& [a, b] : e.covers) {
        items.push_back(a + "<" + b);
        note(a);
        note(b);
      }
      for (const auto& l : e.labels) {
        bool present = false;
        for (const auto& s : seen) present = present || s == l;
        if (!present) {
          items.push_back(l);
          seen.push_back(l);
        }
      }
      if (seen != e.labels) {
        // Covers alone would reorder the slots; declare the labels up front.
        items.clear();
        for (const auto& l : e.labels) items.push_back(l);
        for (const auto& [a, b] : e.covers) items.push_back(a + "<" + b);
      }
      std::string out = "{";
      for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
      return out + "}";
    }
  }
  return {};
}

using Environment = std::map<std::string, Poset>;

/// Evaluates an expression to a poset. Names are looked up in `env`.
inline Poset resolve(const Expr& e, const Environment& env = {}) {
  switch (e.kind) {
    case Expr::Kind::chain: return chain(e.n);
    case Expr::Kind::antichain: return antichain(e.n);
    case Expr::Kind::hasse: return Poset::from_covers(e.labels, e.covers);
    case Expr::Kind::var: {
      auto it = env.find(e.name);
      if (it == env.end()) throw ParseError(ErrorKind::UnknownName, e.line, e.column, "'" + e.name + "' is not defined");
      return it->second;
    }
    case Expr::Kind::disjoint_union: return disjoint_union(resolve(e.children[0], env), resolve(e.children[1], env));
    case Expr::Kind::ordinal_sum: return ordinal_sum(resolve(e.children[0], env), resolve(e.children[1], env));
    case Expr::Kind::apply: {
      const Poset outer = resolve(e.children[0], env);
      if (outer.size() + 1 != e.children.size()) {
        throw ParseError(ErrorKind::ArityError, e.line, e.column,
                         "operation of arity " + std::to_string(outer.size()) + " given " +
                             std::to_string(e.children.size() - 1) + " arguments");
      }
      std::vector<Poset> inner;
      for (std::size_t i = 1; i < e.children.size(); ++i) inner.push_back(resolve(e.children[i], env));
      return lex_sum(outer, inner);
    }
  }
  return {};
}

inline Poset parse_poset(const std::string& text, const Environment& env = {}) {
  return resolve(parse_expr(text), env);
}

}  // namespace posetop
