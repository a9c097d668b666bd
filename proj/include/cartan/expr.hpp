#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartan/liealg.hpp"
#include "cartan/rational.hpp"

namespace cartan::expr {

/// Parameter bindings. Integer parameters are the usual case; series
/// parameters (upper-case names) stand for a Dynkin type letter.
struct Env {
  std::map<std::string, long> ints;
  std::map<std::string, Series> series;
};

/// A basis symbol of a symbolic weight: pi(i,f), pistar(i,f), pi_v(i,f), x(i).
struct Symbol {
  std::string fn;
  long index = 0;
  long factor = 1;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Scalar plus a formal linear combination of symbols.
struct Value {
  Rational scalar;
  std::map<Symbol, Rational> terms;

  bool is_scalar() const { return terms.empty(); }
};

/// A parsed arithmetic/boolean expression over parameters.
///
/// Grammar: ||, &&, !, comparisons, + -, * / %, unary -, numbers,
/// identifiers, calls pi/pistar/pi_v/x, parentheses. A number directly
/// followed by an identifier or "(" multiplies ("2n" is "2*n").
class Expr {
 public:
  struct Node;

  Expr() = default;
  static Expr parse(std::string_view text);

  Value eval(const Env& env) const;
  Rational eval_scalar(const Env& env) const;
  /// Throws ConstraintError if the value is not an integer.
  long eval_int(const Env& env) const;
  bool eval_bool(const Env& env) const;

  const std::string& text() const { return text_; }
  bool empty() const { return !root_; }
  /// Names of parameters referenced, in order of first appearance.
  std::vector<std::string> variables() const;

  friend bool operator==(const Expr& a, const Expr& b) { return a.text_ == b.text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// A list of expressions: groups separated by ";", each group
/// `e1, e2, ... [: v = lo..hi] [when cond]`.
class ExprList {
 public:
  struct Group {
    std::vector<Expr> items;
    std::string var;
    Expr lo, hi;
    Expr when;
  };

  ExprList() = default;
  static ExprList parse(std::string_view text);

  std::vector<Value> eval(const Env& env) const;
  const std::string& text() const { return text_; }
  const std::vector<Group>& groups() const { return groups_; }

  friend bool operator==(const ExprList& a, const ExprList& b) { return a.text_ == b.text_; }

 private:
  std::vector<Group> groups_;
  std::string text_;
};

/// Splits text at top-level occurrences of `sep` (outside parentheses and brackets).
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim(std::string_view s);

}  // namespace cartan::expr
