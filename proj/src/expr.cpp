#include "cartan/expr.hpp"

#include <algorithm>
#include <cctype>

#include "cartan/error.hpp"

namespace cartan::expr {

struct Expr::Node {
  enum Kind { Num, Var, Neg, Not, Bin, Call } kind;
  Rational num;
  std::string name;  // variable, function, or binary operator
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

struct Token {
  enum Kind { Num, Ident, Op, End } kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Num, std::string(s.substr(start, i - start)), start});
      // Implicit multiplication: "2n", "2(n-1)".
      if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '('))
        out.push_back({Token::Op, "*", i});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    static const char* two[] = {"&&", "||", "<=", ">=", "==", "!="};
    bool matched = false;
    for (const char* t : two)
      if (s.substr(i, 2) == t) {
        out.push_back({Token::Op, t, start});
        i += 2;
        matched = true;
        break;
      }
    if (matched) continue;
    if (std::string_view("+-*/%()<>!,").find(c) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, c), start});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  NodePtr parse_all() {
    auto n = parse_or();
    if (peek().kind != Token::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const std::string& op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& op) {
    if (!accept(op)) throw ParseError("expected '" + op + "'", peek().offset);
  }

  static NodePtr bin(std::string op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Node::Bin;
    n->name = std::move(op);
    n->kids = {std::move(a), std::move(b)};
    return n;
  }

  NodePtr parse_or() {
    auto a = parse_and();
    while (accept("||")) a = bin("||", a, parse_and());
    return a;
  }
  NodePtr parse_and() {
    auto a = parse_not();
    while (accept("&&")) a = bin("&&", a, parse_not());
    return a;
  }
  NodePtr parse_not() {
    if (accept("!")) {
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Not;
      n->kids = {parse_not()};
      return n;
    }
    return parse_cmp();
  }
  NodePtr parse_cmp() {
    auto a = parse_add();
    for (const char* op : {"<=", ">=", "==", "!=", "<", ">"})
      if (accept(op)) return bin(op, a, parse_add());
    return a;
  }
  NodePtr parse_add() {
    auto a = parse_mul();
    for (;;) {
      if (accept("+")) a = bin("+", a, parse_mul());
      else if (accept("-")) a = bin("-", a, parse_mul());
      else return a;
    }
  }
  NodePtr parse_mul() {
    auto a = parse_unary();
    for (;;) {
      if (accept("*")) a = bin("*", a, parse_unary());
      else if (accept("/")) a = bin("/", a, parse_unary());
      else if (accept("%")) a = bin("%", a, parse_unary());
      else return a;
    }
  }
  NodePtr parse_unary() {
    if (accept("-")) {
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Neg;
      n->kids = {parse_unary()};
      return n;
    }
    return parse_primary();
  }
  NodePtr parse_primary() {
    const Token t = peek();
    if (t.kind == Token::Num) {
      ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Expr::Node::Num;
      n->num = Rational(t.text);
      return n;
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->name = t.text;
      if (accept("(")) {
        n->kind = Expr::Node::Call;
        if (t.text != "pi" && t.text != "pistar" && t.text != "pi_v" && t.text != "x")
          throw ParseError("unknown function '" + t.text + "'", t.offset);
        n->kids.push_back(parse_or());
        while (accept(",")) n->kids.push_back(parse_or());
        expect(")");
        if (n->kids.size() > 2) throw ParseError("too many arguments", t.offset);
      } else {
        n->kind = Expr::Node::Var;
      }
      return n;
    }
    if (accept("(")) {
      auto n = parse_or();
      expect(")");
      return n;
    }
    throw ParseError(t.kind == Token::End ? "unexpected end of expression"
                                          : "unexpected '" + t.text + "'",
                     t.offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Value scalar(Rational q) { return Value{std::move(q), {}}; }

const Rational& need_scalar(const Value& v, const char* what) {
  if (!v.is_scalar()) throw ContractError(std::string(what) + " applied to a weight");
  return v.scalar;
}

long need_int(const Rational& q, const char* what) {
  if (!is_integer(q)) throw ConstraintError(std::string(what) + " is not an integer: " + to_string(q));
  return to_long(q);
}

Value add(Value a, const Value& b, int sign) {
  a.scalar += sign * b.scalar;
  for (const auto& [s, c] : b.terms) {
    auto& slot = a.terms[s];
    slot += sign * c;
    if (slot == 0) a.terms.erase(s);
  }
  return a;
}

Value scale(Value a, const Rational& c) {
  a.scalar *= c;
  if (c == 0) a.terms.clear();
  for (auto& [s, v] : a.terms) v *= c;
  return a;
}

Value eval_node(const Expr::Node& n, const Env& env) {
  switch (n.kind) {
    case Expr::Node::Num: return scalar(n.num);
    case Expr::Node::Var: {
      const auto it = env.ints.find(n.name);
      if (it == env.ints.end()) throw ContractError("unbound parameter '" + n.name + "'");
      return scalar(Rational(it->second));
    }
    case Expr::Node::Neg: return scale(eval_node(*n.kids[0], env), -1);
    case Expr::Node::Not:
      return scalar(need_scalar(eval_node(*n.kids[0], env), "!") == 0 ? 1 : 0);
    case Expr::Node::Call: {
      Symbol s;
      s.fn = n.name;
      s.index = need_int(need_scalar(eval_node(*n.kids[0], env), "index"), "weight index");
      if (n.kids.size() > 1)
        s.factor = need_int(need_scalar(eval_node(*n.kids[1], env), "factor"), "factor index");
      Value v;
      v.terms[s] = 1;
      return v;
    }
    case Expr::Node::Bin: break;
  }
  const Value a = eval_node(*n.kids[0], env);
  const std::string& op = n.name;
  if (op == "&&" && need_scalar(a, "&&") == 0) return scalar(0);
  if (op == "||" && need_scalar(a, "||") != 0) return scalar(1);
  const Value b = eval_node(*n.kids[1], env);
  if (op == "+") return add(a, b, 1);
  if (op == "-") return add(a, b, -1);
  if (op == "*") {
    if (a.is_scalar()) return scale(b, a.scalar);
    return scale(a, need_scalar(b, "*"));
  }
  if (op == "/") {
    const Rational& d = need_scalar(b, "/");
    if (d == 0) throw ConstraintError("division by zero");
    return scale(a, 1 / d);
  }
  if (op == "%") {
    const long x = need_int(need_scalar(a, "%"), "operand of %");
    const long m = need_int(need_scalar(b, "%"), "operand of %");
    if (m <= 0) throw ConstraintError("modulus must be positive");
    return scalar(Rational(((x % m) + m) % m));
  }
  if (op == "&&" || op == "||") return scalar(need_scalar(b, op.c_str()) != 0 ? 1 : 0);
  const Rational& x = need_scalar(a, op.c_str());
  const Rational& y = need_scalar(b, op.c_str());
  bool r = false;
  if (op == "<") r = x < y;
  else if (op == "<=") r = x <= y;
  else if (op == ">") r = x > y;
  else if (op == ">=") r = x >= y;
  else if (op == "==") r = x == y;
  else if (op == "!=") r = x != y;
  return scalar(r ? 1 : 0);
}

void collect_vars(const Expr::Node& n, std::vector<std::string>& out) {
  if (n.kind == Expr::Node::Var &&
      std::find(out.begin(), out.end(), n.name) == out.end())
    out.push_back(n.name);
  for (const auto& k : n.kids) collect_vars(*k, out);
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Offset of the top-level keyword `word`, or npos.
std::size_t find_keyword(std::string_view s, std::string_view word) {
  int depth = 0;
  for (std::size_t i = 0; i + word.size() <= s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && s.substr(i, word.size()) == word && (i == 0 || !is_word_char(s[i - 1])) &&
        (i + word.size() == s.size() || !is_word_char(s[i + word.size()])))
      return i;
  }
  return std::string_view::npos;
}

}  // namespace

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(std::string(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(std::string(text.substr(start)));
  return out;
}

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.text_ = trim(text);
  Parser p(e.text_);
  e.root_ = p.parse_all();
  return e;
}

Value Expr::eval(const Env& env) const {
  if (!root_) throw ContractError("evaluating an empty expression");
  return eval_node(*root_, env);
}

Rational Expr::eval_scalar(const Env& env) const { return need_scalar(eval(env), "scalar context"); }

long Expr::eval_int(const Env& env) const { return need_int(eval_scalar(env), text_.c_str()); }

bool Expr::eval_bool(const Env& env) const { return eval_scalar(env) != 0; }

std::vector<std::string> Expr::variables() const {
  std::vector<std::string> out;
  if (root_) collect_vars(*root_, out);
  return out;
}

ExprList ExprList::parse(std::string_view text) {
  ExprList list;
  list.text_ = trim(text);
  if (list.text_.empty()) return list;
  for (const auto& raw : split_top_level(list.text_, ';')) {
    std::string g = trim(raw);
    if (g.empty()) continue;
    Group group;
    if (const auto w = find_keyword(g, "when"); w != std::string_view::npos) {
      group.when = Expr::parse(g.substr(w + 4));
      g = trim(g.substr(0, w));
    }
    if (const auto c = g.find(':'); c != std::string::npos) {
      const std::string range = g.substr(c + 1);
      g = trim(g.substr(0, c));
      const auto eq = range.find('=');
      const auto dots = range.find("..");
      if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        throw ParseError("malformed range '" + trim(range) + "'", c);
      group.var = trim(range.substr(0, eq));
      group.lo = Expr::parse(range.substr(eq + 1, dots - eq - 1));
      group.hi = Expr::parse(range.substr(dots + 2));
    }
    for (const auto& item : split_top_level(g, ',')) group.items.push_back(Expr::parse(item));
    list.groups_.push_back(std::move(group));
  }
  return list;
}

std::vector<Value> ExprList::eval(const Env& env) const {
  std::vector<Value> out;
  for (const auto& g : groups_) {
    if (g.var.empty()) {
      if (!g.when.empty() && !g.when.eval_bool(env)) continue;
      for (const auto& e : g.items) out.push_back(e.eval(env));
      continue;
    }
    const long lo = g.lo.eval_int(env);
    const long hi = g.hi.eval_int(env);
    Env local = env;
    for (long v = lo; v <= hi; ++v) {
      local.ints[g.var] = v;
      if (!g.when.empty() && !g.when.eval_bool(local)) continue;
      for (const auto& e : g.items) out.push_back(e.eval(local));
    }
  }
  return out;
}

}  // namespace cartan::expr
