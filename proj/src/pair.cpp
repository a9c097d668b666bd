#include "cartan/pair.hpp"

#include <algorithm>
#include <cctype>

#include "cartan/catalog.hpp"
#include "cartan/error.hpp"

namespace cartan {

std::vector<SimpleType> ReductivePair::factor_types() const {
  std::vector<SimpleType> out;
  for (const auto& a : g) out.push_back(simple_type_of(a));
  return out;
}

std::vector<std::size_t> ReductivePair::offsets() const {
  std::vector<std::size_t> out;
  std::size_t o = 0;
  for (const auto& t : factor_types()) {
    out.push_back(o);
    o += static_cast<std::size_t>(t.rank());
  }
  return out;
}

std::size_t ReductivePair::semisimple_rank() const {
  std::size_t r = 0;
  for (const auto& t : factor_types()) r += static_cast<std::size_t>(t.rank());
  return r;
}

std::size_t ReductivePair::weight_dim() const { return semisimple_rank() + center_dim; }

long ReductivePair::dim_g() const {
  long d = static_cast<long>(center_dim);
  for (const auto& a : g) d += family_dim(a);
  return d;
}

long ReductivePair::dim_h() const {
  long d = static_cast<long>(center.dim());
  for (const auto& i : items) d += family_dim(i.name);
  return d;
}

ReductivePair make_pair(std::vector<AlgebraName> g, std::size_t center_dim, std::vector<PairItem> items) {
  ReductivePair p;
  p.g = std::move(g);
  p.center_dim = center_dim;
  p.items = std::move(items);
  p.center = RationalSubspace(p.weight_dim());
  return p;
}

namespace {

class PairParser {
 public:
  explicit PairParser(std::string_view text) : s_(text) {}

  ReductivePair parse() {
    parse_alg();
    pair_.center = RationalSubspace(pair_.weight_dim());
    parse_sub();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    pair_.center = RationalSubspace::span(center_vectors_, pair_.weight_dim());
    return pair_;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what + " at offset " + std::to_string(at), at);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w &&
        (pos_ + w.size() == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + w.size()])))) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  AlgebraName algebra_name() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string w = word();
    if (w.empty()) fail("expected an algebra name");
    std::size_t end = pos_;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      const auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("expected ')'");
      end = close + 1;
    }
    try {
      AlgebraName a = parse_algebra_name(s_.substr(start, end - start));
      pos_ = end;
      return a;
    } catch (const ParseError& e) {
      fail_at(e.what(), start + e.offset());
    }
  }

  void parse_alg() {
    for (;;) {
      const std::size_t start = (skip_ws(), pos_);
      if (accept_word("center")) {
        expect('(');
        pair_.center_dim = static_cast<std::size_t>(integer());
        expect(')');
        if (peek() != '/') fail("center(...) must be the last summand of g");
      } else {
        AlgebraName a = algebra_name();
        try {
          simple_type_of(a);
        } catch (const Error& e) {
          fail_at(e.what(), start);
        }
        pair_.g.push_back(std::move(a));
      }
      if (accept('/')) return;
      if (!accept('+')) fail(at_end() ? "expected '/'" : "expected '+' or '/'");
    }
  }

  void parse_sub() {
    if (at_end()) fail("expected a subalgebra");
    if (peek() == '0') {
      ++pos_;
      return;
    }
    do parse_term();
    while (accept('+'));
  }

  std::size_t factor_ref() {
    const std::size_t at = (skip_ws(), pos_);
    if (accept('#')) {
      const long n = integer();
      if (n < 1 || static_cast<std::size_t>(n) > pair_.g.size())
        fail_at("no factor #" + std::to_string(n), at);
      return static_cast<std::size_t>(n - 1);
    }
    const AlgebraName a = algebra_name();
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < pair_.g.size(); ++i)
      if (pair_.g[i] == a) hits.push_back(i);
    if (hits.empty()) fail_at("no factor " + to_string(a), at);
    if (hits.size() > 1) fail_at("ambiguous factor " + to_string(a) + "; use #i", at);
    return hits[0];
  }

  std::vector<std::size_t> targets() {
    std::vector<std::size_t> t;
    if (!accept_word("in")) {
      if (pair_.g.size() != 1) fail("item needs 'in' when g has several factors");
      return {0};
    }
    do t.push_back(factor_ref());
    while (accept('*'));
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) fail("repeated target factor");
    return t;
  }

  void parse_term() {
    const std::size_t start = (skip_ws(), pos_);
    if (s_.substr(pos_, 2) == "z=") {
      pos_ += 2;
      parse_center_block();
      return;
    }
    if (pos_ + 1 < s_.size() && s_[pos_] == 'T' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      parse_tableref();
      return;
    }
    AlgebraName a = algebra_name();
    std::optional<ItemKey> key;
    try {
      key = item_key(a);
    } catch (const Error& e) {
      fail_at(e.what(), start);
    }
    auto t = targets();
    if (key) pair_.items.push_back(PairItem{std::move(a), std::move(t)});
  }

  void parse_center_block() {
    expect('[');
    if (accept(']')) return;
    do center_vectors_.push_back(parse_vector());
    while (accept(','));
    expect(']');
  }

  Rational coefficient() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) return 1;
    Rational q;
    try {
      q = parse_rational(std::string(s_.substr(start, pos_ - start)));
    } catch (const Error&) {
      fail_at("bad coefficient", start);
    }
    expect('*');
    return q;
  }

  RationalVector parse_vector() {
    RationalVector v(pair_.weight_dim());
    const auto offs = pair_.offsets();
    const auto types = pair_.factor_types();
    int sign = accept('-') ? -1 : 1;
    for (;;) {
      const Rational c = coefficient() * sign;
      const std::size_t at = (skip_ws(), pos_);
      if (accept_word("pi_v")) {
        expect('(');
        const long i = integer();
        expect(')');
        std::size_t f = 0;
        if (accept('#')) {
          const long n = integer();
          if (n < 1 || static_cast<std::size_t>(n) > pair_.g.size()) fail_at("no factor #" + std::to_string(n), at);
          f = static_cast<std::size_t>(n - 1);
        } else if (pair_.g.size() != 1) {
          fail_at("pi_v needs #factor when g has several factors", at);
        }
        if (pair_.g.empty()) fail_at("pi_v without simple factors", at);
        if (i < 1 || i > types[f].rank()) fail_at("pi_v index out of range", at);
        v[offs[f] + static_cast<std::size_t>(i - 1)] += c;
      } else if (accept_word("c")) {
        expect('(');
        const long j = integer();
        expect(')');
        if (j < 1 || static_cast<std::size_t>(j) > pair_.center_dim) fail_at("no center coordinate c(" + std::to_string(j) + ")", at);
        v[pair_.semisimple_rank() + static_cast<std::size_t>(j - 1)] += c;
      } else {
        fail("expected pi_v(i) or c(j)");
      }
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else return v;
    }
  }

  void parse_tableref() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    while (i < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i])) || s_[i] == '.')) ++i;
    TableId table;
    try {
      table = parse_table_id(s_.substr(start, i - start));
    } catch (const ParseError& e) {
      fail_at(e.what(), start);
    }
    if (table != TableId::T1_4 && table != TableId::T1_6) fail_at("only T1.4 and T1.6 rows describe subalgebras", start);
    pos_ = i;
    expect(':');
    const std::string row = word();
    std::string params;
    if (accept('(')) {
      const auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("expected ')'");
      params = std::string(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
    }
    Instance inst;
    try {
      const auto& entry = Catalog::instance().lookup(table, row);
      inst = instantiate(entry, parse_params(entry, params));
    } catch (const ParseError& e) {
      fail_at(e.what(), start);
    } catch (const Error& e) {
      fail_at(e.what(), start);
    }
    std::vector<std::size_t> map;
    if (accept_word("in")) {
      do {
        expect('#');
        const long n = integer();
        if (n < 1 || static_cast<std::size_t>(n) > pair_.g.size()) fail_at("no factor #" + std::to_string(n), start);
        map.push_back(static_cast<std::size_t>(n - 1));
      } while (accept('*'));
    } else {
      for (std::size_t f = 0; f < inst.g.size(); ++f) map.push_back(f);
    }
    if (map.size() != inst.g.size()) fail_at(inst.label() + " spans " + std::to_string(inst.g.size()) + " factors", start);
    const auto types = pair_.factor_types();
    for (std::size_t f = 0; f < map.size(); ++f)
      if (map[f] >= types.size() || !(types[map[f]] == inst.g[f]))
        fail_at(inst.label() + " does not fit the factors of g", start);
    for (const auto& item : inst.h) {
      if (!item_key(item.name)) continue;
      PairItem p{item.name, {}};
      for (auto t : item.targets) p.targets.push_back(map[t]);
      std::sort(p.targets.begin(), p.targets.end());
      pair_.items.push_back(std::move(p));
    }
    if (table == TableId::T1_6) {
      RationalVector v(pair_.weight_dim());
      v[pair_.offsets()[map[0]] + inst.x_index] = 1;
      center_vectors_.push_back(std::move(v));
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  ReductivePair pair_;
  std::vector<RationalVector> center_vectors_;
};

std::string format_targets(const ReductivePair& p, const std::vector<std::size_t>& t) {
  (void)p;
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "*#" : "#") + std::to_string(t[i] + 1);
  return out;
}

}  // namespace

ReductivePair parse_pair(std::string_view text) { return PairParser(text).parse(); }

std::string format_coweight(const ReductivePair& p, const RationalVector& v) {
  const auto offs = p.offsets();
  const auto types = p.factor_types();
  std::string out;
  auto term = [&](const Rational& c, const std::string& sym) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += sym;
  };
  for (std::size_t f = 0; f < types.size(); ++f)
    for (int i = 0; i < types[f].rank(); ++i)
      term(v[offs[f] + static_cast<std::size_t>(i)],
           "pi_v(" + std::to_string(i + 1) + ")#" + std::to_string(f + 1));
  for (std::size_t j = 0; j < p.center_dim; ++j)
    term(v[p.semisimple_rank() + j], "c(" + std::to_string(j + 1) + ")");
  return out.empty() ? "0" : out;
}

RationalVector to_bourbaki(const ReductivePair& p, const RationalVector& v) {
  RationalVector out = v;
  const auto offs = p.offsets();
  const auto types = p.factor_types();
  for (std::size_t f = 0; f < types.size(); ++f) {
    const auto& perm = root_system(types[f]).vo_to_bourbaki();
    for (std::size_t i = 0; i < perm.size(); ++i) out[offs[f] + perm[i]] = v[offs[f] + i];
  }
  return out;
}

std::string format_weight(const ReductivePair& p, const RationalVector& v, bool bourbaki) {
  const RationalVector w = bourbaki ? to_bourbaki(p, v) : v;
  const auto offs = p.offsets();
  const auto types = p.factor_types();
  std::string out;
  auto term = [&](const Rational& c, const std::string& sym) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += sym;
  };
  for (std::size_t f = 0; f < types.size(); ++f)
    for (int i = 0; i < types[f].rank(); ++i)
      term(w[offs[f] + static_cast<std::size_t>(i)],
           "pi(" + std::to_string(i + 1) + ")" + (types.size() > 1 ? "#" + std::to_string(f + 1) : ""));
  for (std::size_t j = 0; j < p.center_dim; ++j) term(w[p.semisimple_rank() + j], "c(" + std::to_string(j + 1) + ")");
  return out.empty() ? "0" : out;
}

std::string to_string(const ReductivePair& p) {
  std::string out;
  for (const auto& a : p.g) out += (out.empty() ? "" : " + ") + to_string(a);
  if (p.center_dim) out += (out.empty() ? "" : " + ") + std::string("center(") + std::to_string(p.center_dim) + ")";
  out += " / ";
  std::string sub;
  for (const auto& i : p.items)
    sub += (sub.empty() ? "" : " + ") + to_string(i.name) + " in " + format_targets(p, i.targets);
  if (p.center.dim()) {
    std::string z = "z=[";
    for (std::size_t k = 0; k < p.center.basis().size(); ++k)
      z += (k ? ", " : "") + format_coweight(p, p.center.basis()[k]);
    sub += (sub.empty() ? "" : " + ") + z + "]";
  }
  return out + (sub.empty() ? "0" : sub);
}

}  // namespace cartan
