#include "cartan/rational.hpp"

#include "cartan/error.hpp"

namespace cartan {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw DomainError("integer out of range: " + to_string(q));
  return q.get_num().get_si();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector& axpy(RationalVector& y, const Rational& a, const RationalVector& x) {
  if (x.size() != y.size()) throw DimensionError("axpy on vectors of different length");
  if (a == 0) return y;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
  return y;
}

}  // namespace cartan
