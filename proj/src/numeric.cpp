#include "torickit/numeric.hpp"

#include "torickit/errors.hpp"

#include <stdexcept>

namespace torickit {

Integer gcd(const Integer &a, const Integer &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer &a, const Integer &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

} // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text))
    throw ToricError("ParseError", "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+')
    s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ToricError("ParseError", "signed denominator in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0)
    throw ToricError("ParseError", "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer &v) { return v.get_str(); }

std::string to_string(const Rational &v) { return v.get_str(); }

IntVector to_integers(const std::vector<long long> &v) {
  IntVector out;
  out.reserve(v.size());
  for (long long x : v)
    out.emplace_back(static_cast<long>(x));
  return out;
}

RatVector to_rationals(const IntVector &v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.emplace_back(x);
  return out;
}

Integer dot(const IntVector &a, const IntVector &b) {
  if (a.size() != b.size())
    throw ToricError("DimensionMismatch", "dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector &a, const RatVector &b) {
  if (a.size() != b.size())
    throw ToricError("DimensionMismatch", "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector &a, const IntVector &b) {
  if (a.size() != b.size())
    throw ToricError("DimensionMismatch", "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

IntVector primitive_integer_multiple(const RatVector &v) {
  Integer den = 1;
  for (const auto &x : v)
    den = lcm(den, x.get_den());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto &x : out)
      x /= g;
  return out;
}

std::string format_vector(const IntVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string format_vector(const RatVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

} // namespace torickit
