#pragma once

#include "torickit/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torickit {

/// Univariate polynomial over the rationals, coefficients from degree 0 up.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RatVector coefficients);
  static Polynomial constant(const Rational &c);
  static Polynomial x();
  static Polynomial from_integers(const std::vector<long long> &coefficients);

  const RatVector &coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational evaluate(const Rational &x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Rational &s, const Polynomial &a);
  friend bool operator==(const Polynomial &, const Polynomial &) = default;
  friend bool operator<(const Polynomial &a, const Polynomial &b);

private:
  void trim();
  RatVector c_;
};

/// Quotient and remainder; throws "DivisionByZero".
std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial &a, const Polynomial &b);
Polynomial pow(const Polynomial &a, unsigned e);

/// Yun's algorithm: monic squarefree parts with multiplicities.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial &f);

/// Monic irreducible factors over the rationals with multiplicities, sorted
/// by (degree, coefficients). Constants have no factors.
std::vector<std::pair<Polynomial, unsigned>> factor(const Polynomial &f);

/// Integer polynomial with the same roots: denominators cleared, content removed,
/// positive leading coefficient.
IntVector primitive_integer_polynomial(const Polynomial &f);

Rational resultant(const Polynomial &f, const Polynomial &g);

std::string to_string(const Polynomial &p, const std::string &var = "x");

/// A point (s:t) of the projective line, stored normalized as (1:t/s) or (0:1).
struct ParamPoint {
  Rational s;
  Rational t;

  ParamPoint() : s(1), t(0) {}
  ParamPoint(const Rational &s_, const Rational &t_);

  friend bool operator==(const ParamPoint &, const ParamPoint &) = default;
  friend bool operator<(const ParamPoint &a, const ParamPoint &b);
};

std::string to_string(const ParamPoint &p);

/// Homogeneous form in (s, t): sum c_i s^(d-i) t^i. The zero form has no degree.
class BinaryForm {
public:
  BinaryForm() = default;
  BinaryForm(unsigned degree, RatVector coefficients);
  static BinaryForm zero() { return {}; }
  static BinaryForm constant(const Rational &c);
  static BinaryForm s_power(unsigned e);
  static BinaryForm from_polynomial(const Polynomial &p, unsigned degree);
  static BinaryForm from_integers(unsigned degree, const std::vector<long long> &coefficients);

  bool is_zero() const { return !degree_.has_value(); }
  std::optional<unsigned> degree() const { return degree_; }
  const RatVector &coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational evaluate(const ParamPoint &p) const;
  Rational evaluate(const Rational &s, const Rational &t) const;
  /// F(1, x).
  Polynomial dehomogenize() const;
  /// Exponent of s dividing the form (order of vanishing at (0:1)).
  unsigned s_order() const;
  /// Scaled so the dehomogenized part is monic (zero stays zero).
  BinaryForm normalized() const;

  friend BinaryForm operator*(const BinaryForm &a, const BinaryForm &b);
  friend BinaryForm operator*(const Rational &k, const BinaryForm &a);
  /// Sum of forms of equal degree; throws "Inhomogeneous" otherwise.
  friend BinaryForm operator+(const BinaryForm &a, const BinaryForm &b);
  friend bool operator==(const BinaryForm &, const BinaryForm &) = default;

private:
  std::optional<unsigned> degree_;
  RatVector c_;
};

BinaryForm pow(const BinaryForm &f, unsigned e);
/// Normalized gcd; the gcd of only zero forms is zero.
BinaryForm gcd(const std::vector<BinaryForm> &forms);
/// Normalized irreducible factors over the rationals; s comes first when it divides.
std::vector<std::pair<BinaryForm, unsigned>> factor(const BinaryForm &f);
/// Root of a linear form.
ParamPoint linear_root(const BinaryForm &f);
/// Sylvester resultant of two forms (degrees taken formally).
Rational resultant(const BinaryForm &f, const BinaryForm &g);

std::string to_string(const BinaryForm &f);

} // namespace torickit
