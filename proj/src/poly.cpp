#include "torickit/poly.hpp"

#include "torickit/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace torickit {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RatVector coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational &c) { return Polynomial(RatVector{c}); }

Polynomial Polynomial::x() { return Polynomial(RatVector{0, 1}); }

Polynomial Polynomial::from_integers(const std::vector<long long> &coefficients) {
  return Polynomial(to_rationals(to_integers(coefficients)));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Rational Polynomial::evaluate(const Rational &x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  RatVector d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * static_cast<unsigned long>(i));
  return Polynomial(d);
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return *this;
  return (Rational(1) / leading()) * *this;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  RatVector c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    c[i] += b.c_[i];
  return Polynomial(c);
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  RatVector c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(c);
}

Polynomial operator*(const Rational &s, const Polynomial &a) {
  RatVector c = a.c_;
  for (auto &x : c)
    x *= s;
  return Polynomial(c);
}

bool operator<(const Polynomial &a, const Polynomial &b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i])
      return a.c_[i] < b.c_[i];
  return false;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b) {
  if (b.is_zero())
    throw ToricError("DivisionByZero", "polynomial division by zero");
  RatVector r = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db)
    return {Polynomial(), a};
  RatVector q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    Rational coef = r[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0)
      continue;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= coef * b.coefficient(static_cast<std::size_t>(j));
  }
  return {Polynomial(q), Polynomial(r)};
}

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial pow(const Polynomial &a, unsigned e) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < e; ++i)
    out = out * a;
  return out;
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial &f) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (f.degree() <= 0)
    return out;
  Polynomial fm = f.monic();
  Polynomial a = gcd(fm, fm.derivative());
  Polynomial b = divmod(fm, a).first;
  Polynomial c = divmod(fm.derivative(), a).first;
  Polynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0)
      out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

IntVector primitive_integer_polynomial(const Polynomial &f) {
  if (f.is_zero())
    return {};
  Integer den = 1;
  for (const auto &c : f.coefficients())
    den = lcm(den, c.get_den());
  IntVector out;
  Integer content = 0;
  for (const auto &c : f.coefficients()) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back(v);
    content = gcd(content, v);
  }
  if (f.leading() < 0)
    content = -content;
  for (auto &v : out)
    v /= content;
  return out;
}

// ------------------------------------------------------ modular polynomials

namespace {

using ZPoly = IntVector; // coefficients from degree 0 up

Integer mod_pos(const Integer &a, const Integer &m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer sym_mod(const Integer &a, const Integer &m) {
  Integer r = mod_pos(a, m);
  if (2 * r > m)
    r -= m;
  return r;
}

Integer inv_mod(const Integer &a, const Integer &m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ToricError("Internal", "non-invertible leading coefficient");
  return r;
}

void ztrim(ZPoly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

long zdeg(const ZPoly &a) { return static_cast<long>(a.size()) - 1; }

ZPoly zreduce(ZPoly a, const Integer &m) {
  for (auto &c : a)
    c = mod_pos(c, m);
  ztrim(a);
  return a;
}

ZPoly zadd(const ZPoly &a, const ZPoly &b, const Integer &m) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] += b[i];
  return zreduce(std::move(c), m);
}

ZPoly zsub(const ZPoly &a, const ZPoly &b, const Integer &m) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] -= b[i];
  return zreduce(std::move(c), m);
}

ZPoly zmul(const ZPoly &a, const ZPoly &b, const Integer &m) {
  if (a.empty() || b.empty())
    return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  return zreduce(std::move(c), m);
}

ZPoly zscale(const ZPoly &a, const Integer &k, const Integer &m) {
  ZPoly c = a;
  for (auto &x : c)
    x *= k;
  return zreduce(std::move(c), m);
}

std::pair<ZPoly, ZPoly> zdivmod(const ZPoly &a, const ZPoly &b, const Integer &m) {
  ZPoly r = zreduce(a, m);
  const long db = zdeg(b);
  if (zdeg(r) < db)
    return {{}, r};
  Integer inv = inv_mod(b.back(), m);
  ZPoly q(static_cast<std::size_t>(zdeg(r) - db + 1), Integer(0));
  for (long i = zdeg(r); i >= db; --i) {
    Integer coef = mod_pos(r[static_cast<std::size_t>(i)] * inv, m);
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0)
      continue;
    for (long j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = mod_pos(r[idx] - coef * b[static_cast<std::size_t>(j)], m);
    }
  }
  ztrim(q);
  ztrim(r);
  return {q, r};
}

ZPoly zmonic(const ZPoly &a, const Integer &m) {
  if (a.empty())
    return a;
  return zscale(a, inv_mod(a.back(), m), m);
}

ZPoly zgcd(ZPoly a, ZPoly b, const Integer &p) {
  a = zreduce(a, p);
  b = zreduce(b, p);
  while (!b.empty()) {
    ZPoly r = zdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zmonic(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b
std::pair<ZPoly, ZPoly> zbezout(const ZPoly &a, const ZPoly &b, const Integer &p) {
  ZPoly r0 = zreduce(a, p), r1 = zreduce(b, p);
  ZPoly s0 = {Integer(1)}, s1 = {};
  ZPoly t0 = {}, t1 = {Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = zdivmod(r0, r1, p);
    ZPoly s2 = zsub(s0, zmul(q, s1, p), p);
    ZPoly t2 = zsub(t0, zmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zdeg(r0) != 0)
    throw ToricError("Internal", "Hensel factors are not coprime");
  Integer inv = inv_mod(r0[0], p);
  return {zscale(s0, inv, p), zscale(t0, inv, p)};
}

ZPoly zpowmod(const ZPoly &base, Integer e, const ZPoly &modulus, const Integer &p) {
  ZPoly result = {Integer(1)};
  ZPoly b = zdivmod(base, modulus, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = zdivmod(zmul(result, b, p), modulus, p).second;
    b = zdivmod(zmul(b, b, p), modulus, p).second;
    e /= 2;
  }
  return result;
}

ZPoly zderivative(const ZPoly &a, const Integer &m) {
  ZPoly d;
  for (std::size_t i = 1; i < a.size(); ++i)
    d.push_back(a[i] * static_cast<unsigned long>(i));
  return zreduce(std::move(d), m);
}

std::vector<ZPoly> equal_degree_split(const ZPoly &g, long d, const Integer &p, std::mt19937_64 &rng) {
  if (zdeg(g) == d)
    return {g};
  Integer e = 1;
  for (long i = 0; i < d; ++i)
    e *= p;
  e = (e - 1) / 2;
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  for (;;) {
    ZPoly a(static_cast<std::size_t>(zdeg(g)));
    for (auto &c : a)
      c = gr.get_z_range(p);
    ztrim(a);
    if (zdeg(a) < 1)
      continue;
    ZPoly b = zsub(zpowmod(a, e, g, p), {Integer(1)}, p);
    ZPoly h = zgcd(b, g, p);
    if (zdeg(h) > 0 && zdeg(h) < zdeg(g)) {
      auto left = equal_degree_split(h, d, p, rng);
      auto right = equal_degree_split(zdivmod(g, h, p).first, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

// monic squarefree f over F_p
std::vector<ZPoly> factor_mod_p(const ZPoly &f, const Integer &p) {
  std::mt19937_64 rng(0x5eedULL);
  std::vector<ZPoly> out;
  ZPoly rest = f;
  ZPoly x = {Integer(0), Integer(1)};
  ZPoly h = x;
  long i = 1;
  while (zdeg(rest) >= 2 * i) {
    h = zpowmod(h, p, rest, p);
    ZPoly g = zgcd(zsub(h, x, p), rest, p);
    if (zdeg(g) > 0) {
      auto parts = equal_degree_split(g, i, p, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      rest = zdivmod(rest, g, p).first;
      h = zdivmod(h, rest, p).second;
    }
    ++i;
  }
  if (zdeg(rest) > 0)
    out.push_back(zmonic(rest, p));
  return out;
}

// f = g * h mod p^k from f = g * h mod p, g monic
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly &f, ZPoly g, ZPoly h, const Integer &p, unsigned k) {
  auto [s, t] = zbezout(g, h, p);
  Integer m = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly gh(g.size() + h.size() - 1, Integer(0));
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < h.size(); ++b)
        gh[a + b] += g[a] * h[b];
    ZPoly e(std::max(f.size(), gh.size()), Integer(0));
    for (std::size_t a = 0; a < f.size(); ++a)
      e[a] += f[a];
    for (std::size_t a = 0; a < gh.size(); ++a)
      e[a] -= gh[a];
    for (auto &c : e)
      c /= m; // exact
    e = zreduce(e, p);
    auto [q, dg] = zdivmod(zmul(t, e, p), g, p);
    ZPoly dh = zadd(zmul(s, e, p), zmul(q, h, p), p);
    Integer next = m * p;
    g.resize(std::max(g.size(), dg.size()), Integer(0));
    for (std::size_t a = 0; a < dg.size(); ++a)
      g[a] += m * dg[a];
    h.resize(std::max(h.size(), dh.size()), Integer(0));
    for (std::size_t a = 0; a < dh.size(); ++a)
      h[a] += m * dh[a];
    g = zreduce(g, next);
    h = zreduce(h, next);
    m = next;
  }
  return {g, h};
}

ZPoly symmetric(const ZPoly &a, const Integer &m) {
  ZPoly out = a;
  for (auto &c : out)
    c = sym_mod(c, m);
  ztrim(out);
  return out;
}

Integer content_of(const ZPoly &a) {
  Integer g = 0;
  for (const auto &c : a)
    g = gcd(g, c);
  return g;
}

ZPoly primitive_part(const ZPoly &a) {
  Integer g = content_of(a);
  if (g == 0)
    return a;
  if (a.back() < 0)
    g = -g;
  ZPoly out = a;
  for (auto &c : out)
    c /= g;
  return out;
}

// exact quotient a / b over Z, if any
std::optional<ZPoly> zexact_div(const ZPoly &a, const ZPoly &b) {
  ZPoly r = a;
  const long db = zdeg(b);
  if (zdeg(r) < db)
    return std::nullopt;
  ZPoly q(static_cast<std::size_t>(zdeg(r) - db + 1), Integer(0));
  for (long i = zdeg(r); i >= db; --i) {
    Integer num = r[static_cast<std::size_t>(i)];
    if (num == 0)
      continue;
    if (num % b.back() != 0)
      return std::nullopt;
    Integer coef = num / b.back();
    q[static_cast<std::size_t>(i - db)] = coef;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= coef * b[static_cast<std::size_t>(j)];
  }
  ztrim(r);
  if (!r.empty())
    return std::nullopt;
  ztrim(q);
  return q;
}

// Zassenhaus: irreducible factors over Z of a primitive squarefree f.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly &f) {
  if (zdeg(f) <= 1)
    return {f};
  const Integer lc = f.back();
  Integer p = 2;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p == 2 || lc % p == 0)
      continue;
    ZPoly fp = zreduce(f, p);
    if (zdeg(fp) != zdeg(f))
      continue;
    if (zdeg(zgcd(fp, zderivative(fp, p), p)) == 0)
      break;
  }
  std::vector<ZPoly> modular = factor_mod_p(zmonic(zreduce(f, p), p), p);
  if (modular.size() == 1)
    return {f};

  // Mignotte-style bound on the coefficients of factors of lc * f
  Integer norm2 = 0;
  for (const auto &c : f)
    norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm * abs(lc);
  for (long i = 0; i < zdeg(f); ++i)
    bound *= 2;
  unsigned k = 1;
  Integer modulus = p;
  while (modulus <= 2 * bound) {
    modulus *= p;
    ++k;
  }

  // lift one factor at a time
  std::vector<ZPoly> lifted;
  ZPoly current = zreduce(f, modulus);
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    ZPoly rest = {mod_pos(current.back(), p)};
    for (std::size_t j = i + 1; j < modular.size(); ++j)
      rest = zmul(rest, modular[j], p);
    auto [g, h] = hensel_lift(current, modular[i], rest, p, k);
    lifted.push_back(g);
    current = h;
  }
  lifted.push_back(zmonic(current, modulus));

  // recombination over subsets of increasing size
  std::vector<ZPoly> out;
  ZPoly remaining = f;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i)
      pick[i] = i;
    for (;;) {
      ZPoly cand = {mod_pos(remaining.back(), modulus)};
      for (std::size_t i : pick)
        cand = zmul(cand, lifted[i], modulus);
      cand = primitive_part(symmetric(cand, modulus));
      if (auto q = zexact_div(remaining, cand)) {
        out.push_back(cand);
        remaining = *q;
        for (std::size_t i = size; i-- > 0;)
          lifted.erase(lifted.begin() + static_cast<long>(pick[i]));
        found = true;
        break;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == lifted.size() - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j)
        pick[j] = pick[j - 1] + 1;
    }
    if (!found)
      ++size;
  }
  if (zdeg(remaining) > 0)
    out.push_back(primitive_part(remaining));
  return out;
}

Rational rational_determinant(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0)
        continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j)
        m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Sylvester determinant; a and b list coefficients from the leading one down.
Rational sylvester(const RatVector &a, const RatVector &b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t n = da + db;
  if (n == 0)
    return 1;
  std::vector<RatVector> m(n, RatVector(n, Rational(0)));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t j = 0; j <= da; ++j)
      m[r][r + j] = a[j];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t j = 0; j <= db; ++j)
      m[db + r][r + j] = b[j];
  return rational_determinant(m);
}

} // namespace

std::vector<std::pair<Polynomial, unsigned>> factor(const Polynomial &f) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  for (const auto &[part, mult] : squarefree_decomposition(f)) {
    for (const auto &z : factor_squarefree_integer(primitive_integer_polynomial(part)))
      out.emplace_back(Polynomial(to_rationals(z)).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  return out;
}

Rational resultant(const Polynomial &f, const Polynomial &g) {
  if (f.is_zero() || g.is_zero())
    return 0;
  RatVector a(f.coefficients().rbegin(), f.coefficients().rend());
  RatVector b(g.coefficients().rbegin(), g.coefficients().rend());
  return sylvester(a, b);
}

std::string to_string(const Polynomial &p, const std::string &var) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    Rational c = p.coefficients()[i];
    if (c == 0)
      continue;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    Rational a = abs(c);
    if (a != 1 || i == 0)
      os << to_string(a) << (i > 0 ? "*" : "");
    if (i > 0)
      os << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- ParamPoint

ParamPoint::ParamPoint(const Rational &s_, const Rational &t_) {
  if (s_ == 0 && t_ == 0)
    throw ToricError("InvalidParameter", "(0:0) is not a point");
  if (s_ != 0) {
    s = 1;
    t = t_ / s_;
  } else {
    s = 0;
    t = 1;
  }
}

bool operator<(const ParamPoint &a, const ParamPoint &b) {
  if (a.s != b.s)
    return a.s < b.s;
  return a.t < b.t;
}

std::string to_string(const ParamPoint &p) { return "(" + to_string(p.s) + ":" + to_string(p.t) + ")"; }

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(unsigned degree, RatVector coefficients) {
  if (coefficients.size() != degree + 1)
    throw ToricError("DimensionMismatch", "a form of degree " + std::to_string(degree) + " needs " +
                                              std::to_string(degree + 1) + " coefficients");
  if (std::any_of(coefficients.begin(), coefficients.end(), [](const Rational &c) { return c != 0; })) {
    degree_ = degree;
    c_ = std::move(coefficients);
  }
}

BinaryForm BinaryForm::constant(const Rational &c) { return BinaryForm(0, {c}); }

BinaryForm BinaryForm::s_power(unsigned e) {
  RatVector c(e + 1, Rational(0));
  c[0] = 1;
  return BinaryForm(e, c);
}

BinaryForm BinaryForm::from_polynomial(const Polynomial &p, unsigned degree) {
  if (p.degree() > static_cast<long>(degree))
    throw ToricError("DimensionMismatch", "polynomial degree exceeds the form degree");
  RatVector c(degree + 1, Rational(0));
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    c[i] = p.coefficients()[i];
  return BinaryForm(degree, c);
}

BinaryForm BinaryForm::from_integers(unsigned degree, const std::vector<long long> &coefficients) {
  return BinaryForm(degree, to_rationals(to_integers(coefficients)));
}

Rational BinaryForm::evaluate(const Rational &s, const Rational &t) const {
  if (is_zero())
    return 0;
  const unsigned d = *degree_;
  Rational acc = 0;
  Rational tp = 1;
  for (unsigned i = 0; i <= d; ++i) {
    Rational sp = 1;
    for (unsigned j = 0; j < d - i; ++j)
      sp *= s;
    acc += c_[i] * sp * tp;
    tp *= t;
  }
  return acc;
}

Rational BinaryForm::evaluate(const ParamPoint &p) const { return evaluate(p.s, p.t); }

Polynomial BinaryForm::dehomogenize() const { return Polynomial(c_); }

unsigned BinaryForm::s_order() const {
  if (is_zero())
    return 0;
  return *degree_ - static_cast<unsigned>(dehomogenize().degree());
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero())
    return *this;
  return (Rational(1) / dehomogenize().leading()) * *this;
}

BinaryForm operator*(const BinaryForm &a, const BinaryForm &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  RatVector c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return BinaryForm(*a.degree_ + *b.degree_, c);
}

BinaryForm operator*(const Rational &k, const BinaryForm &a) {
  if (a.is_zero() || k == 0)
    return {};
  RatVector c = a.c_;
  for (auto &x : c)
    x *= k;
  return BinaryForm(*a.degree_, c);
}

BinaryForm operator+(const BinaryForm &a, const BinaryForm &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (*a.degree_ != *b.degree_)
    throw ToricError("Inhomogeneous", "adding forms of degrees " + std::to_string(*a.degree_) + " and " +
                                          std::to_string(*b.degree_));
  RatVector c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] += b.c_[i];
  return BinaryForm(*a.degree_, c);
}

BinaryForm pow(const BinaryForm &f, unsigned e) {
  BinaryForm out = BinaryForm::constant(1);
  for (unsigned i = 0; i < e; ++i)
    out = out * f;
  return out;
}

BinaryForm gcd(const std::vector<BinaryForm> &forms) {
  Polynomial g;
  std::optional<unsigned> s_min;
  for (const auto &f : forms) {
    if (f.is_zero())
      continue;
    g = gcd(g, f.dehomogenize());
    s_min = s_min ? std::min(*s_min, f.s_order()) : f.s_order();
  }
  if (!s_min)
    return BinaryForm::zero();
  return BinaryForm::s_power(*s_min) * BinaryForm::from_polynomial(g, static_cast<unsigned>(g.degree()));
}

std::vector<std::pair<BinaryForm, unsigned>> factor(const BinaryForm &f) {
  if (f.is_zero())
    throw ToricError("ZeroForm", "the zero form has no factorization");
  std::vector<std::pair<BinaryForm, unsigned>> out;
  if (f.s_order() > 0)
    out.emplace_back(BinaryForm::s_power(1), f.s_order());
  for (const auto &[p, mult] : factor(f.dehomogenize()))
    out.emplace_back(BinaryForm::from_polynomial(p, static_cast<unsigned>(p.degree())), mult);
  return out;
}

ParamPoint linear_root(const BinaryForm &f) {
  if (f.degree() != 1u)
    throw ToricError("NotLinear", "only linear forms have a single root");
  return ParamPoint(f.coefficient(1), -f.coefficient(0));
}

Rational resultant(const BinaryForm &f, const BinaryForm &g) {
  if (f.is_zero() || g.is_zero())
    return 0;
  return sylvester(f.coefficients(), g.coefficients());
}

std::string to_string(const BinaryForm &f) {
  if (f.is_zero())
    return "0";
  const unsigned d = *f.degree();
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i <= d; ++i) {
    Rational c = f.coefficient(i);
    if (c == 0)
      continue;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    Rational a = abs(c);
    std::string mono;
    auto var = [](const char *v, unsigned e) { return e == 0 ? std::string() : std::string(v) + (e > 1 ? "^" + std::to_string(e) : ""); };
    std::string sv = var("s", d - i), tv = var("t", i);
    mono = sv + (sv.empty() || tv.empty() ? "" : "*") + tv;
    if (a != 1 || mono.empty())
      os << to_string(a) << (mono.empty() ? "" : "*");
    os << mono;
    first = false;
  }
  return os.str();
}

} // namespace torickit
