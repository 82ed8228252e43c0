#include "torickit/errors.hpp"
#include "torickit/poly.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace torickit;

namespace {

Polynomial P(std::initializer_list<long long> xs) { return Polynomial::from_integers(std::vector<long long>(xs)); }

Polynomial product_of(const std::vector<std::pair<Polynomial, unsigned>> &fs) {
  Polynomial out = Polynomial::constant(1);
  for (const auto &[f, e] : fs)
    out = out * pow(f, e);
  return out;
}

// rational roots of an integer polynomial by trying every p/q with p | a0, q | an
std::vector<Rational> brute_rational_roots(const Polynomial &f) {
  std::vector<Rational> roots;
  IntVector z = primitive_integer_polynomial(f);
  if (z.empty())
    return roots;
  if (z[0] == 0)
    roots.push_back(0);
  std::size_t lo = 0;
  while (z[lo] == 0)
    ++lo;
  long a0 = Integer(abs(z[lo])).get_si(), an = Integer(abs(z.back())).get_si();
  for (long p = 1; p <= a0; ++p) {
    if (a0 % p)
      continue;
    for (long q = 1; q <= an; ++q) {
      if (an % q)
        continue;
      for (int sgn : {1, -1}) {
        Rational r(sgn * p, q);
        r.canonicalize();
        if (f.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
    }
  }
  return roots;
}

} // namespace

TEST(Polynomial, Arithmetic) {
  Polynomial a = P({1, 1}), b = P({-1, 1});
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ((a + b), P({0, 2}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(P({0, 0, 3}).derivative(), P({0, 6}));
  EXPECT_EQ(P({1, 2, 1}).evaluate(Rational(1, 2)), Rational(9, 4));
  auto [q, r] = divmod(P({1, 0, 0, 1}), P({1, 1}));
  EXPECT_EQ(q, P({1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(P({-1, 0, 1}), P({1, 2, 1})), P({1, 1}));
  EXPECT_THROW(divmod(P({1}), Polynomial()), ToricError);
}

TEST(Polynomial, SquarefreeDecomposition) {
  Polynomial f = pow(P({1, 1}), 3) * P({-2, 0, 1}) * pow(P({0, 1}), 2);
  auto sf = squarefree_decomposition(f);
  ASSERT_EQ(sf.size(), 3u);
  EXPECT_EQ(sf[0], std::make_pair(P({-2, 0, 1}), 1u));
  EXPECT_EQ(sf[1], std::make_pair(P({0, 1}), 2u));
  EXPECT_EQ(sf[2], std::make_pair(P({1, 1}), 3u));
}

TEST(Polynomial, FactorKnownCases) {
  auto f1 = factor(P({1, 0, 0, 0, 1}));
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_EQ(f1[0].first, P({1, 0, 0, 0, 1}));

  auto f2 = factor(P({1, 0, -10, 0, 1}));
  ASSERT_EQ(f2.size(), 1u);

  auto f3 = factor(P({-1, 0, 0, 0, 1}));
  ASSERT_EQ(f3.size(), 3u);
  EXPECT_EQ(f3[0].first, P({-1, 1}));
  EXPECT_EQ(f3[1].first, P({1, 1}));
  EXPECT_EQ(f3[2].first, P({1, 0, 1}));

  auto f4 = factor(P({6, -5, 1}) * P({3}));
  ASSERT_EQ(f4.size(), 2u);
  EXPECT_EQ(f4[0].first, P({-3, 1}));
  EXPECT_EQ(f4[1].first, P({-2, 1}));

  Polynomial g = Polynomial(RatVector{Rational(1, 2), 0, Rational(3)});
  auto f5 = factor(g * g);
  ASSERT_EQ(f5.size(), 1u);
  EXPECT_EQ(f5[0].second, 2u);
  EXPECT_EQ(f5[0].first, g.monic());

  // x^8 - 1 has four factors, one needs recombination-free splitting mod small primes
  auto f6 = factor(P({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(f6.size(), 4u);
  EXPECT_TRUE(factor(P({5})).empty());
}

// products of known irreducibles (linears and quadratics without real roots) factor back exactly
TEST(Polynomial, FactorRandomProductsProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> coef(-9, 9), pos(1, 9), count(1, 4), expo(1, 2);
  for (int trial = 0; trial < 120; ++trial) {
    std::map<Polynomial, unsigned> expected;
    Polynomial f = Polynomial::constant(Rational(static_cast<long>(pos(rng))));
    long long n = count(rng);
    for (long long i = 0; i < n; ++i) {
      Polynomial g;
      if (rng() % 2) {
        g = P({coef(rng), pos(rng)});
      } else {
        long long a = pos(rng), b = coef(rng);
        long long c = (b * b) / (4 * a) + pos(rng);
        g = P({c, b, a});
      }
      unsigned e = static_cast<unsigned>(expo(rng));
      expected[g.monic()] += e;
      f = f * pow(g, e);
    }
    auto got = factor(f);
    std::map<Polynomial, unsigned> seen;
    for (const auto &[g, e] : got)
      seen[g] += e;
    EXPECT_EQ(seen, expected) << to_string(f);
    EXPECT_EQ(product_of(got), f.monic());
  }
}

// every factor of degree <= 3 is irreducible iff it has no rational root (brute force)
TEST(Polynomial, FactorsAreIrreducibleProperty) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> coef(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> cs(1 + rng() % 6);
    for (auto &c : cs)
      c = coef(rng);
    cs.push_back(1 + static_cast<long long>(rng() % 4));
    Polynomial f = Polynomial::from_integers(cs);
    auto got = factor(f);
    EXPECT_EQ(product_of(got), f.monic());
    std::size_t linear = 0;
    for (const auto &[g, e] : got) {
      if (g.degree() == 1)
        linear += 1;
      if (g.degree() >= 2 && g.degree() <= 3)
        EXPECT_TRUE(brute_rational_roots(g).empty()) << to_string(g);
    }
    EXPECT_EQ(linear, brute_rational_roots(f).size()) << to_string(f);
  }
}

TEST(Polynomial, Resultant) {
  EXPECT_EQ(resultant(P({-1, 1}), P({-2, 1})), Rational(-1));
  EXPECT_EQ(resultant(P({-1, 0, 1}), P({1, 1})), Rational(0));
  EXPECT_EQ(resultant(P({1, 0, 1}), P({0, 1})), Rational(1));
}

TEST(ParamPoint, Normalization) {
  EXPECT_EQ(ParamPoint(2, 4), ParamPoint(1, 2));
  EXPECT_EQ(ParamPoint(0, -3), ParamPoint(0, 1));
  EXPECT_EQ(to_string(ParamPoint(3, 1)), "(1:1/3)");
  EXPECT_THROW(ParamPoint(0, 0), ToricError);
}

TEST(BinaryForm, Basics) {
  BinaryForm f = BinaryForm::from_integers(2, {0, 1, -1}); // s t - t^2 = t (s - t)
  EXPECT_EQ(f.evaluate(ParamPoint(1, 1)), 0);
  EXPECT_EQ(f.evaluate(ParamPoint(1, 0)), 0);
  EXPECT_NE(f.evaluate(ParamPoint(0, 1)), 0);
  EXPECT_EQ(f.s_order(), 0u);
  BinaryForm s2 = BinaryForm::s_power(2);
  EXPECT_EQ(s2.s_order(), 2u);
  EXPECT_EQ(s2.evaluate(ParamPoint(0, 1)), 0);
  EXPECT_EQ((f * s2).degree(), 4u);
  EXPECT_THROW(f + s2 * f, ToricError);
  EXPECT_TRUE((f + Rational(-1) * f).is_zero());
  EXPECT_EQ(to_string(f), "s*t - t^2");
  EXPECT_THROW(BinaryForm(2, RatVector{1, 2}), ToricError);
}

TEST(BinaryForm, FactorAndRoots) {
  BinaryForm f = BinaryForm::s_power(2) * BinaryForm::from_integers(1, {-3, 1}) * BinaryForm::from_integers(1, {1, 2});
  auto fs = factor(f);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].first, BinaryForm::s_power(1));
  EXPECT_EQ(fs[0].second, 2u);
  std::vector<ParamPoint> roots;
  for (const auto &[g, e] : fs)
    roots.push_back(linear_root(g));
  EXPECT_EQ(roots[0], ParamPoint(0, 1));
  for (const auto &r : roots)
    EXPECT_EQ(f.evaluate(r), 0);
  EXPECT_EQ(gcd({f, BinaryForm::s_power(1) * BinaryForm::from_integers(1, {-3, 1})}),
            (BinaryForm::s_power(1) * BinaryForm::from_integers(1, {-3, 1})).normalized());
  EXPECT_TRUE(gcd({BinaryForm::zero()}).is_zero());
  EXPECT_EQ(resultant(BinaryForm::s_power(1), BinaryForm::from_integers(1, {0, 1})), Rational(1));
  EXPECT_EQ(resultant(f, BinaryForm::s_power(1)), Rational(0));
}

// resultant vanishes exactly when the forms share a root (random linear products)
TEST(BinaryForm, ResultantDetectsCommonRootProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> c(-4, 4);
  for (int trial = 0; trial < 150; ++trial) {
    auto lin = [&] {
      long long a = c(rng), b = c(rng);
      if (a == 0 && b == 0)
        a = 1;
      return BinaryForm::from_integers(1, {a, b});
    };
    std::vector<BinaryForm> fa = {lin(), lin()}, fb = {lin(), lin(), lin()};
    BinaryForm f = fa[0] * fa[1], g = fb[0] * fb[1] * fb[2];
    bool common = false;
    for (const auto &x : fa)
      for (const auto &y : fb)
        common = common || linear_root(x) == linear_root(y);
    EXPECT_EQ(resultant(f, g) == 0, common);
  }
}
