#include "torickit/linalg.hpp"

#include "torickit/errors.hpp"

#include <algorithm>
#include <set>

namespace torickit::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector> &m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto &x : m[r])
      x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j)
        m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> to_rat(const std::vector<IntVector> &v) {
  std::vector<RatVector> out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.push_back(to_rationals(x));
  return out;
}

} // namespace

std::size_t rank(const std::vector<RatVector> &vectors) {
  if (vectors.empty())
    return 0;
  std::vector<RatVector> m = vectors;
  return rref(m, m.front().size()).size();
}

std::size_t rank(const std::vector<IntVector> &vectors) { return rank(to_rat(vectors)); }

std::vector<RatVector> nullspace(const std::vector<RatVector> &rows, std::size_t n) {
  std::vector<RatVector> m = rows;
  for (const auto &r : m)
    if (r.size() != n)
      throw ToricError("DimensionMismatch", "nullspace row length");
  std::vector<std::size_t> pivots = rref(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    RatVector x(n, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = -m[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve_combination(const std::vector<RatVector> &generators, const RatVector &target) {
  const std::size_t n = target.size();
  const std::size_t k = generators.size();
  // rows: coordinates; columns: generators | target
  std::vector<RatVector> m(n, RatVector(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].size() != n)
      throw ToricError("DimensionMismatch", "generator length");
    for (std::size_t i = 0; i < n; ++i)
      m[i][j] = generators[j][i];
  }
  for (std::size_t i = 0; i < n; ++i)
    m[i][k] = target[i];
  std::vector<std::size_t> pivots = rref(m, k + 1);
  if (!pivots.empty() && pivots.back() == k)
    return std::nullopt;
  RatVector lambda(k, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    lambda[pivots[i]] = m[i][k];
  return lambda;
}

std::optional<RatVector> solve_combination(const std::vector<IntVector> &generators, const IntVector &target) {
  return solve_combination(to_rat(generators), to_rationals(target));
}

namespace {

// Scale a rational row to a primitive integer row with the same direction.
IntVector normalize_row(const RatVector &row) { return primitive_integer_multiple(row); }

} // namespace

bool strictly_feasible(const std::vector<RatVector> &zero, const std::vector<RatVector> &positive,
                       std::size_t n) {
  // restrict m to the subspace orthogonal to `zero`: m = sum_j y_j k_j
  std::vector<RatVector> kernel = nullspace(zero, n);
  const std::size_t dim = kernel.size();

  std::set<IntVector> rows;
  for (const auto &b : positive) {
    RatVector row(dim);
    for (std::size_t j = 0; j < dim; ++j)
      row[j] = dot(kernel[j], b);
    IntVector r = normalize_row(row);
    bool all_zero = std::all_of(r.begin(), r.end(), [](const Integer &x) { return x == 0; });
    if (all_zero)
      return false; // 0 > 0
    rows.insert(std::move(r));
  }

  // Fourier-Motzkin on a homogeneous system of strict inequalities row . y > 0
  for (std::size_t var = 0; var < dim; ++var) {
    std::vector<IntVector> pos, neg;
    std::set<IntVector> next;
    for (const auto &r : rows) {
      int s = sgn(r[var]);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        next.insert(r);
    }
    for (const auto &p : pos)
      for (const auto &q : neg) {
        // (-q[var]) * p + p[var] * q eliminates var with positive multipliers
        Integer a = -q[var];
        Integer b = p[var];
        IntVector c(dim);
        for (std::size_t j = 0; j < dim; ++j)
          c[j] = a * p[j] + b * q[j];
        Integer g = 0;
        for (const auto &x : c)
          g = gcd(g, x);
        if (g == 0)
          return false;
        for (auto &x : c)
          x /= g;
        next.insert(std::move(c));
      }
    rows = std::move(next);
  }
  return rows.empty();
}

bool in_cone(const IntVector &v, const std::vector<IntVector> &generators) {
  bool zero = std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
  if (zero)
    return true;
  if (generators.empty())
    return false;
  const std::size_t k = rank(generators);
  std::vector<IntVector> span_test = generators;
  span_test.push_back(v);
  if (rank(span_test) != k)
    return false;
  // Caratheodory: v lies in the cone of some linearly independent k-subset
  const std::size_t g = generators.size();
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i)
    pick[i] = i;
  for (;;) {
    std::vector<IntVector> sub;
    for (auto i : pick)
      sub.push_back(generators[i]);
    if (rank(sub) == k) {
      auto lambda = solve_combination(sub, v);
      if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational &x) { return x >= 0; }))
        return true;
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == g - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return false;
}

} // namespace torickit::linalg
