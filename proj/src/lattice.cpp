#include "torickit/lattice.hpp"

#include "torickit/errors.hpp"

#include <algorithm>
#include <utility>

namespace torickit {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw ToricError("DimensionMismatch", "ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector> &rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ToricError("DimensionMismatch",
                       "row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                           ", expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntegerMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntegerMatrix::col(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

std::vector<IntVector> IntegerMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out.push_back(row(r));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols_ != b.rows_)
    throw ToricError("DimensionMismatch", "matrix product shape mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVector operator*(const IntVector &v, const IntegerMatrix &m) {
  if (v.size() != m.rows())
    throw ToricError("DimensionMismatch", "vector-matrix product shape mismatch");
  IntVector out(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] += v[i] * m(i, j);
  }
  return out;
}

namespace {

// row_a <- x*row_a + y*row_b ; row_b <- u*row_a + w*row_b (simultaneously)
void combine_rows(IntegerMatrix &m, std::size_t a, std::size_t b, const Integer &x, const Integer &y,
                  const Integer &u, const Integer &w) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ra = m(a, c);
    Integer rb = m(b, c);
    m(a, c) = x * ra + y * rb;
    m(b, c) = u * ra + w * rb;
  }
}

void add_row_multiple(IntegerMatrix &m, std::size_t target, std::size_t source, const Integer &q) {
  if (q == 0)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(target, c) += q * m(source, c);
}

void add_col_multiple(IntegerMatrix &m, std::size_t target, std::size_t source, const Integer &q) {
  if (q == 0)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, target) += q * m(r, source);
}

void negate_row(IntegerMatrix &m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(r, c) = -m(r, c);
}

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::size_t pivot_column(const IntegerMatrix &m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(r, c) != 0)
      return c;
  return m.cols();
}

} // namespace

IntVector primitive_vector(const IntVector &v) {
  Integer g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  if (g == 0)
    throw ToricError("ZeroVector", "primitive vector of the zero vector");
  IntVector out(v);
  for (auto &x : out)
    x /= g;
  return out;
}

HnfResult hermite_normal_form(const IntegerMatrix &a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h(i, c) == 0)
        continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      Integer ag = h(r, c) / g;
      Integer bg = h(i, c) / g;
      combine_rows(h, r, i, x, y, -bg, ag);
      combine_rows(u, r, i, x, y, -bg, ag);
    }
    if (h(r, c) == 0)
      continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  return HnfResult{std::move(h), std::move(u), r};
}

SnfResult smith_normal_form(const IntegerMatrix &a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix d = a;
  IntegerMatrix left = IntegerMatrix::identity(m);
  IntegerMatrix right = IntegerMatrix::identity(n);
  const std::size_t k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0)
            continue;
          Integer av = abs(d(i, j));
          if (!found || av < best) {
            found = true;
            best = av;
            pr = i;
            pc = j;
          }
        }
      if (!found)
        break;
      d.swap_rows(t, pr);
      left.swap_rows(t, pr);
      d.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0)
          continue;
        Integer q = trunc_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (d(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0)
          continue;
        Integer q = trunc_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (d(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(left, t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides)
        break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(left, t);
    }
  }

  SnfResult out;
  out.diagonal.resize(k);
  for (std::size_t t = 0; t < k; ++t)
    out.diagonal[t] = d(t, t);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

Integer determinant(const IntegerMatrix &a) {
  if (a.rows() != a.cols())
    throw ToricError("DimensionMismatch", "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  // Bareiss fraction-free elimination
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t matrix_rank(const IntegerMatrix &a) { return hermite_normal_form(a).rank; }

SublatticeBasis::SublatticeBasis(std::size_t ambient_rank, const std::vector<IntVector> &generators)
    : SublatticeBasis(ambient_rank, IntegerMatrix::from_rows(generators, ambient_rank)) {}

SublatticeBasis::SublatticeBasis(std::size_t ambient_rank, const IntegerMatrix &generators)
    : ambient_rank_(ambient_rank) {
  if (generators.cols() != ambient_rank && generators.rows() != 0)
    throw ToricError("DimensionMismatch", "generator length differs from ambient rank");
  HnfResult h = hermite_normal_form(generators);
  basis_ = IntegerMatrix(h.rank, ambient_rank);
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t c = 0; c < ambient_rank; ++c)
      basis_(r, c) = h.hermite(r, c);
}

SublatticeBasis SublatticeBasis::standard(std::size_t n) {
  return SublatticeBasis(n, IntegerMatrix::identity(n));
}

SublatticeBasis SublatticeBasis::scaled(const Integer &factor) const {
  IntegerMatrix m = basis_;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) *= factor;
  return SublatticeBasis(ambient_rank_, m);
}

namespace {

void require_full_rank(const SublatticeBasis &b) {
  if (!b.full_rank())
    throw ToricError("InfiniteIndex", "sublattice of rank " + std::to_string(b.rank()) +
                                          " in ambient rank " + std::to_string(b.ambient_rank()));
}

} // namespace

Integer sublattice_index(const SublatticeBasis &b) {
  require_full_rank(b);
  return abs(determinant(b.basis()));
}

Integer exponent_bound(const SublatticeBasis &b) {
  require_full_rank(b);
  SnfResult s = smith_normal_form(b.basis());
  return s.diagonal.empty() ? Integer(1) : s.diagonal.back();
}

namespace {

bool solve_in_hnf(const IntVector &v, const SublatticeBasis &b, IntVector *coords) {
  if (v.size() != b.ambient_rank())
    throw ToricError("DimensionMismatch", "vector of length " + std::to_string(v.size()) +
                                              " against ambient rank " + std::to_string(b.ambient_rank()));
  const IntegerMatrix &h = b.basis();
  IntVector rem = v;
  IntVector x(h.rows(), Integer(0));
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = pivot_column(h, i);
    if (!mpz_divisible_p(rem[c].get_mpz_t(), h(i, c).get_mpz_t()))
      return false;
    Integer q = rem[c] / h(i, c);
    x[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < rem.size(); ++j)
        rem[j] -= q * h(i, j);
  }
  for (const auto &r : rem)
    if (r != 0)
      return false;
  if (coords)
    *coords = std::move(x);
  return true;
}

} // namespace

bool member_of_sublattice(const IntVector &v, const SublatticeBasis &b) { return solve_in_hnf(v, b, nullptr); }

IntVector sublattice_coordinates(const IntVector &v, const SublatticeBasis &b) {
  IntVector x;
  if (!solve_in_hnf(v, b, &x))
    throw ToricError("NotInSublattice", format_vector(v));
  return x;
}

RatVector rational_coordinates(const IntVector &v, const SublatticeBasis &b) {
  require_full_rank(b);
  if (v.size() != b.ambient_rank())
    throw ToricError("DimensionMismatch", "vector length differs from ambient rank");
  // full-rank HNF is upper triangular with nonzero diagonal: forward substitution on x*B = v
  const IntegerMatrix &h = b.basis();
  const std::size_t n = v.size();
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = v[j];
    for (std::size_t i = 0; i < j; ++i)
      acc -= x[i] * h(i, j);
    x[j] = acc / Rational(h(j, j));
  }
  return x;
}

IntegerMatrix left_kernel(const IntegerMatrix &a) {
  HnfResult h = hermite_normal_form(a);
  std::vector<IntVector> rows;
  for (std::size_t r = h.rank; r < a.rows(); ++r)
    rows.push_back(h.transform.row(r));
  if (rows.empty())
    return IntegerMatrix(0, a.rows());
  return SublatticeBasis(a.rows(), rows).basis();
}

IntegerMatrix unimodular_inverse(const IntegerMatrix &u) {
  HnfResult h = hermite_normal_form(u);
  if (h.hermite != IntegerMatrix::identity(u.rows()))
    throw ToricError("NotUnimodular", "matrix is not invertible over the integers");
  return h.transform;
}

SaturationSplit saturation_with_complement(const IntegerMatrix &rows) {
  const std::size_t n = rows.cols();
  SnfResult s = smith_normal_form(rows);
  std::size_t r = 0;
  while (r < s.diagonal.size() && s.diagonal[r] != 0)
    ++r;
  IntegerMatrix rinv = unimodular_inverse(s.right);
  std::vector<IntVector> sat_rows;
  for (std::size_t i = 0; i < r; ++i)
    sat_rows.push_back(rinv.row(i));
  SaturationSplit out;
  out.saturation = r ? SublatticeBasis(n, sat_rows).basis() : IntegerMatrix(0, n);

  // prefer a complement spanned by standard basis vectors (lexicographically first choice)
  const std::size_t want = n - r;
  std::vector<std::size_t> pick(want);
  for (std::size_t i = 0; i < want; ++i)
    pick[i] = i;
  for (bool more = want <= n; more;) {
    IntegerMatrix full(n, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j)
        full(i, j) = out.saturation(i, j);
    for (std::size_t i = 0; i < want; ++i)
      full(r + i, pick[i]) = 1;
    if (abs(determinant(full)) == 1) {
      out.complement = IntegerMatrix(want, n);
      for (std::size_t i = 0; i < want; ++i)
        out.complement(i, pick[i]) = 1;
      return out;
    }
    // next combination
    more = false;
    for (std::size_t i = want; i-- > 0;) {
      if (pick[i] < n - want + i) {
        ++pick[i];
        for (std::size_t j = i + 1; j < want; ++j)
          pick[j] = pick[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  out.complement = IntegerMatrix(want, n);
  for (std::size_t i = 0; i < want; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.complement(i, j) = rinv(r + i, j);
  return out;
}

} // namespace torickit
