#pragma once

#include "torickit/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace torickit {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors; all must share a length.
  static IntegerMatrix from_rows(const std::vector<IntVector> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;

  IntegerMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);
  friend bool operator==(const IntegerMatrix &a, const IntegerMatrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix.
IntVector operator*(const IntVector &v, const IntegerMatrix &m);

struct HnfResult {
  IntegerMatrix hermite;   ///< H = U * A, row echelon form
  IntegerMatrix transform; ///< U, unimodular
  std::size_t rank = 0;    ///< number of nonzero rows of H
};

struct SnfResult {
  /// Elementary divisors, length min(rows, cols); each divides the next and
  /// zeros trail.
  IntVector diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
};

/// A lattice spanned by integer row vectors inside Z^ambient_rank. The basis
/// is kept in Hermite normal form, so two equal lattices compare equal.
class SublatticeBasis {
public:
  SublatticeBasis() = default;
  SublatticeBasis(std::size_t ambient_rank, const std::vector<IntVector> &generators);
  SublatticeBasis(std::size_t ambient_rank, const IntegerMatrix &generators);

  static SublatticeBasis standard(std::size_t n);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const IntegerMatrix &basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  bool full_rank() const { return basis_.rows() == ambient_rank_; }

  SublatticeBasis scaled(const Integer &factor) const;

  friend bool operator==(const SublatticeBasis &a, const SublatticeBasis &b) = default;

private:
  std::size_t ambient_rank_ = 0;
  IntegerMatrix basis_;
};

IntVector primitive_vector(const IntVector &v);

/// Row-style HNF: positive pivots, entries above a pivot reduced into [0, pivot).
HnfResult hermite_normal_form(const IntegerMatrix &a);
SnfResult smith_normal_form(const IntegerMatrix &a);

Integer determinant(const IntegerMatrix &a);
std::size_t matrix_rank(const IntegerMatrix &a);

Integer sublattice_index(const SublatticeBasis &b);
Integer exponent_bound(const SublatticeBasis &b);
bool member_of_sublattice(const IntVector &v, const SublatticeBasis &b);

/// Integer coordinates of v in the basis rows of b; throws "NotInSublattice".
IntVector sublattice_coordinates(const IntVector &v, const SublatticeBasis &b);

/// Rational coordinates of v with respect to the basis rows of a full-rank b.
RatVector rational_coordinates(const IntVector &v, const SublatticeBasis &b);

/// Basis (as HNF rows) of the lattice {x in Z^rows : x * a = 0}.
IntegerMatrix left_kernel(const IntegerMatrix &a);

/// Inverse of a unimodular integer matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix &u);

/// Basis rows of the saturation (span_Q(rows) intersected with Z^n) and of a
/// complementary lattice W with saturation + W = Z^n.
struct SaturationSplit {
  IntegerMatrix saturation;
  IntegerMatrix complement;
};
SaturationSplit saturation_with_complement(const IntegerMatrix &rows);

} // namespace torickit
