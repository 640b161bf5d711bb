#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "morphdet/scalar.hpp"

namespace morphdet {

/// Dense matrix over an exact field. Maps act on column vectors, so a map
/// V -> W has dim W rows and dim V columns.
class Mat {
 public:
  Mat() = default;
  Mat(FieldSpec field, std::size_t rows, std::size_t cols);

  static Mat identity(FieldSpec field, std::size_t n);
  static Mat from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows,
                       std::size_t cols_if_empty = 0);
  static Mat column(FieldSpec field, const std::vector<Scalar>& entries);
  static Mat unit_column(FieldSpec field, std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat col(std::size_t c) const { return block(0, c, rows_, 1); }
  Mat row(std::size_t r) const { return block(r, 0, 1, cols_); }
  Mat select_columns(const std::vector<std::size_t>& cols) const;
  Mat select_rows(const std::vector<std::size_t>& rows) const;

  static Mat hstack(const std::vector<Mat>& parts, FieldSpec field, std::size_t rows);
  static Mat vstack(const std::vector<Mat>& parts, FieldSpec field, std::size_t cols);
  static Mat block_diagonal(const std::vector<Mat>& parts, FieldSpec field);

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& a);
  Mat operator-() const;
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

struct RrefResult {
  std::size_t rank = 0;
  Mat form;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Nullspace basis indexed by free columns of the RREF: column k of `basis`
/// has a 1 in row free[k] and zeros in every other free row, so the
/// coordinates of a nullspace vector v are simply (v[free[0]], v[free[1]], ...).
struct NullspaceBasis {
  Mat basis;
  std::vector<std::size_t> free;
};
NullspaceBasis nullspace_basis(const Mat& a);

bool is_invertible(const Mat& m);
Scalar determinant(const Mat& m);
Mat inverse(const Mat& m);

class Subspace;

struct Solution {
  Mat particular;
  NullspaceBasis homogeneous;
};

/// Particular solution X of aX = b (free variables set to zero) together
/// with the nullspace of a; absent when b is not in the column space of a.
std::optional<Solution> solve_all(const Mat& a, const Mat& b);

/// A subspace of F^n stored canonically: basis rows in reduced echelon form,
/// so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(FieldSpec field, std::size_t n);
  static Subspace full(FieldSpec field, std::size_t n);
  /// Span of the columns of `generators` (n x k).
  static Subspace column_span(const Mat& generators);
  /// Span of the rows of `generators` (k x n).
  static Subspace row_span(const Mat& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return basis_.field(); }
  /// k x n, reduced echelon.
  const Mat& basis_rows() const { return basis_; }
  /// n x k.
  Mat basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Mat& column_vector) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Coordinates (k x 1) of a member vector in the stored basis.
  Mat coordinates(const Mat& column_vector) const;
  /// Unit vectors at the non-pivot positions: a complement of this subspace.
  Mat standard_complement_columns() const;
  /// (n - k) x n matrix sending v to its coordinates in F^n / U with respect
  /// to the standard complement.
  Mat quotient_map() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// A direct complement of u inside v (requires u contained in v).
Subspace complement_in(const Subspace& u, const Subspace& v);
/// Image of a subspace under a linear map.
Subspace image_of(const Mat& map, const Subspace& u);
/// {v : map * v in target}.
Subspace preimage_of(const Mat& map, const Subspace& target);
Subspace kernel_of(const Mat& map);
Subspace column_space(const Mat& map);

}  // namespace morphdet
