#include "morphdet/linalg.hpp"

#include <algorithm>

namespace morphdet {

Mat::Mat(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Mat Mat::identity(FieldSpec field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Mat Mat::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows,
                   std::size_t cols_if_empty) {
  std::size_t nc = rows.empty() ? cols_if_empty : rows.front().size();
  Mat m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw ContractViolation("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c] + field.zero();
  }
  return m;
}

Mat Mat::column(FieldSpec field, const std::vector<Scalar>& entries) {
  Mat m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i] + field.zero();
  return m;
}

Mat Mat::unit_column(FieldSpec field, std::size_t n, std::size_t i) {
  Mat m(field, n, 1);
  m(i, 0) = field.one();
  return m;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractViolation("block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ContractViolation("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Mat Mat::select_columns(const std::vector<std::size_t>& cols) const {
  Mat m(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& rows) const {
  Mat m(field_, rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(rows[k], c);
  return m;
}

Mat Mat::hstack(const std::vector<Mat>& parts, FieldSpec field, std::size_t rows) {
  std::size_t nc = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ContractViolation("hstack row mismatch");
    nc += p.cols();
  }
  Mat m(field, rows, nc);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Mat Mat::vstack(const std::vector<Mat>& parts, FieldSpec field, std::size_t cols) {
  std::size_t nr = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ContractViolation("vstack column mismatch");
    nr += p.rows();
  }
  Mat m(field, nr, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Mat Mat::block_diagonal(const std::vector<Mat>& parts, FieldSpec field) {
  std::size_t nr = 0, nc = 0;
  for (const auto& p : parts) {
    nr += p.rows();
    nc += p.cols();
  }
  Mat m(field, nr, nc);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("matrix product shape mismatch");
  Mat m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractViolation("matrix sum shape mismatch");
  Mat m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Scalar& s, const Mat& a) {
  Mat m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).str();
  }
  return os << "]";
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.form = m;
  Mat& a = res.form;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && a(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t c = col; c < nc; ++c) std::swap(a(piv, c), a(row, c));
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < nc; ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < nc; ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

NullspaceBasis nullspace_basis(const Mat& a) {
  RrefResult r = rref(a);
  NullspaceBasis nb;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) nb.free.push_back(c);
  nb.basis = Mat(a.field(), a.cols(), nb.free.size());
  for (std::size_t k = 0; k < nb.free.size(); ++k) {
    std::size_t f = nb.free[k];
    nb.basis(f, k) = a.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) nb.basis(r.pivots[i], k) = -r.form(i, f);
  }
  return nb;
}

Scalar determinant(const Mat& m) {
  if (!m.is_square()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m;
  Scalar det = m.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw ContractViolation("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug = Mat::hstack({m, Mat::identity(m.field(), n)}, m.field(), n);
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw ContractViolation("matrix is singular");
  return r.form.block(0, n, n, n);
}

std::optional<Solution> solve_all(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ContractViolation("solve_all: a.rows != b.rows");
  const std::size_t n = a.cols(), k = b.cols();
  Mat aug = Mat::hstack({a, b}, a.field(), a.rows());
  RrefResult r = rref(aug);
  for (auto p : r.pivots)
    if (p >= n) return std::nullopt;
  Solution s;
  s.particular = Mat(a.field(), n, k);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < k; ++j) s.particular(r.pivots[i], j) = r.form(i, n + j);
  // Nullspace from the left block of the same reduced form.
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) s.homogeneous.free.push_back(c);
  s.homogeneous.basis = Mat(a.field(), n, s.homogeneous.free.size());
  for (std::size_t q = 0; q < s.homogeneous.free.size(); ++q) {
    std::size_t f = s.homogeneous.free[q];
    s.homogeneous.basis(f, q) = a.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) s.homogeneous.basis(r.pivots[i], q) = -r.form(i, f);
  }
  return s;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(FieldSpec field, std::size_t n) { return Subspace(n, Mat(field, 0, n), {}); }

Subspace Subspace::full(FieldSpec field, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(n, Mat::identity(field, n), piv);
}

Subspace Subspace::row_span(const Mat& generators) {
  RrefResult r = rref(generators);
  return Subspace(generators.cols(), r.form.block(0, 0, r.rank, generators.cols()), r.pivots);
}

Subspace Subspace::column_span(const Mat& generators) { return row_span(generators.transpose()); }

bool Subspace::contains(const Mat& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) throw ContractViolation("vector/ambient mismatch");
  // Reduce against the echelon basis; the remainder vanishes iff v is a member.
  Mat rem = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = rem(pivots_[i], 0);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) rem(j, 0) -= c * basis_(i, j);
  }
  return rem.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ContractViolation("ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i).transpose())) return false;
  return true;
}

Mat Subspace::coordinates(const Mat& v) const {
  if (!contains(v)) throw ContractViolation("vector is not in the subspace");
  Mat c(field(), dim(), 1);
  for (std::size_t i = 0; i < pivots_.size(); ++i) c(i, 0) = v(pivots_[i], 0);
  return c;
}

Mat Subspace::standard_complement_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Mat> cols;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) cols.push_back(Mat::unit_column(field(), ambient_, j));
  return Mat::hstack(cols, field(), ambient_);
}

Mat Subspace::quotient_map() const {
  std::vector<std::size_t> comp;
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  Mat q(field(), comp.size(), ambient_);
  for (std::size_t k = 0; k < comp.size(); ++k) {
    q(k, comp[k]) = field().one();
    for (std::size_t i = 0; i < pivots_.size(); ++i) q(k, pivots_[i]) = -basis_(i, comp[k]);
  }
  return q;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ContractViolation("ambient mismatch");
  return Subspace::row_span(Mat::vstack({u.basis_rows(), v.basis_rows()}, u.field(), u.ambient_dim()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw ContractViolation("ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.field(), u.ambient_dim());
  // Members of v (as combinations of its basis) killed by the quotient map of u.
  return image_of(v.basis_columns(), kernel_of(u.quotient_map() * v.basis_columns()));
}

Subspace complement_in(const Subspace& u, const Subspace& v) {
  if (!v.contains(u)) throw ContractViolation("complement_in: u is not contained in v");
  const FieldSpec f = u.field();
  Mat acc = u.basis_rows();
  std::vector<Mat> added;
  std::size_t r = u.dim();
  for (std::size_t i = 0; i < v.dim() && r < v.dim(); ++i) {
    Mat cand = Mat::vstack({acc, v.basis_rows().row(i)}, f, u.ambient_dim());
    std::size_t rk = rank(cand);
    if (rk > r) {
      acc = cand;
      r = rk;
      added.push_back(v.basis_rows().row(i));
    }
  }
  return Subspace::row_span(Mat::vstack(added, f, u.ambient_dim()));
}

Subspace image_of(const Mat& map, const Subspace& u) {
  if (map.cols() != u.ambient_dim()) throw ContractViolation("image_of: shape mismatch");
  return Subspace::column_span(map * u.basis_columns());
}

Subspace preimage_of(const Mat& map, const Subspace& target) {
  if (map.rows() != target.ambient_dim()) throw ContractViolation("preimage_of: shape mismatch");
  return kernel_of(target.quotient_map() * map);
}

Subspace kernel_of(const Mat& map) {
  NullspaceBasis nb = nullspace_basis(map);
  return Subspace::column_span(nb.basis);
}

Subspace column_space(const Mat& map) { return Subspace::column_span(map); }

}  // namespace morphdet
