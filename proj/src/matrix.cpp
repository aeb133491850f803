#include "hyperops/matrix.hpp"

#include <sstream>

#include "hyperops/errors.hpp"

namespace hyperops {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::reshape(const Vector& entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols)
    throw DimensionError("cannot reshape " + std::to_string(entries.size()) + " entries to " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  Matrix m(rows, cols);
  m.data_ = entries;
  return m;
}

std::string Matrix::shape_str() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square()) throw DimensionError("pow of non-square " + shape_str());
  Matrix out = identity(rows_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Scalar(r == c ? 1 : 0)) return false;
  return true;
}

bool Matrix::is_symmetric() const { return is_square() && *this == transpose(); }

bool Matrix::is_skew() const { return is_square() && *this == -transpose(); }

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "sub");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("mul: shape mismatch " + a.shape_str() + " vs " + b.shape_str());
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) m(i, j) += aik * bkj;
      }
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size())
    throw DimensionError("apply: shape mismatch " + a.shape_str() + " vs vector of length " +
                         std::to_string(v.size()));
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon row_reduce(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  Scalar previous(1);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        found = r;
        break;
      }
    if (found == m.rows()) continue;
    if (found != pivot_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(found, k), m(pivot_row, k));
    const Scalar pivot = m(pivot_row, c);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) {
        Scalar v = pivot * m(r, k);
        if (!factor.is_zero()) v -= factor * m(pivot_row, k);
        m(r, k) = v / previous;
      }
    }
    previous = pivot;
    pivots.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Scalar inv = m(r, pivots[r]).inv();
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= inv;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square " + a.shape_str());
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix m = a;
  Scalar previous(1);
  Scalar sign(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!m(r, k).is_zero()) {
          swap = r;
          break;
        }
      if (swap == n) return Scalar(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Matrix invert(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("invert of non-square " + a.shape_str());
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(aug);
  std::size_t left_rank = 0;
  for (auto p : e.pivots)
    if (p < n) ++left_rank;
  if (left_rank < n)
    throw SingularError("matrix " + a.shape_str() + " is singular (rank " + std::to_string(left_rank) + ")",
                        left_rank);
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Vector AffineSolutionSpace::point(const Vector& params) const {
  if (params.size() != basis.size())
    throw DimensionError("expected " + std::to_string(basis.size()) + " parameters, got " +
                         std::to_string(params.size()));
  Vector p = particular;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!params[k].is_zero())
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += params[k] * basis[k][i];
  return p;
}

std::optional<AffineSolutionSpace> solve_affine(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw DimensionError("solve: matrix " + a.shape_str() + " vs right-hand side of length " +
                         std::to_string(b.size()));
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  AffineSolutionSpace space;
  space.particular.assign(n, Scalar());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) space.particular[e.pivots[r]] = e.reduced(r, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    space.basis.push_back(std::move(v));
  }
  return space;
}

std::vector<Vector> kernel(const Matrix& a) {
  return solve_affine(a, Vector(a.rows()))->basis;
}

std::string vector_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s + ")";
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector unit(std::size_t n, std::size_t j) {
  Vector v(n);
  v[j] = 1;
  return v;
}

}  // namespace hyperops
