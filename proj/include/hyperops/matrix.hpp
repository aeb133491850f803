#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperops/scalar.hpp"

namespace hyperops {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the Gaussian rationals.
///
/// A matrix viewed as a linear map acts on column vectors: column j holds
/// the image of the j-th basis vector, so composition f∘g is `f * g`.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major construction; every row must have the same length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& diag);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  /// Reshapes a row-major vector of length rows*cols.
  static Matrix reshape(const Vector& entries, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::string shape_str() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Vector& entries() const noexcept { return data_; }

  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  Matrix pow(unsigned k) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;
  bool is_skew() const;
  bool is_real() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) { return a.scaled(Scalar(-1)); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a) { return a.scaled(s); }
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Row-major nested text, e.g. `[[1,0],[0,i]]`.
  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free Gauss–Jordan elimination. Pivots are taken as the first
/// nonzero entry in column order; pivot rows are normalized to 1 at the end.
Echelon row_reduce(const Matrix& a);

std::size_t rank(const Matrix& a);
/// Bareiss determinant.
Scalar determinant(const Matrix& a);
/// Throws SingularError carrying the rank when `a` is not invertible.
Matrix invert(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Solution set {particular + span(basis)} of A·x = b.
struct AffineSolutionSpace {
  Vector particular;
  std::vector<Vector> basis;
  std::size_t dim() const noexcept { return basis.size(); }
  std::size_t ambient() const noexcept { return particular.size(); }
  /// particular + Σ params[k]·basis[k].
  Vector point(const Vector& params) const;
};

/// Returns std::nullopt when the system is infeasible. Free variables are
/// set to zero in the particular solution; basis vectors are the canonical
/// kernel vectors read off the reduced echelon form (one per free column,
/// with a 1 in that column).
std::optional<AffineSolutionSpace> solve_affine(const Matrix& a, const Vector& b);
std::vector<Vector> kernel(const Matrix& a);

std::string vector_str(const Vector& v);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);
/// The j-th standard basis vector (0-based) of length n.
Vector unit(std::size_t n, std::size_t j);

}  // namespace hyperops
