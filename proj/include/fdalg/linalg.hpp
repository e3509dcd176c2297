#pragma once

#include <optional>
#include <vector>

#include "fdalg/scalar.hpp"

namespace fdalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, int n);
Vec unit_vec(Field f, int n, int i);
bool is_zero(const Vec& v);
/// y += a * x, skipping zero entries of x.
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec scaled(const Vec& x, const Scalar& a);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Scalar dot(const Vec& x, const Vec& y);

/// Dense row-major matrix over an exact field. Columns are images of basis
/// vectors wherever a Matrix represents a linear map.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Field f);

  static Matrix identity(int n, Field f);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows, Field f);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);
  void set_col(int c, const Vec& v);
  /// Row-major flattening.
  const std::vector<Scalar>& data() const { return data_; }
  static Matrix from_flat(const Vec& flat, int rows, int cols, Field f);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& x);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  /// this += s * other
  void add_scaled(const Scalar& s, const Matrix& other);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  Field field_{};
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref_in_place(Matrix& m);
int rank(Matrix m);
/// Rows form a basis of {x : m x = 0}, one per free column (canonical).
Matrix nullspace(const Matrix& m);
Scalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// One solution of a x = b, if any.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

/// Subspace of K^n held as a canonical reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, Field f) : ambient_(ambient), field_(f) {}

  static Subspace span(const std::vector<Vec>& vectors, int ambient, Field f);
  static Subspace row_space(const Matrix& m);
  static Subspace column_space(const Matrix& m);
  static Subspace whole(int ambient, Field f);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  Field field() const { return field_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<int> free_columns() const;
  Matrix basis_matrix() const;  // rows = basis

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  Vec coords(const Vec& v) const;
  Vec from_coords(const Vec& c) const;
  /// Coordinates of v modulo the subspace, indexed by free columns.
  Vec quotient_coords(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {y : y . v = 0 for all v in this}
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  int ambient_ = 0;
  Field field_{};
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace fdalg
