#include "fdalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdalg {

Vec zero_vec(Field f, int n) { return Vec(static_cast<std::size_t>(n), Scalar::zero(f)); }

Vec unit_vec(Field f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * a;
  return r;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_zero()) r[i] += y[i];
  }
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!y[i].is_zero()) r[i] -= y[i];
  }
  return r;
}

Scalar dot(const Vec& x, const Vec& y) {
  Scalar s = x.empty() ? Scalar() : Scalar::zero(x[0].field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

Matrix::Matrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows, Field f) {
  Matrix m(rows, static_cast<int>(cols.size()), f);
  for (int c = 0; c < m.cols_; ++c) m.set_col(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, Field f) {
  Matrix m(static_cast<int>(rows.size()), cols, f);
  for (int r = 0; r < m.rows_; ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_flat(const Vec& flat, int rows, int cols, Field f) {
  if (flat.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("flat size mismatch");
  Matrix m(rows, cols, f);
  m.data_ = flat;
  return m;
}

Vec Matrix::row(int r) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return Vec(first, first + cols_);
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(int c, const Vec& v) {
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix p(a.rows_, b.cols_, a.field_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  }
  return p;
}

Vec operator*(const Matrix& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec y = zero_vec(a.field_, a.rows_);
  for (int k = 0; k < a.cols_; ++k) {
    if (x[k].is_zero()) continue;
    for (int i = 0; i < a.rows_; ++i) {
      const Scalar& e = a(i, k);
      if (!e.is_zero()) y[i] += e * x[k];
    }
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  r.add_scaled(Scalar::one(a.field_), b);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  r.add_scaled(-Scalar::one(a.field_), b);
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& e : r.data_) e *= s;
  return r;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!other.data_[i].is_zero()) data_[i] += s * other.data_[i];
  }
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  const int rows = m.rows();
  const int cols = m.cols();
  int r = 0;
  std::vector<int> support;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    support.clear();
    for (int j = c; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref_in_place(m).size()); }

Matrix nullspace(const Matrix& m) {
  Matrix a = m;
  std::vector<int> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Scalar& e = a(static_cast<int>(i), f);
      if (!e.is_zero()) v[pivots[i]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, m.cols(), m.field());
}

Scalar determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar::zero(m.field());
    if (p != c) {
      for (int j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    const Scalar pivot = m(c, c);
    det *= pivot;
    Scalar inv = pivot.inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const int n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.field(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(static_cast<int>(i), a.cols());
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) {
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    }
  return k;
}

// ---- Subspace ----

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient, Field f) {
  Subspace s(ambient, f);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix a = m;
  std::vector<int> pivots = rref_in_place(a);
  Subspace s(m.cols(), m.field());
  for (std::size_t i = 0; i < pivots.size(); ++i) s.rows_.push_back(a.row(static_cast<int>(i)));
  s.pivots_ = pivots;
  return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::whole(int ambient, Field f) {
  Subspace s(ambient, f);
  for (int i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vec(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(rows_, ambient_, field_); }

Vec Subspace::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  int p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = v[p].inverse();
  for (auto& e : v) {
    if (!e.is_zero()) e *= inv;
  }
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (!c.is_zero()) axpy(row, -c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vec& v) { return contains(v); });
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coords(const Vec& c) const {
  Vec v = zero_vec(field_, ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(v, c[i], rows_[i]);
  return v;
}

Vec Subspace::quotient_coords(const Vec& v) const {
  Vec r = reduce(v);
  Vec out;
  for (int c : free_columns()) out.push_back(r[c]);
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i = sum b_j w_j.
  const int p = dim();
  const int q = other.dim();
  Matrix m(ambient_, p + q, field_);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < ambient_; ++k) m(k, i) = rows_[i][k];
  for (int j = 0; j < q; ++j)
    for (int k = 0; k < ambient_; ++k) m(k, p + j) = -other.rows_[j][k];
  Matrix ns = nullspace(m);
  Subspace s(ambient_, field_);
  for (int r = 0; r < ns.rows(); ++r) {
    Vec v = zero_vec(field_, ambient_);
    for (int i = 0; i < p; ++i) axpy(v, ns(r, i), rows_[i]);
    s.insert(std::move(v));
  }
  return s;
}

Subspace Subspace::annihilator() const {
  if (rows_.empty()) return whole(ambient_, field_);
  return row_space(nullspace(basis_matrix()));
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

}  // namespace fdalg
