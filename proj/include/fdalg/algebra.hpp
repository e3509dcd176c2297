#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/linalg.hpp"
#include "fdalg/poly.hpp"

namespace fdalg {

struct Term {
  int index;
  Scalar coeff;
};

using SparseVec = std::vector<Term>;

/// Input description of an algebra; table[i][j] holds the coordinates of
/// b_i * b_j as sparse terms.
struct AlgebraSpec {
  Field field;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> table;
  Vec unit;
  std::vector<Vec> idempotent_hints;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional unital associative algebra given by structure
/// constants. Instances are created by build_algebra and never mutated.
class Algebra {
 public:
  Field field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;
  const Vec& unit() const { return unit_; }

  const SparseVec& product_terms(int i, int j) const { return table_[i][j]; }
  Vec basis_product(int i, int j) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, int e) const;
  Vec basis_vec(int i) const { return unit_vec(field_, dim_, i); }
  Vec zero() const { return zero_vec(field_, dim_); }
  Vec scalar(const Scalar& s) const { return scaled(unit_, s); }
  /// Parses "2*x + 1/2*xy - 1" style expressions over the basis labels.
  Vec element(const std::string& expr) const;
  std::string format(const Vec& v) const;

  /// Left and right regular representations: column j of left_mult(i) is
  /// b_i * b_j, column j of right_mult(i) is b_j * b_i.
  const Matrix& left_mult(int i) const { return left_[i]; }
  const Matrix& right_mult(int i) const { return right_[i]; }
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  /// A small generating set of the algebra (as elements), chosen greedily
  /// among basis elements.
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& idempotent_hints() const { return hints_; }

  bool is_invertible(const Vec& a) const;
  std::optional<Vec> inverse(const Vec& a) const;
  bool is_unit_vector(const Vec& v) const { return v == unit_; }

  /// Minimal polynomial of a inside the subalgebra with unit `one`
  /// (a must satisfy one*a = a*one = a).
  Poly minimal_polynomial(const Vec& a, const Vec& one) const;
  Poly minimal_polynomial(const Vec& a) const { return minimal_polynomial(a, unit_); }
  Vec eval_poly(const Poly& p, const Vec& a, const Vec& one) const;

  AlgebraSpec spec() const;

 private:
  friend AlgebraPtr build_algebra(AlgebraSpec spec);
  Algebra() = default;

  Field field_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> table_;
  Vec unit_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
  std::vector<Vec> generators_;
  std::vector<Vec> hints_;
};

/// Validates associativity and the unit laws on all basis tuples; throws
/// Error(Validation) naming the first failing triple.
AlgebraPtr build_algebra(AlgebraSpec spec);

/// Convenience for building tables by label.
class AlgebraBuilder {
 public:
  AlgebraBuilder(Field f, std::vector<std::string> labels);
  /// b_i * b_j += coeff * b_k
  AlgebraBuilder& set(const std::string& i, const std::string& j, const std::string& k, const Scalar& coeff = Scalar(1));
  AlgebraBuilder& set(int i, int j, int k, const Scalar& coeff);
  AlgebraBuilder& unit(const std::string& expr);
  AlgebraBuilder& unit(Vec u);
  AlgebraBuilder& hint(Vec e);
  AlgebraBuilder& hint(const std::string& expr);
  int index(const std::string& label) const;
  AlgebraPtr build() const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> dense_;
  Vec unit_;
  std::vector<Vec> hints_;
};

/// Expresses elements of A in the basis given by the columns of `basis`.
AlgebraPtr change_basis(const AlgebraPtr& a, const Matrix& basis, std::vector<std::string> labels = {});
AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct Corner {
  AlgebraPtr algebra;
  /// Columns are the corner basis elements written in A's basis.
  Matrix inclusion;
};
Corner corner_algebra(const AlgebraPtr& a, const Vec& e);

/// Subalgebra spanned by the given basis indices (closed under products and
/// containing the unit); structure constants are restricted.
AlgebraPtr restrict_to_indices(const AlgebraPtr& a, const std::vector<int>& indices);

struct Quotient {
  AlgebraPtr algebra;
  Subspace ideal;
  /// Basis indices of A whose classes form the quotient basis.
  std::vector<int> reps;
  Vec project(const Vec& v) const { return ideal.quotient_coords(v); }
  Vec lift(const Vec& q) const;
};
/// A / I for a two-sided ideal I (verified).
Quotient quotient_algebra(const AlgebraPtr& a, const Subspace& ideal);

bool is_idempotent(const Algebra& a, const Vec& e);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
/// Product of two subspaces (span of all pairwise products).
Subspace subspace_product(const Algebra& a, const Subspace& x, const Subspace& y);
Subspace center(const Algebra& a);
Subspace jacobson_radical(const Algebra& a);

/// True when m is multiplicative, unital and invertible.
bool is_automorphism(const Algebra& a, const Matrix& m);
void require_automorphism(const Algebra& a, const Matrix& m, const std::string& what);

/// Matrix power with negative exponents through the supplied inverse.
Matrix matrix_power(const Matrix& m, const Matrix& m_inv, int e);

}  // namespace fdalg
