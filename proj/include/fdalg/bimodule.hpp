#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/span_search.hpp"

namespace fdalg {

enum class Side { Left, Right };
enum class HomKind { Left, Right, Bi };
enum class Verdict { Yes, No, Undecided };

const char* verdict_name(Verdict v);

/// A finite-dimensional module over an algebra carrying a left action, a
/// right action, or both (a bimodule). left[i] is the matrix of b_i acting
/// from the left; right[i] maps the basis vector e_j to e_j * b_i. An absent
/// side is an empty vector.
struct Module {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  std::vector<std::string> labels;

  bool has_left() const { return !left.empty(); }
  bool has_right() const { return !right.empty(); }
  bool is_bimodule() const { return has_left() && has_right(); }
  const std::vector<Matrix>& actions(Side s) const { return s == Side::Left ? left : right; }
  Field field() const { return algebra->field(); }
  /// Matrix of a general algebra element acting on the given side.
  Matrix act(Side s, const Vec& a) const;
};

struct LinearMap {
  std::string domain;
  std::string codomain;
  Matrix matrix;
};

/// Checks the module axioms on all basis pairs (and compatibility for
/// bimodules); throws Error(Validation) on the first failure.
void validate_module(const Module& m);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

Module regular_bimodule(const AlgebraPtr& a);
/// R* on the dual basis: (r -> f)(s) = f(sr), (f <- r)(s) = f(rs).
Module dual_bimodule(const AlgebraPtr& a);
/// Underlying R with r * m = alpha(r) m and m * r = m beta(r).
Module twisted_bimodule(const AlgebraPtr& a, const Matrix& alpha, const Matrix& beta);
Module one_sided(const Module& m, Side s);

struct Submodule {
  Module module;
  Matrix inclusion;  // columns: submodule basis written in the ambient basis
};
struct QuotientModule {
  Module module;
  Subspace kernel;
  Vec project(const Vec& v) const { return kernel.quotient_coords(v); }
};

/// Smallest subspace containing `vectors` and stable under the actions of
/// the given sides.
Subspace generated_submodule(const Module& m, const std::vector<Vec>& vectors, bool left, bool right);
Submodule submodule(const Module& m, const Subspace& s);
QuotientModule quotient_module(const Module& m, const Subspace& s);

/// soc(M) = {m : J m = 0} and top(M) = M / J M for the left action.
Submodule socle(const Module& m);
QuotientModule top(const Module& m);

/// Basis of a hom space, kept together with its flattened echelon form so
/// that any member can be expressed in coordinates.
struct HomSpace {
  int rows = 0;
  int cols = 0;
  std::vector<Matrix> basis;
  Subspace flat;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Matrix& f) const { return flat.contains(f.data()); }
  Vec coords(const Matrix& f) const { return flat.coords(f.data()); }
  Matrix element(const Vec& c) const;
};

/// Structure-preserving maps M -> N (matrices dim N x dim M).
HomSpace hom_space(const Module& m, const Module& n, HomKind kind);
bool is_hom(const Module& m, const Module& n, const Matrix& f, HomKind kind);

/// M (x)_R N as the full tensor space modulo the balancing relations.
struct TensorFactorization {
  Module result;
  int left_dim = 0;
  int right_dim = 0;
  /// dim x (left_dim * right_dim); column b * right_dim + c is the class of
  /// m_b (x) n_c.
  Matrix projection;
  /// Pure tensors whose classes form the basis of the result.
  std::vector<std::pair<int, int>> section;

  Vec project_pure(int b, int c) const { return projection.col(b * right_dim + c); }
  Vec project(const Vec& m, const Vec& n) const;
  /// Lifts a coordinate vector to the full tensor space through the section.
  Vec lift(const Vec& x) const;
};

TensorFactorization tensor_over(const Module& m, const Module& n);

/// Left-associated tensor powers M, M (x) M, (M (x) M) (x) M, ... of a
/// bimodule, built on demand. Every basis element of the j-th power is the
/// class of a pure tensor of M-basis vectors (a word of length j).
class TensorPowers {
 public:
  explicit TensorPowers(Module m);

  const Module& base() const { return base_; }
  const Module& power(int j);
  const TensorFactorization& step(int j);
  const std::vector<std::vector<int>>& words(int j);
  /// Coordinates of the class of m_{w_1} (x) ... (x) m_{w_k} in power(k).
  const Vec& word_coords(const std::vector<int>& w);

 private:
  void extend(int j);

  Module base_;
  std::vector<TensorFactorization> steps_;  // steps_[j] builds power j (j >= 2)
  std::vector<Module> powers_;
  std::vector<std::vector<std::vector<int>>> words_;
  std::map<std::vector<int>, Vec> memo_;
};

struct IsoResult {
  Verdict verdict = Verdict::Undecided;
  Matrix witness;  // Yes: an invertible hom
  std::string reason;
  int trials = 0;
};

IsoResult modules_isomorphic(const Module& m, const Module& n, HomKind kind, const SearchOptions& opts);
/// Bimodule isomorphism with the regular bimodule; a witness is the map
/// r -> r x for some x with r x = x r, so the search runs over that space.
IsoResult isomorphic_to_regular(const Module& m, const SearchOptions& opts);

/// M^v = Hom_{R-}(M, R) with (r f)(m) = f(m r) and (f r)(m) = f(m) r.
Module left_dual(const Module& m);

struct InvertibilityResult {
  Verdict verdict = Verdict::Undecided;
  std::string reason;
};
InvertibilityResult is_invertible_bimodule(const Module& m, const SearchOptions& opts);

struct PicOrder {
  enum class Kind { Order, NoneUpTo, Undecided };
  Kind kind = Kind::Undecided;
  int value = 0;  // the order, the limit, or the first undecided power
  std::string certificate;
};
/// Smallest k with (R*)^{(x) k} = R as bimodules, searched up to `limit`.
PicOrder pic_order_of_dual(const AlgebraPtr& a, int limit, const SearchOptions& opts);

}  // namespace fdalg
