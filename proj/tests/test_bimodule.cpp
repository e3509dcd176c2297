#include "doctest.h"

#include "fdalg/bimodule.hpp"
#include "fdalg/catalog.hpp"

using namespace fdalg;

namespace {

const Field Q = Field::rationals();

// Dual action computed straight from the definition (r -> f)(s) = f(sr).
Scalar dual_left(const Algebra& a, int r, int f, int s) { return a.basis_product(s, r)[f]; }

}  // namespace

TEST_CASE("dual bimodule of the triangular algebra") {
  auto a = upper_triangular_2(Q);
  Module d = dual_bimodule(a);
  validate_module(d);
  const int e = 0, f = 1, x = 2;
  // f -> x* = x*, x -> x* = e*, x* <- x = f*
  CHECK(d.left[f].col(x) == unit_vec(Q, 3, x));
  CHECK(d.left[x].col(x) == unit_vec(Q, 3, e));
  CHECK(d.right[x].col(x) == unit_vec(Q, 3, f));
  CHECK(d.right[e].col(x) == unit_vec(Q, 3, x));
  for (int r = 0; r < 3; ++r)
    for (int g = 0; g < 3; ++g)
      for (int s = 0; s < 3; ++s) CHECK(d.left[r](g, s) == dual_left(*a, r, s, g));
}

TEST_CASE("hom and tensor dimensions for the triangular algebra") {
  auto a = upper_triangular_2(Q);
  Module d = dual_bimodule(a);
  Module r = regular_bimodule(a);
  HomSpace h = hom_space(d, r, HomKind::Left);
  CHECK(h.dim() == 1);
  for (const auto& m : h.basis) CHECK(is_hom(d, r, m, HomKind::Left));
  auto t = tensor_over(d, d);
  CHECK(t.result.dim == 1);
  validate_module(t.result);
  // the class of f* (x) x* equals that of x* (x) e*
  CHECK(t.project_pure(1, 2) == t.project_pure(2, 0));
  CHECK(!is_zero(t.project_pure(1, 2)));
  TensorPowers p(d);
  CHECK(p.power(3).dim == 0);
}

TEST_CASE("generalized matrix algebra kills the dual square") {
  auto a = generalized_matrix(Q);
  Module d = dual_bimodule(a);
  CHECK(hom_space(d, regular_bimodule(a), HomKind::Left).dim() == 0);
  CHECK(tensor_over(d, d).result.dim == 0);
  Module rf = submodule(one_sided(regular_bimodule(a), Side::Left),
                        Subspace::span({a->element("f"), a->element("x"), a->element("y")}, 4, Q))
                  .module;
  Submodule s = socle(rf);
  CHECK(s.module.dim == 2);
}

TEST_CASE("socle of the projective P = span{f, x}") {
  auto a = upper_triangular_2(Q);
  Module reg = one_sided(regular_bimodule(a), Side::Left);
  Subspace p = Subspace::span({a->element("f"), a->element("x")}, 3, Q);
  Submodule sub = submodule(reg, p);
  Submodule soc = socle(sub.module);
  REQUIRE(soc.module.dim == 1);
  Vec in_a = sub.inclusion * soc.inclusion.col(0);
  CHECK(Subspace::span({in_a}, 3, Q) == Subspace::span({a->element("x")}, 3, Q));
  CHECK(top(sub.module).module.dim == 1);
}

TEST_CASE("unit constraint R (x) M = M") {
  auto a = nakayama_pq(2, 1, Q);
  Module d = dual_bimodule(a);
  auto t = tensor_over(regular_bimodule(a), d);
  CHECK(t.result.dim == d.dim);
  // r (x) m -> r m composed with the section is invertible
  Matrix act(d.dim, t.result.dim, Q);
  for (int s = 0; s < t.result.dim; ++s) {
    auto [b, c] = t.section[s];
    act.set_col(s, d.left[b].col(c));
  }
  CHECK(inverse(act).has_value());
}

TEST_CASE("quasi-Frobenius detection via invertibility of the dual") {
  SearchOptions opts;
  CHECK(is_invertible_bimodule(regular_bimodule(field_algebra(Q)), opts).verdict == Verdict::Yes);
  CHECK(is_invertible_bimodule(dual_bimodule(nakayama_pq(2, 1, Q)), opts).verdict == Verdict::Yes);
  CHECK(is_invertible_bimodule(dual_bimodule(upper_triangular_2(Q)), opts).verdict == Verdict::No);
}

TEST_CASE("Picard order of the dual") {
  SearchOptions opts;
  auto nak = pic_order_of_dual(nakayama_pq(2, 1, Q), 6, opts);
  CHECK(nak.kind == PicOrder::Kind::Order);
  CHECK(nak.value == 2);
  auto m2 = pic_order_of_dual(matrix_algebra(2, Q), 6, opts);
  CHECK(m2.kind == PicOrder::Kind::Order);
  CHECK(m2.value == 1);
  auto r2 = pic_order_of_dual(quantum_plane(2, Q), 6, opts);
  CHECK(r2.kind == PicOrder::Kind::NoneUpTo);
  auto f5 = pic_order_of_dual(quantum_plane(2, Field::prime(5)), 6, opts);
  CHECK(f5.kind == PicOrder::Kind::Order);
  CHECK(f5.value == 4);
  CHECK_THROWS(pic_order_of_dual(upper_triangular_2(Q), 3, opts));
}

TEST_CASE("module isomorphism answers") {
  SearchOptions opts;
  auto a = upper_triangular_2(Q);
  Module d = one_sided(dual_bimodule(a), Side::Left);
  Module r = one_sided(regular_bimodule(a), Side::Left);
  CHECK(modules_isomorphic(d, r, HomKind::Left, opts).verdict == Verdict::No);
  auto same = modules_isomorphic(r, r, HomKind::Left, opts);
  CHECK(same.verdict == Verdict::Yes);
  auto nak = nakayama_pq(2, 1, Q);
  TensorPowers p(dual_bimodule(nak));
  CHECK(modules_isomorphic(p.power(2), regular_bimodule(nak), HomKind::Bi, opts).verdict == Verdict::Yes);
}
