#include "doctest.h"

#include "fdalg/catalog.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/semisimple.hpp"

using namespace fdalg;

namespace {

const Field Q = Field::rationals();

AlgebraPtr without_hints(const AlgebraPtr& a) {
  AlgebraSpec s = a->spec();
  s.idempotent_hints.clear();
  return build_algebra(s);
}

void check_invariants(const AlgebraPtr& a, const SemisimpleData& d) {
  int total = 0;
  for (int i = 0; i < d.block_count(); ++i) total += d.multiplicities[i] * d.simples[i].dim;
  CHECK(total == a->dim() - d.radical.dim());
  for (int i = 0; i < d.block_count(); ++i) {
    const Vec& e = d.primitive_idempotents[i];
    CHECK(is_idempotent(*a, e));
    for (int j = 0; j < d.block_count(); ++j) {
      if (i != j) CHECK(is_zero(a->mul(e, d.primitive_idempotents[j])));
      int h = hom_space(d.simples[i], d.simples[j], HomKind::Left).dim();
      CHECK(h == (i == j ? 1 : 0));
    }
  }
}

}  // namespace

TEST_CASE("radicals") {
  auto ut = upper_triangular_2(Q);
  CHECK(jacobson_radical(*ut) == Subspace::span({ut->element("x")}, 3, Q));
  CHECK(jacobson_radical(*field_algebra(Q)).dim() == 0);
  auto r2 = quantum_plane(2, Q);
  Subspace j = jacobson_radical(*r2);
  CHECK(j.dim() == 3);
  CHECK(!j.contains(r2->unit()));
}

TEST_CASE("radical is basis independent") {
  auto a = nakayama_pq(2, 1, Q);
  Matrix p = Matrix::identity(9, Q);
  for (int i = 0; i + 1 < 9; ++i) p(i, i + 1) = Scalar(i - 3);
  p(8, 0) = 2;
  REQUIRE(inverse(p).has_value());
  auto b = change_basis(a, p);
  Subspace jb = jacobson_radical(*b);
  std::vector<Vec> mapped;
  for (const auto& v : jb.basis()) mapped.push_back(p * v);
  CHECK(Subspace::span(mapped, 9, Q) == jacobson_radical(*a));
}

TEST_CASE("radical in small characteristic when the trace form still works") {
  auto a = product_algebra(quantum_plane(2, Field::prime(5)), nakayama_basic(Field::prime(5)));
  CHECK(jacobson_radical(*a).dim() == 5);
}

TEST_CASE("semisimple data of the Nakayama algebra") {
  auto a = nakayama_pq(2, 1, Q);
  auto d = semisimple_data(a);
  REQUIRE(d.block_count() == 2);
  CHECK(d.multiplicities == std::vector<int>{2, 1});
  CHECK(d.simples[0].dim == 2);
  CHECK(d.simples[1].dim == 1);
  CHECK(d.primitive_idempotents[0] == a->element("E11"));
  check_invariants(a, d);
}

TEST_CASE("semisimple data of small algebras") {
  auto k = field_algebra(Q);
  auto dk = semisimple_data(k);
  CHECK(dk.multiplicities == std::vector<int>{1});
  auto m2 = matrix_algebra(2, Q);
  auto dm = semisimple_data(m2);
  CHECK(dm.multiplicities == std::vector<int>{2});
  CHECK(dm.simples[0].dim == 2);
  check_invariants(m2, dm);
  auto ut = upper_triangular_2(Q);
  auto du = semisimple_data(ut);
  CHECK(du.multiplicities == std::vector<int>{1, 1});
  check_invariants(ut, du);
}

TEST_CASE("primitive idempotents without hints") {
  for (auto a : {matrix_algebra(2, Q), matrix_algebra(3, Q), nakayama_pq(2, 1, Q), nakayama_pq(1, 3, Q),
                 matrix_algebra(2, Field::prime(7)), product_algebra(matrix_algebra(2, Q), upper_triangular_2(Q))}) {
    auto b = without_hints(a);
    auto d = semisimple_data(b);
    check_invariants(b, d);
  }
}

TEST_CASE("non-split quotient is rejected") {
  // Q(i) as a 2-dimensional algebra over Q
  auto a = AlgebraBuilder(Q, {"1", "i"}).set("1", "1", "1").set("1", "i", "i").set("i", "1", "i").set("i", "i", "1", -1).unit("1").build();
  CHECK_THROWS_AS(semisimple_data(a), Error);
}
