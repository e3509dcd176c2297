#include "doctest.h"

#include "fdalg/catalog.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/frobenius.hpp"

using namespace fdalg;

namespace {

const Field Q = Field::rationals();
const SearchOptions opts;

Vec functional(const Algebra& a, const std::string& label) { return a.basis_vec(a.index_of(label)); }

}  // namespace

TEST_CASE("quantum plane q=2: form (xy)* and its Nakayama automorphism") {
  auto a = quantum_plane(2, Q);
  FrobeniusData fd = frobenius_data(a, functional(*a, "xy"));
  CHECK(fd.nu * a->element("x") == a->element("1/2*x"));
  CHECK(fd.nu * a->element("y") == a->element("2*y"));
  // defining identity lambda(rs) = lambda(s nu(r)) on all basis pairs
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      CHECK(dot(fd.form, a->basis_product(r, s)) == dot(fd.form, a->mul(a->basis_vec(s), fd.nu.col(r))));
  CHECK_THROWS_AS(frobenius_data(a, functional(*a, "x")), Error);
}

TEST_CASE("dual numbers and the field") {
  auto d = dual_numbers(Q);
  CHECK(frobenius_data(d, functional(*d, "eps")).nu == Matrix::identity(2, Q));
  auto k = field_algebra(Q);
  auto r = frobenius_form(k, opts);
  REQUIRE(r.verdict == Verdict::Yes);
  CHECK(r.data->nu == Matrix::identity(1, Q));
  auto p = nakayama_permutation(k, opts);
  CHECK(p.pi == std::vector<int>{0});
  CHECK(p.multiplicities == std::vector<int>{1});
}

TEST_CASE("Nakayama algebra is quasi-Frobenius but not Frobenius") {
  auto a = nakayama_pq(2, 1, Q);
  CHECK(is_quasi_frobenius(a, opts) == Verdict::Yes);
  auto p = nakayama_permutation(a, opts);
  CHECK(p.pi == std::vector<int>{1, 0});
  CHECK(cycle_notation(p.pi) == "(1 2)");
  CHECK(p.multiplicities == std::vector<int>{2, 1});
  auto r = frobenius_form(a, opts);
  CHECK(r.verdict == Verdict::No);
  CHECK(r.by_criterion);
  // independent path: the form search cannot succeed either
  CHECK(!search_frobenius_form(*a, opts).found());
}

TEST_CASE("quasi-Frobenius verdicts") {
  CHECK(is_quasi_frobenius(upper_triangular_2(Q), opts) == Verdict::No);
  CHECK(is_quasi_frobenius(field_algebra(Q), opts) == Verdict::Yes);
  CHECK_THROWS_AS(nakayama_permutation(upper_triangular_2(Q), opts), Error);
}

TEST_CASE("symmetric and inner decisions") {
  auto m2 = matrix_algebra(2, Q);
  auto s = is_symmetric(m2, opts);
  REQUIRE(s.verdict == Verdict::Yes);
  auto p = nakayama_permutation(m2, opts);
  CHECK(p.pi == std::vector<int>{0});
  CHECK(p.multiplicities == std::vector<int>{2});

  auto r2 = quantum_plane(2, Q);
  CHECK(is_symmetric(r2, opts).verdict == Verdict::No);
  FrobeniusData fd = frobenius_data(r2, functional(*r2, "xy"));
  CHECK(is_inner(r2, fd.nu, opts).verdict == Verdict::No);
  CHECK(is_inner(r2, Matrix::identity(4, Q), opts).verdict == Verdict::Yes);

  // conjugation by u = 1 + E12 on M_2
  Vec u = m2->element("E11 + E22 + E12");
  Vec uinv = *m2->inverse(u);
  Matrix conj(4, 4, Q);
  for (int i = 0; i < 4; ++i) conj.set_col(i, m2->mul(m2->mul(uinv, m2->basis_vec(i)), u));
  auto in = is_inner(m2, conj, opts);
  REQUIRE(in.verdict == Verdict::Yes);
}

TEST_CASE("twisted presentation of dual tensor powers") {
  auto r2 = quantum_plane(2, Q);
  FrobeniusData fd = frobenius_data(r2, functional(*r2, "xy"));
  TensorPowers powers(dual_bimodule(r2));
  for (int p = 1; p <= 3; ++p) {
    LinearMap theta = twisted_presentation(fd, powers, p);
    CHECK(theta.matrix.cols() == 4);
  }
  // p = 1 inverts r -> r -> lambda
  LinearMap t1 = twisted_presentation(fd, powers, 1);
  CHECK(t1.matrix * fd.gram == Matrix::identity(4, Q));
}

TEST_CASE("associative c spaces") {
  auto r2 = quantum_plane(2, Q);
  FrobeniusData fd = frobenius_data(r2, functional(*r2, "xy"));
  for (int n = 2; n <= 5; ++n) CHECK(associative_c_space(fd, n) == Subspace::span({r2->element("xy")}, 4, Q));
  auto rm = quantum_plane(-1, Q);
  FrobeniusData fm = frobenius_data(rm, functional(*rm, "xy"));
  CHECK(associative_c_space(fm, 2) == Subspace::span({rm->element("1"), rm->element("xy")}, 4, Q));
  auto k = field_algebra(Q);
  CHECK(associative_c_space(frobenius_data(k, k->unit()), 3).dim() == 1);
}
