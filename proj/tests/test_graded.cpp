#include "doctest.h"

#include "fdalg/catalog.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/graded.hpp"

using namespace fdalg;

namespace {

const Field Q = Field::rationals();
const SearchOptions opts;

FrobeniusData xy_form(const AlgebraPtr& a) { return frobenius_data(a, a->basis_vec(a->index_of("xy"))); }

Module scalar_module(int dim) {
  auto k = field_algebra(Q);
  return Module{k, dim, {Matrix::identity(dim, Q)}, {Matrix::identity(dim, Q)}, {}};
}

}  // namespace

TEST_CASE("A(K, K, 0) is the truncated polynomial ring") {
  for (int n = 1; n <= 5; ++n) {
    Module m = scalar_module(1);
    Construction c = build_A(m, n, Matrix(1, 1, Q));
    const Algebra& a = *c.algebra();
    REQUIRE(a.dim() == n);
    if (n == 1) continue;
    Vec x = a.basis_vec(1);
    CHECK(!is_zero(a.pow(x, n - 1)));
    CHECK(is_zero(a.pow(x, n)));
    for (int p = 0; p < n; ++p) CHECK(a.pow(x, p) == a.basis_vec(p));
  }
}

TEST_CASE("associativity of phi: a failing tuple over K^2") {
  auto powers = std::make_shared<TensorPowers>(scalar_module(2));
  const auto& words = powers->words(2);
  Matrix phi(1, static_cast<int>(words.size()), Q);
  for (std::size_t k = 0; k < words.size(); ++k)
    if (words[k] == std::vector<int>{0, 0}) phi(0, static_cast<int>(k)) = 1;
  AssociativityResult r = check_associative(*powers, 2, phi);
  CHECK(r.verdict == Verdict::No);
  CHECK(r.tuple == std::vector<int>{0, 0, 1});
  CHECK(check_associative(*powers, 2, Matrix(1, 4, Q)).verdict == Verdict::Yes);
  CHECK_THROWS_AS(build_A(powers, 2, phi), Error);

  // not a bimodule map over the upper triangular algebra
  auto ut = upper_triangular_2(Q);
  TensorPowers tp(dual_bimodule(ut));
  Matrix bad(3, tp.power(2).dim, Q);
  bad(0, 0) = 1;
  try {
    check_associative(tp, 2, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBimoduleMorphism);
  }
}

TEST_CASE("every bimodule morphism from the square of the dual is associative for the Nakayama algebra") {
  auto r = nakayama_pq(2, 1, Q);
  TensorPowers tp(dual_bimodule(r));
  HomSpace hs = hom_space(tp.power(2), regular_bimodule(r), HomKind::Bi);
  REQUIRE(hs.dim() > 0);
  for (const auto& phi : hs.basis) CHECK(check_associative(tp, 2, phi).verdict == Verdict::Yes);
}

TEST_CASE("dimensions of constructed algebras") {
  Construction ex3 = build_dual_construction(generalized_matrix(Q), 3);
  CHECK(ex3.algebra()->dim() == 8);
  CHECK(is_symmetric(ex3.algebra(), opts).verdict == Verdict::Yes);

  Construction nak = build_dual_construction(nakayama_pq(2, 1, Q), 3);
  CHECK(nak.algebra()->dim() == 27);
  CHECK(is_faithful(nak.graded, 2));

  Construction ut = build_dual_construction(upper_triangular_2(Q), 3);
  CHECK(ut.algebra()->dim() == 3 + 3 + 1);
  CHECK(is_quasi_frobenius(ut.algebra(), opts) == Verdict::No);
}

TEST_CASE("graded diagnostics of the dual numbers") {
  Construction c = build_A(scalar_module(1), 2, Matrix(1, 1, Q));
  CHECK(is_faithful(c.graded, 1));
  CHECK_FALSE(is_faithful(c.graded, 0));
  CHECK_FALSE(is_strongly_graded(c.graded));
  GradedDiagnostics g = graded_diagnostics(c.graded, opts);
  CHECK(g.graded_frobenius[1] == Verdict::Yes);
  CHECK(g.graded_frobenius[0] == Verdict::No);
  REQUIRE(g.forms[1].has_value());
  CHECK((*g.forms[1])[0].is_zero());
}

TEST_CASE("homogeneity is validated") {
  auto d = dual_numbers(Q);
  CHECK_NOTHROW(make_graded(d, 2, {0, 1}));
  auto q = quantum_plane(2, Q);
  CHECK_NOTHROW(make_graded(q, 3, {0, 1, 2, 0}));
  CHECK_THROWS_AS(make_graded(q, 3, {0, 1, 2, 1}), Error);
  CHECK_THROWS_AS(make_graded(d, 2, {1, 1}), Error);
}

TEST_CASE("quantum plane q=2, n=3, phi=0: the closed-form form and automorphism") {
  auto r = quantum_plane(2, Q);
  FrobeniusData fd = xy_form(r);
  Construction c = build_dual_construction(r, 3);
  REQUIRE(c.algebra()->dim() == 12);
  TheoremDData td = theorem_D_data(fd, c);
  CHECK(td.matches);
  CHECK(rank(gram_matrix(*c.algebra(), td.lambda)) == 12);
  for (int k = 0; k < 12; ++k)
    if (c.graded.degrees[k] != 2) CHECK(td.lambda[k].is_zero());
  CHECK(td.nakayama * c.embed(0, r->element("x")) == c.embed(0, r->element("2*x")));
  CHECK(td.nakayama * c.embed(0, r->element("y")) == c.embed(0, r->element("1/2*y")));

  GradedDiagnostics g = graded_diagnostics(c.graded, opts);
  CHECK(g.graded_frobenius[2] == Verdict::Yes);
  CHECK(g.faithful[2]);
  CHECK(is_symmetric(c.algebra(), opts).verdict == Verdict::No);

  CriterionResult sc = symmetric_criterion(fd, 3, r->zero(), opts);
  CHECK(sc.verdict == Verdict::No);
  CHECK(ore_crosscheck(fd, 3, r->zero()).verdict == Verdict::Yes);
}

TEST_CASE("quantum plane q=-1, n=2, c=1") {
  auto r = quantum_plane(-1, Q);
  FrobeniusData fd = xy_form(r);
  const Vec c = r->unit();
  auto powers = std::make_shared<TensorPowers>(dual_bimodule(r));
  Matrix phi = phi_from_c(fd, *powers, 2, c);
  CHECK(rank(phi) == 4);
  Construction con = build_A(powers, 2, phi);
  CHECK(con.algebra()->dim() == 8);
  CHECK(is_strongly_graded(con.graded));
  GradedDiagnostics g = graded_diagnostics(con.graded, opts);
  CHECK(g.graded_frobenius == std::vector<Verdict>{Verdict::Yes, Verdict::Yes});
  for (const auto& f : g.forms) {
    REQUIRE(f.has_value());
    CHECK(rank(gram_matrix(*con.algebra(), *f)) == 8);
  }
  CHECK(ore_crosscheck(fd, 2, c).verdict == Verdict::Yes);

  CriterionResult sc = symmetric_criterion(fd, 2, c, opts);
  CHECK(sc.verdict == Verdict::Yes);
  CHECK(sc.conditions_hold);
  CHECK(criterion_conditions(fd, 2, c, {r->unit(), r->zero()}, {r->unit(), r->zero()}));
  CHECK_FALSE(criterion_conditions(fd, 2, c, {r->unit(), r->zero()}, {r->zero(), r->zero()}));
}

TEST_CASE("Ore presentation over the field and invalid c") {
  auto k = field_algebra(Q);
  FrobeniusData fd = frobenius_data(k, k->unit());
  for (int n = 1; n <= 4; ++n) CHECK(ore_crosscheck(fd, n, k->zero()).verdict == Verdict::Yes);
  auto r = quantum_plane(2, Q);
  FrobeniusData fq = xy_form(r);
  try {
    ore_crosscheck(fq, 3, r->element("x"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidC);
  }
}

TEST_CASE("Nakayama algebra, n=4: symmetric through the criterion") {
  auto r = nakayama_basic(Q);
  auto fr = frobenius_form(r, opts);
  REQUIRE(fr.verdict == Verdict::Yes);
  CriterionResult sc = symmetric_criterion(*fr.data, 4, r->zero(), opts);
  CHECK(sc.verdict == Verdict::Yes);
  CHECK(sc.conditions_hold);
}
