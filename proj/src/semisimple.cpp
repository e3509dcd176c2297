#include "fdalg/semisimple.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "fdalg/errors.hpp"
#include "fdalg/span_search.hpp"

namespace fdalg {

Vec lift_idempotent(const Algebra& a, Vec e) {
  for (int it = 0; it <= a.dim() + 2; ++it) {
    Vec e2 = a.mul(e, e);
    if (e2 == e) return e;
    Vec e3 = a.mul(e2, e);
    e = sub(scaled(e2, Scalar::from_int(a.field(), 3)), scaled(e3, Scalar::from_int(a.field(), 2)));
  }
  fail(ErrorKind::InternalCheckFailed, "idempotent lifting did not converge");
}

namespace {

int corner_dim(const Algebra& a, const Vec& w) {
  Subspace s(a.dim(), a.field());
  for (int k = 0; k < a.dim(); ++k) s.insert(a.mul(a.mul(w, a.basis_vec(k)), w));
  return s.dim();
}

std::vector<Vec> corner_basis(const Algebra& a, const Vec& w) {
  Subspace s(a.dim(), a.field());
  for (int k = 0; k < a.dim(); ++k) s.insert(a.mul(a.mul(w, a.basis_vec(k)), w));
  return s.basis();
}

// Central idempotents splitting off each root of the minimal polynomial of z
// inside eps A (z central, eps a central idempotent).
std::vector<Vec> split_by(const Algebra& a, const Vec& eps, const Vec& z) {
  const Field f = a.field();
  Vec zz = a.mul(eps, z);
  Poly mp = a.minimal_polynomial(zz, eps);
  auto roots = roots_in_field(mp);
  if (static_cast<int>(roots.size()) != mp.degree())
    fail(ErrorKind::NotSplit, "a central element has a minimal polynomial that does not split into distinct linear factors");
  if (roots.size() == 1) return {eps};
  std::vector<Vec> out;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    Poly l = Poly::constant(f, Scalar::one(f));
    for (std::size_t s = 0; s < roots.size(); ++s) {
      if (s == r) continue;
      l = l * Poly::linear(f, roots[s]);
      l = l * Poly::constant(f, (roots[r] - roots[s]).inverse());
    }
    out.push_back(a.eval_poly(l, zz, eps));
  }
  return out;
}

// An idempotent of the corner w A w other than 0 and w, from an element whose
// minimal polynomial has a root r with (x - r)^k p2, p2 nonconstant.
std::optional<Vec> split_element(const Algebra& a, const Vec& w, const Vec& c) {
  const Field f = a.field();
  Poly mp = a.minimal_polynomial(c, w);
  for (const auto& r : roots_in_field(mp)) {
    Poly lin = Poly::linear(f, r);
    Poly power = Poly::constant(f, Scalar::one(f));
    Poly rest = mp;
    for (;;) {
      auto [q, rem] = Poly::divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
      power = power * lin;
    }
    if (rest.degree() < 1) continue;
    auto [g, s, t] = extended_gcd(power, rest);
    check_internal(g.degree() == 0, "coprime factors expected");
    Vec e = a.eval_poly(t * rest, c, w);
    if (is_idempotent(a, e) && !is_zero(e) && e != w) return e;
  }
  return std::nullopt;
}

Vec primitive_in_block(const Algebra& a, const Vec& eps) {
  Vec w = eps;
  while (corner_dim(a, w) > 1) {
    std::vector<Vec> cb = corner_basis(a, w);
    std::optional<Vec> e;
    auto attempt = [&](const Vec& c) {
      if (!e) e = split_element(a, w, c);
      return e.has_value();
    };
    for (const auto& c : cb)
      if (attempt(c)) break;
    for (std::size_t i = 0; i < cb.size() && !e; ++i)
      for (std::size_t j = i + 1; j < cb.size() && !e; ++j) attempt(add(cb[i], cb[j]));
    for (std::size_t i = 0; i < cb.size() && !e; ++i)
      for (std::size_t j = 0; j < cb.size() && !e; ++j) attempt(a.mul(cb[i], cb[j]));
    CoefficientStream stream(0, 10, a.field());
    for (int t = 0; t < 64 && !e; ++t) {
      Vec coeffs = stream.next(static_cast<int>(cb.size()));
      Vec c = a.zero();
      for (std::size_t i = 0; i < cb.size(); ++i) axpy(c, coeffs[i], cb[i]);
      attempt(c);
    }
    if (!e) fail(ErrorKind::IdempotentsRequired, "could not split a block; supply primitive idempotents");
    Vec other = sub(w, *e);
    w = corner_dim(a, *e) <= corner_dim(a, other) ? *e : other;
  }
  return w;
}

int exact_sqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

}  // namespace

SemisimpleData semisimple_data(const AlgebraPtr& ap, const std::vector<Vec>& supplied) {
  const Algebra& a = *ap;
  const Field f = a.field();
  SemisimpleData out;
  out.radical = jacobson_radical(a);
  out.quotient = quotient_algebra(ap, out.radical);
  const Algebra& q = *out.quotient.algebra;

  std::vector<Vec> hints = supplied.empty() ? a.idempotent_hints() : supplied;
  for (const auto& h : hints) {
    if (static_cast<int>(h.size()) != a.dim()) fail(ErrorKind::Validation, "supplied idempotent has the wrong length");
    if (!is_idempotent(a, h)) fail(ErrorKind::NotIdempotent, "supplied element " + a.format(h) + " is not idempotent");
  }

  Subspace z = center(q);
  std::vector<Vec> blocks{q.unit()};
  for (const auto& zb : z.basis()) {
    std::vector<Vec> next;
    for (const auto& eps : blocks)
      for (auto& e : split_by(q, eps, zb)) next.push_back(std::move(e));
    blocks = std::move(next);
  }
  if (static_cast<int>(blocks.size()) != z.dim())
    fail(ErrorKind::NotSplit, "center of the semisimple quotient is not a product of copies of the field");

  // order blocks by the first hint living in them
  std::vector<Vec> hint_bar;
  for (const auto& h : hints) hint_bar.push_back(out.quotient.project(h));
  const int nb = static_cast<int>(blocks.size());
  std::vector<int> rank_of(nb, static_cast<int>(hints.size()));
  std::vector<int> hint_of(nb, -1);
  for (int b = 0; b < nb; ++b)
    for (int h = 0; h < static_cast<int>(hints.size()); ++h)
      if (!is_zero(hint_bar[h]) && q.mul(blocks[b], hint_bar[h]) == hint_bar[h] && corner_dim(q, hint_bar[h]) == 1) {
        rank_of[b] = h;
        hint_of[b] = h;
        break;
      }
  std::vector<int> order(nb);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return rank_of[x] < rank_of[y]; });

  Module qmod{ap, q.dim(), {}, {}, q.labels()};
  for (int k = 0; k < a.dim(); ++k) qmod.left.push_back(q.left_mult(out.quotient.project(a.basis_vec(k))));

  Vec used = a.zero();
  int total = 0;
  for (int b : order) {
    const Vec& eps = blocks[b];
    Subspace block(q.dim(), f);
    for (int k = 0; k < q.dim(); ++k) block.insert(q.mul(eps, q.basis_vec(k)));
    const int n = exact_sqrt(block.dim());
    if (n < 0) fail(ErrorKind::NotSplit, "a block of the semisimple quotient has non-square dimension");
    Vec ebar = hint_of[b] >= 0 ? hint_bar[hint_of[b]] : primitive_in_block(q, eps);

    Subspace left_ideal(q.dim(), f);
    for (int k = 0; k < q.dim(); ++k) left_ideal.insert(q.mul(q.basis_vec(k), ebar));
    check_internal(left_ideal.dim() == n, "minimal left ideal has unexpected dimension");
    Module simple = submodule(qmod, left_ideal).module;
    simple.right.clear();
    int m = hom_space(one_sided(qmod, Side::Left), simple, HomKind::Left).dim();
    check_internal(m == n, "multiplicity differs from the block size");

    Vec e;
    if (hint_of[b] >= 0 && is_zero(a.mul(used, hints[hint_of[b]])) && is_zero(a.mul(hints[hint_of[b]], used))) {
      e = hints[hint_of[b]];
    } else {
      Vec fcomp = sub(a.unit(), used);
      Vec x = a.mul(a.mul(fcomp, out.quotient.lift(ebar)), fcomp);
      e = lift_idempotent(a, x);
    }
    used = add(used, e);
    total += m * n;
    out.central_idempotents.push_back(eps);
    out.simples.push_back(std::move(simple));
    out.multiplicities.push_back(m);
    out.primitive_idempotents.push_back(std::move(e));
  }
  check_internal(total == q.dim(), "multiplicities do not add up to dim A/J");
  return out;
}

}  // namespace fdalg
