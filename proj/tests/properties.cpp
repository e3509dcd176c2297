#include "properties.hpp"

#include <random>
#include <sstream>

#include "fdalg/catalog.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/frobenius.hpp"
#include "fdalg/graded.hpp"

using namespace fdalg;

namespace props {

namespace {

using Rng = std::mt19937_64;

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = standard_catalog();
  return c;
}

std::vector<const CatalogEntry*> entries_where(bool (*pred)(const CatalogEntry&)) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (pred(e)) out.push_back(&e);
  return out;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Vec random_vec(Rng& rng, Field f, int n, int bound = 3) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, d(rng)));
  return v;
}

Module random_module(Rng& rng, const AlgebraPtr& a) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return regular_bimodule(a);
  return dual_bimodule(a);
}

struct Recorder {
  PropertyResult r;
  void check(bool ok, int case_no, const std::string& name, const std::string& what) {
    if (ok) return;
    if (r.first_failure.empty()) {
      std::ostringstream os;
      os << "case " << case_no << " (" << name << "): " << what;
      r.first_failure = os.str();
    }
    ++r.failures;
  }
};

}  // namespace

PropertyResult tensor_balance(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Recorder rec{{"tensor-balance", 0, 0, {}}};
  for (int i = 0; i < cases; ++i, ++rec.r.cases) {
    const CatalogEntry& e = pick(rng, catalog());
    const AlgebraPtr& a = e.algebra;
    Module m = random_module(rng, a), n = random_module(rng, a);
    TensorFactorization t = tensor_over(m, n);
    Vec x = random_vec(rng, a->field(), m.dim), r = random_vec(rng, a->field(), a->dim()),
        y = random_vec(rng, a->field(), n.dim);
    Vec lhs = t.project(m.act(Side::Right, r) * x, y);
    Vec rhs = t.project(x, n.act(Side::Left, r) * y);
    rec.check(lhs == rhs, i, e.name, "m r (x) n differs from m (x) r n");
  }
  return rec.r;
}

PropertyResult associator(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Recorder rec{{"associator", 0, 0, {}}};
  for (int i = 0; i < cases; ++i, ++rec.r.cases) {
    const CatalogEntry& e = pick(rng, catalog());
    const AlgebraPtr& a = e.algebra;
    Field f = a->field();
    Module m = random_module(rng, a), n = random_module(rng, a), p = random_module(rng, a);
    TensorFactorization mn = tensor_over(m, n);
    TensorFactorization left = tensor_over(mn.result, p);
    TensorFactorization np = tensor_over(n, p);
    TensorFactorization right = tensor_over(m, np.result);

    // (m (x) n) (x) p -> m (x) (n (x) p) on the section of the left side.
    Matrix alpha(right.result.dim, left.result.dim, f);
    for (int k = 0; k < left.result.dim; ++k) {
      auto [u, c] = left.section[k];
      auto [b, d] = mn.section[u];
      alpha.set_col(k, right.project(unit_vec(f, m.dim, b), np.project_pure(d, c)));
    }
    rec.check(left.result.dim == right.result.dim && rank(alpha) == left.result.dim, i, e.name,
              "associator is not bijective");
    rec.check(is_hom(left.result, right.result, alpha, HomKind::Bi), i, e.name, "associator is not a bimodule map");
    Vec x = random_vec(rng, f, m.dim), y = random_vec(rng, f, n.dim), z = random_vec(rng, f, p.dim);
    Vec lhs = alpha * left.project(mn.project(x, y), z);
    Vec rhs = right.project(x, np.project(y, z));
    rec.check(lhs == rhs, i, e.name, "associator disagrees on a random pure tensor");
  }
  return rec.r;
}

PropertyResult unit_constraint(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Recorder rec{{"unit-constraint", 0, 0, {}}};
  for (int i = 0; i < cases; ++i, ++rec.r.cases) {
    const CatalogEntry& e = pick(rng, catalog());
    const AlgebraPtr& a = e.algebra;
    Field f = a->field();
    Module m = random_module(rng, a);
    Module reg = regular_bimodule(a);
    bool on_left = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    TensorFactorization t = on_left ? tensor_over(reg, m) : tensor_over(m, reg);
    Matrix mu(m.dim, t.result.dim, f);
    for (int k = 0; k < t.result.dim; ++k) {
      auto [b, c] = t.section[k];
      mu.set_col(k, on_left ? m.left[b].col(c) : m.right[c].col(b));
    }
    rec.check(t.result.dim == m.dim && rank(mu) == m.dim, i, e.name, "multiplication map is not bijective");
    rec.check(is_hom(t.result, m, mu, HomKind::Bi), i, e.name, "multiplication map is not a bimodule map");
    Vec r = random_vec(rng, f, a->dim()), x = random_vec(rng, f, m.dim);
    Vec lhs = on_left ? mu * t.project(r, x) : mu * t.project(x, r);
    Vec rhs = on_left ? m.act(Side::Left, r) * x : m.act(Side::Right, r) * x;
    rec.check(lhs == rhs, i, e.name, "multiplication map disagrees on a random pure tensor");
  }
  return rec.r;
}

namespace {

const std::vector<const CatalogEntry*>& frobenius_entries() {
  static const auto v = entries_where([](const CatalogEntry& e) { return e.frobenius; });
  return v;
}

// Random nondegenerate functional, falling back to a known form.
FrobeniusData random_form(Rng& rng, const AlgebraPtr& a, const Vec& known) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Vec lambda = random_vec(rng, a->field(), a->dim());
    if (rank(gram_matrix(*a, lambda)) == a->dim()) return frobenius_data(a, lambda);
  }
  return frobenius_data(a, known);
}

}  // namespace

PropertyResult frobenius_invariants(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Recorder rec{{"frobenius-invariants", 0, 0, {}}};
  SearchOptions opts;
  for (int i = 0; i < cases; ++i, ++rec.r.cases) {
    const CatalogEntry& e = *pick(rng, frobenius_entries());
    const AlgebraPtr& a = e.algebra;
    Field f = a->field();
    FrobeniusResult fr = frobenius_form(a, opts);
    if (!fr.data) {
      rec.check(false, i, e.name, "no Frobenius form found");
      continue;
    }
    FrobeniusData fd = random_form(rng, a, fr.data->form);
    rec.check(fd.nu.transpose() * fd.form == fd.form, i, e.name, "lambda o nu != lambda");
    rec.check(is_automorphism(*a, fd.nu), i, e.name, "nu is not an automorphism");
    Vec r = random_vec(rng, f, a->dim()), s = random_vec(rng, f, a->dim());
    rec.check(dot(fd.form, a->mul(r, s)) == dot(fd.form, a->mul(s, fd.nu * r)), i, e.name,
              "lambda(rs) != lambda(s nu(r))");
    Module twisted = twisted_bimodule(a, Matrix::identity(a->dim(), f), fd.nu);
    rec.check(is_hom(twisted, dual_bimodule(a), fd.gram, HomKind::Bi), i, e.name,
              "r -> (r -> lambda) is not a bimodule map 1_R_nu -> R*");
  }
  return rec.r;
}

PropertyResult graded_construction(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Recorder rec{{"graded-construction", 0, 0, {}}};
  for (int i = 0; i < cases; ++i, ++rec.r.cases) {
    const CatalogEntry& e = pick(rng, catalog());
    const AlgebraPtr& a = e.algebra;
    Field f = a->field();
    int n = std::uniform_int_distribution<int>(2, a->dim() <= 4 ? 4 : 3)(rng);
    auto powers = std::make_shared<TensorPowers>(random_module(rng, a));
    const Module& tn = powers->power(n);
    HomSpace homs = hom_space(tn, regular_bimodule(a), HomKind::Bi);
    Matrix phi(a->dim(), tn.dim, f);
    if (homs.dim() > 0) phi = homs.element(random_vec(rng, f, homs.dim()));
    if (check_associative(*powers, n, phi).verdict != Verdict::Yes) phi = Matrix(a->dim(), tn.dim, f);
    std::string name = e.name + " n=" + std::to_string(n);
    Construction c;
    try {
      c = build_A(powers, n, phi);
    } catch (const Error& err) {
      rec.check(false, i, name, err.what());
      continue;
    }
    int expected = a->dim();
    for (int j = 1; j < n; ++j) expected += powers->power(j).dim;
    const Algebra& alg = *c.algebra();
    rec.check(alg.dim() == expected, i, name, "dim A != sum of dim M^(x)j");
    rec.check(c.embed(0, c.component(alg.unit(), 0)) == alg.unit(), i, name, "unit is not in degree 0");
    int di = std::uniform_int_distribution<int>(0, n - 1)(rng), dj = std::uniform_int_distribution<int>(0, n - 1)(rng);
    Vec x = c.embed(di, random_vec(rng, f, c.component_dim(di)));
    Vec y = c.embed(dj, random_vec(rng, f, c.component_dim(dj)));
    Vec xy = alg.mul(x, y);
    rec.check(c.embed((di + dj) % n, c.component(xy, (di + dj) % n)) == xy, i, name,
              "product of homogeneous elements is not homogeneous");
    Vec z = random_vec(rng, f, alg.dim());
    rec.check(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)), i, name, "A is not associative");
  }
  return rec.r;
}

PropertyResult symmetric_agreement(std::uint64_t seed, int cases) {
  Rng rng(seed);
  Recorder rec{{"symmetric-agreement", 0, 0, {}}};
  SearchOptions opts;
  for (int i = 0; i < cases; ++i, ++rec.r.cases) {
    const CatalogEntry& e = *pick(rng, frobenius_entries());
    const AlgebraPtr& a = e.algebra;
    FrobeniusResult fr = frobenius_form(a, opts);
    if (!fr.data) {
      rec.check(false, i, e.name, "no Frobenius form found");
      continue;
    }
    FrobeniusData fd = random_form(rng, a, fr.data->form);
    opts.seed = rng();
    Verdict sym = is_symmetric(a, opts).verdict;
    Verdict inner = is_inner(a, fd.nu, opts).verdict;
    rec.check(sym == inner, i, e.name,
              std::string("is_symmetric ") + verdict_name(sym) + " but nu inner " + verdict_name(inner));
    rec.check(sym == (e.symmetric ? Verdict::Yes : Verdict::No), i, e.name, "verdict differs from catalog");
  }
  return rec.r;
}

std::vector<PropertyResult> all_properties(std::uint64_t seed, int cases) {
  return {tensor_balance(seed, cases),       associator(seed + 1, cases),          unit_constraint(seed + 2, cases),
          frobenius_invariants(seed + 3, cases), graded_construction(seed + 4, cases), symmetric_agreement(seed + 5, cases)};
}

}  // namespace props
