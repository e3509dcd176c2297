#include "fdalg/graded.hpp"

#include <set>

#include "fdalg/errors.hpp"

namespace fdalg {

namespace {

int residue(int x, int n) { return ((x % n) + n) % n; }

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

std::vector<int> GradedAlgebra::component(int g) const {
  std::vector<int> out;
  const int r = residue(g, modulus);
  for (int i = 0; i < static_cast<int>(degrees.size()); ++i)
    if (degrees[i] == r) out.push_back(i);
  return out;
}

GradedAlgebra make_graded(AlgebraPtr a, int modulus, std::vector<int> degrees) {
  if (modulus < 1) fail(ErrorKind::Validation, "grading modulus must be positive");
  if (static_cast<int>(degrees.size()) != a->dim()) fail(ErrorKind::Validation, "one degree per basis element is required");
  for (auto& d : degrees) d = residue(d, modulus);
  for (int i = 0; i < a->dim(); ++i)
    if (!a->unit()[i].is_zero() && degrees[i] != 0) fail(ErrorKind::Validation, "the unit is not of degree 0");
  for (int i = 0; i < a->dim(); ++i)
    for (int j = 0; j < a->dim(); ++j)
      for (const auto& t : a->product_terms(i, j))
        if (!t.coeff.is_zero() && degrees[t.index] != residue(degrees[i] + degrees[j], modulus))
          fail(ErrorKind::Validation, "product " + a->label(i) + "*" + a->label(j) + " is not homogeneous");
  return GradedAlgebra{std::move(a), modulus, std::move(degrees)};
}

Vec Construction::embed(int j, const Vec& coords) const {
  Vec out = zero_vec(base->field(), offsets.back());
  for (std::size_t k = 0; k < coords.size(); ++k) out[offsets[j] + k] = coords[k];
  return out;
}

Vec Construction::component(const Vec& a, int j) const {
  return Vec(a.begin() + offsets[j], a.begin() + offsets[j + 1]);
}

AssociativityResult check_associative(TensorPowers& powers, int n, const Matrix& phi) {
  if (n < 1) fail(ErrorKind::BadParams, "n must be positive");
  const Module& m = powers.base();
  const AlgebraPtr& r = m.algebra;
  const Module& tn = powers.power(n);
  if (phi.rows() != r->dim() || phi.cols() != tn.dim)
    fail(ErrorKind::BadParams, "phi must be a " + std::to_string(r->dim()) + " x " + std::to_string(tn.dim) + " matrix");
  if (!is_hom(tn, regular_bimodule(r), phi, HomKind::Bi))
    fail(ErrorKind::NotBimoduleMorphism, "phi is not a morphism of bimodules");

  auto check = [&](const std::vector<int>& t) {
    Vec left = phi * powers.word_coords(std::vector<int>(t.begin(), t.end() - 1));
    Vec right = phi * powers.word_coords(std::vector<int>(t.begin() + 1, t.end()));
    Vec lhs = m.act(Side::Left, left).col(t.back());
    Vec rhs = m.act(Side::Right, right).col(t.front());
    return lhs == rhs;
  };

  AssociativityResult res;
  const int d = m.dim;
  double total = 1;
  for (int i = 0; i <= n; ++i) total *= d;
  if (d > 0 && total <= 4096) {
    std::vector<int> t(n + 1, 0);
    for (;;) {
      if (!check(t)) {
        res.verdict = Verdict::No;
        res.tuple = t;
        res.reason = "identity fails at basis tuple " + tuple_str(t);
        return res;
      }
      int k = n;
      while (k >= 0 && ++t[k] == d) t[k--] = 0;
      if (k < 0) break;
    }
    return res;
  }
  for (const auto& w : powers.words(n + 1))
    if (!check(w)) {
      res.verdict = Verdict::No;
      res.tuple = w;
      res.reason = "identity fails at basis tuple " + tuple_str(w);
      return res;
    }
  return res;
}

Construction build_A(std::shared_ptr<TensorPowers> powers, int n, const Matrix& phi) {
  if (n < 1) fail(ErrorKind::BadParams, "n must be positive");
  AssociativityResult ar = check_associative(*powers, n, phi);
  if (ar.verdict != Verdict::Yes) fail(ErrorKind::NotAssociativeMorphism, "phi is not associative: " + ar.reason);
  const Module& m = powers->base();
  const AlgebraPtr& r = m.algebra;
  const Field f = r->field();

  Construction c;
  c.base = r;
  c.n = n;
  c.phi = phi;
  c.powers = powers;
  c.offsets = {0, r->dim()};
  for (int j = 1; j < n; ++j) c.offsets.push_back(c.offsets.back() + powers->power(j).dim);
  const int dim = c.offsets.back();

  std::vector<int> degree(dim), local(dim);
  for (int j = 0; j < n; ++j)
    for (int k = c.offsets[j]; k < c.offsets[j + 1]; ++k) {
      degree[k] = j;
      local[k] = k - c.offsets[j];
    }

  AlgebraSpec spec;
  spec.field = f;
  std::set<std::string> seen;
  for (int k = 0; k < dim; ++k) {
    std::string l = degree[k] == 0 ? r->label(k) : powers->power(degree[k]).labels[local[k]];
    if (seen.count(l)) l += "[" + std::to_string(degree[k]) + "]";
    seen.insert(l);
    spec.labels.push_back(l);
  }

  auto word = [&](int k) -> const std::vector<int>& { return powers->words(degree[k])[local[k]]; };
  auto product = [&](int p, int q) -> Vec {
    const int i = degree[p], j = degree[q];
    if (i == 0 && j == 0) return c.embed(0, r->basis_product(p, q));
    if (i == 0) return c.embed(j, powers->power(j).left[p].col(local[q]));
    if (j == 0) return c.embed(i, powers->power(i).right[q].col(local[p]));
    std::vector<int> w = word(p);
    const auto& v = word(q);
    w.insert(w.end(), v.begin(), v.end());
    if (i + j < n) return c.embed(i + j, powers->word_coords(w));
    Vec x = phi * powers->word_coords(std::vector<int>(w.begin(), w.begin() + n));
    if (i + j == n) return c.embed(0, x);
    const int rest = i + j - n;
    std::vector<int> tail(w.begin() + n, w.end());
    return c.embed(rest, powers->power(rest).act(Side::Left, x) * powers->word_coords(tail));
  };

  spec.table.assign(dim, std::vector<SparseVec>(dim));
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q) {
      Vec v = product(p, q);
      for (int k = 0; k < dim; ++k)
        if (!v[k].is_zero()) spec.table[p][q].push_back({k, v[k]});
    }
  spec.unit = c.embed(0, r->unit());
  for (const auto& h : r->idempotent_hints()) spec.idempotent_hints.push_back(c.embed(0, h));
  AlgebraPtr a = build_algebra(std::move(spec));
  c.graded = make_graded(a, n, degree);
  return c;
}

Construction build_A(const Module& m, int n, const Matrix& phi) {
  return build_A(std::make_shared<TensorPowers>(m), n, phi);
}

Construction build_dual_construction(const AlgebraPtr& r, int n, const Matrix& phi) {
  return build_A(dual_bimodule(r), n, phi);
}

Construction build_dual_construction(const AlgebraPtr& r, int n) {
  auto powers = std::make_shared<TensorPowers>(dual_bimodule(r));
  Matrix zero(r->dim(), powers->power(n).dim, r->field());
  return build_A(powers, n, zero);
}

namespace {

Matrix block(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.field());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return out;
}

// Span of A_g A_h inside A.
Subspace component_product(const GradedAlgebra& g, int x, int y) {
  const Algebra& a = *g.algebra;
  Subspace s(a.dim(), a.field());
  for (int p : g.component(x))
    for (int q : g.component(y)) s.insert(a.basis_product(p, q));
  return s;
}

}  // namespace

bool is_faithful(const GradedAlgebra& g, int sigma) {
  const Algebra& a = *g.algebra;
  for (int h = 0; h < g.modulus; ++h) {
    std::vector<int> cols = g.component(h);
    if (cols.empty()) continue;
    std::vector<int> rows = g.component(sigma);
    std::vector<int> acting = g.component(sigma - h);
    Matrix stacked(static_cast<int>(acting.size() * rows.size()), static_cast<int>(cols.size()), a.field());
    for (std::size_t b = 0; b < acting.size(); ++b) {
      Matrix part = block(a.left_mult(acting[b]), rows, cols);
      for (int i = 0; i < part.rows(); ++i)
        for (int j = 0; j < part.cols(); ++j) stacked(static_cast<int>(b * rows.size()) + i, j) = part(i, j);
    }
    if (rank(stacked) != static_cast<int>(cols.size())) return false;
  }
  return true;
}

bool is_strongly_graded(const GradedAlgebra& g) {
  for (int x = 0; x < g.modulus; ++x)
    for (int y = 0; y < g.modulus; ++y)
      if (component_product(g, x, y).dim() != static_cast<int>(g.component(x + y).size())) return false;
  return true;
}

GradedDiagnostics graded_diagnostics(const GradedAlgebra& g, const SearchOptions& opts) {
  const AlgebraPtr& ap = g.algebra;
  const Algebra& a = *ap;
  const Field f = a.field();
  GradedDiagnostics out;
  out.strongly_graded = is_strongly_graded(g);
  std::vector<int> zero = g.component(0);
  AlgebraPtr a0 = restrict_to_indices(ap, zero);
  Module dual0 = one_sided(dual_bimodule(a0), Side::Left);

  for (int sigma = 0; sigma < g.modulus; ++sigma) {
    const bool faithful = is_faithful(g, sigma);
    out.faithful.push_back(faithful);
    std::vector<int> comp = g.component(sigma);
    if (!faithful || comp.size() != zero.size()) {
      out.graded_frobenius.push_back(Verdict::No);
      out.forms.emplace_back();
      continue;
    }
    Module ms{a0, static_cast<int>(comp.size()), {}, {}, {}};
    for (int i : zero) ms.left.push_back(block(a.left_mult(i), comp, comp));
    for (int i : comp) ms.labels.push_back(a.label(i));
    IsoResult iso = modules_isomorphic(ms, dual0, HomKind::Left, opts);
    out.graded_frobenius.push_back(iso.verdict);
    if (iso.verdict != Verdict::Yes) {
      out.forms.emplace_back();
      continue;
    }
    // lambda(x) = theta(x)(1); 1 has coordinates a0->unit() in A_0
    Vec lambda = a.zero();
    const Vec& one = a0->unit();
    for (std::size_t k = 0; k < comp.size(); ++k) {
      Scalar v = Scalar::zero(f);
      for (int i = 0; i < a0->dim(); ++i) v += iso.witness(i, static_cast<int>(k)) * one[i];
      lambda[comp[k]] = v;
    }
    Matrix nu = nakayama_automorphism(ap, lambda);
    for (int p = 0; p < a.dim(); ++p)
      for (int q = 0; q < a.dim(); ++q)
        check_internal(nu(q, p).is_zero() || g.degrees[p] == g.degrees[q], "graded Nakayama automorphism moves degrees");
    out.forms.emplace_back(std::move(lambda));
  }
  return out;
}

TheoremDData theorem_D_data(const FrobeniusData& fd, Construction& c) {
  const AlgebraPtr& r = fd.algebra;
  const Field f = r->field();
  const int n = c.n;
  const int d = r->dim();
  TensorPowers& powers = *c.powers;
  check_internal(same_algebra(c.base, r) && powers.base().dim == d, "construction is not over the dual bimodule");
  const Algebra& a = *c.algebra();

  TheoremDData out;
  out.lambda = a.zero();
  if (n == 1) {
    out.lambda = c.embed(0, fd.form);
  } else {
    const auto& words = powers.words(n - 1);
    for (std::size_t k = 0; k < words.size(); ++k)
      out.lambda[c.offsets[n - 1] + k] = dot(fd.form, theta_word(fd, words[k]));
  }

  const Matrix twist = fd.nu_power(2 - n);
  out.nakayama = Matrix(a.dim(), a.dim(), f);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) out.nakayama(k, i) = twist(k, i);
  for (int j = 1; j < n; ++j) {
    const auto& words = powers.words(j);
    for (std::size_t k = 0; k < words.size(); ++k) {
      Vec acc;
      for (std::size_t t = 0; t < words[k].size(); ++t) {
        Vec v = fd.gram * (twist * fd.dual_preimage(words[k][t]));
        acc = t == 0 ? v : powers.step(static_cast<int>(t) + 1).project(acc, v);
      }
      out.nakayama.set_col(c.offsets[j] + static_cast<int>(k), c.embed(j, acc));
    }
  }
  out.computed = nakayama_automorphism(c.algebra(), out.lambda);
  out.matches = out.computed == out.nakayama;
  return out;
}

AlgebraPtr ore_quotient(const FrobeniusData& fd, int n, const Vec& c) {
  const Algebra& r = *fd.algebra;
  const int d = r.dim();
  const Field f = r.field();
  AlgebraSpec spec;
  spec.field = f;
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < d; ++a) spec.labels.push_back(j == 0 ? r.label(a) : r.label(a) + "X" + (j > 1 ? "^" + std::to_string(j) : ""));
  spec.table.assign(n * d, std::vector<SparseVec>(n * d));
  std::vector<Matrix> nus;
  for (int j = 0; j < n; ++j) nus.push_back(fd.nu_power(j));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          // (b_a X^j)(b_b X^i) = b_a nu^j(b_b) X^{i+j}, with X^n = c
          Vec v = r.mul(r.basis_vec(a), nus[j].col(b));
          int deg = i + j;
          if (deg >= n) {
            v = r.mul(v, c);
            deg -= n;
          }
          for (int k = 0; k < d; ++k)
            if (!v[k].is_zero()) spec.table[j * d + a][i * d + b].push_back({deg * d + k, v[k]});
        }
  spec.unit = zero_vec(f, n * d);
  for (int k = 0; k < d; ++k) spec.unit[k] = r.unit()[k];
  return build_algebra(std::move(spec));
}

namespace {

void require_c(const FrobeniusData& fd, int n, const Vec& c) {
  if (static_cast<int>(c.size()) != fd.algebra->dim()) fail(ErrorKind::InvalidC, "c has the wrong length");
  if (!associative_c_space(fd, n).contains(c))
    fail(ErrorKind::InvalidC, "c = " + fd.algebra->format(c) + " does not satisfy nu(c) = c and nu^n(r) c = c r");
}

Construction build_with_c(const FrobeniusData& fd, int n, const Vec& c) {
  auto powers = std::make_shared<TensorPowers>(dual_bimodule(fd.algebra));
  Matrix phi = phi_from_c(fd, *powers, n, c);
  return build_A(powers, n, phi);
}

// Block-diagonal map A -> R^n sending degree j to its theta-coordinates.
Matrix normal_form_map(const FrobeniusData& fd, Construction& c) {
  const int d = fd.algebra->dim();
  const Field f = fd.algebra->field();
  Matrix m(c.n * d, c.algebra()->dim(), f);
  for (int k = 0; k < d; ++k) m(k, k) = Scalar::one(f);
  for (int j = 1; j < c.n; ++j) {
    Matrix theta = twisted_presentation(fd, *c.powers, j).matrix;
    for (int row = 0; row < d; ++row)
      for (int col = 0; col < theta.cols(); ++col) m(j * d + row, c.offsets[j] + col) = theta(row, col);
  }
  return m;
}

}  // namespace

OreResult ore_crosscheck(const FrobeniusData& fd, int n, const Vec& c) {
  require_c(fd, n, c);
  Construction con = build_with_c(fd, n, c);
  OreResult out;
  out.ore = ore_quotient(fd, n, c);
  out.iso = normal_form_map(fd, con);
  const Algebra& a = *con.algebra();
  const Algebra& o = *out.ore;
  if (!out.iso.is_square() || rank(out.iso) != a.dim()) {
    out.reason = "basis map is not bijective";
    return out;
  }
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < a.dim(); ++q)
      if (out.iso * a.basis_product(p, q) != o.mul(out.iso.col(p), out.iso.col(q))) {
        out.reason = "structure constants differ at " + a.label(p) + "*" + a.label(q);
        return out;
      }
  out.verdict = Verdict::Yes;
  return out;
}

bool criterion_conditions(const FrobeniusData& fd, int n, const Vec& c, const std::vector<Vec>& r,
                          const std::vector<Vec>& s, std::string* failure) {
  const Algebra& a = *fd.algebra;
  const int d = a.dim();
  auto report = [&](const std::string& what) {
    if (failure) *failure = what;
    return false;
  };
  if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n) return report("need n elements r_j and s_j");
  std::vector<Matrix> nus;
  for (int j = 0; j < n; ++j) nus.push_back(fd.nu_power(j));
  for (int j = 0; j < n; ++j) {
    Matrix tw = fd.nu_power(n - j - 2);
    for (int b = 0; b < d; ++b)
      if (a.mul(r[j], a.basis_vec(b)) != a.mul(tw.col(b), r[j])) return report("(I) fails for j = " + std::to_string(j));
  }
  for (int j = 0; j + 1 < n; ++j)
    if (fd.nu * r[j] != r[j]) return report("(II) fails for j = " + std::to_string(j));
  if (a.mul(fd.nu * r[n - 1], c) != a.mul(r[n - 1], c)) return report("(II) fails for j = n-1");
  for (int k = 0; k < n; ++k) {
    Vec sum = a.zero();
    for (int j = 0; j < n; ++j) {
      Vec t = a.mul(r[j], nus[j] * s[residue(k - j, n)]);
      if (j > k) t = a.mul(t, c);
      sum = add(sum, t);
    }
    if (sum != (k == 0 ? a.unit() : a.zero())) return report("(III) fails in row " + std::to_string(k));
  }
  return true;
}

CriterionResult symmetric_criterion(const FrobeniusData& fd, int n, const Vec& c, const SearchOptions& opts) {
  require_c(fd, n, c);
  Construction con = build_with_c(fd, n, c);
  TheoremDData td = theorem_D_data(fd, con);
  check_internal(td.matches, "closed-form Nakayama automorphism disagrees with the computed one");
  CriterionResult out;
  ElementResult inner = is_inner(con.algebra(), td.nakayama, opts);
  out.verdict = inner.verdict;
  out.reason = inner.reason;
  if (inner.verdict != Verdict::Yes) return out;
  const Algebra& a = *con.algebra();
  auto v = a.inverse(inner.element);
  check_internal(v.has_value(), "inner witness is not invertible");
  Matrix nf = normal_form_map(fd, con);
  Vec ru = nf * inner.element;
  Vec sv = nf * *v;
  const int d = fd.algebra->dim();
  for (int j = 0; j < n; ++j) {
    out.r.emplace_back(ru.begin() + j * d, ru.begin() + (j + 1) * d);
    out.s.emplace_back(sv.begin() + j * d, sv.begin() + (j + 1) * d);
  }
  std::string why;
  out.conditions_hold = criterion_conditions(fd, n, c, out.r, out.s, &why);
  if (!out.conditions_hold) out.reason = "witness does not satisfy the criterion: " + why;
  return out;
}

}  // namespace fdalg
