#include "fdalg/bimodule.hpp"

#include "fdalg/errors.hpp"

namespace fdalg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

Matrix Module::act(Side s, const Vec& a) const {
  const auto& acts = actions(s);
  Matrix out(dim, dim, field());
  for (std::size_t i = 0; i < acts.size(); ++i) out.add_scaled(a[i], acts[i]);
  return out;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->dim() != b->dim() || !(a->field() == b->field())) return false;
  for (int i = 0; i < a->dim(); ++i)
    if (!(a->left_mult(i) == b->left_mult(i))) return false;
  return true;
}

namespace {

void require_same(const Module& m, const Module& n) {
  if (!same_algebra(m.algebra, n.algebra)) fail(ErrorKind::AlgebraMismatch, "modules over different algebras");
}

std::vector<Matrix> generator_actions(const Module& m, Side s) {
  std::vector<Matrix> out;
  for (const auto& g : m.algebra->generators()) out.push_back(m.act(s, g));
  return out;
}

void close_under(Subspace& sub, Vec v, const std::vector<Matrix>& ops) {
  std::vector<Vec> queue;
  if (sub.insert(v)) queue.push_back(std::move(v));
  while (!queue.empty()) {
    Vec x = std::move(queue.back());
    queue.pop_back();
    for (const auto& op : ops) {
      Vec y = op * x;
      if (sub.insert(y)) queue.push_back(std::move(y));
    }
  }
}

std::vector<std::string> default_labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Finite presentation of a one-sided module: generators m_j (basis vectors),
// preimages e_b = sum_j pre[b][j] . m_j, and module generators of the
// relation module inside A^t.
struct Presentation {
  std::vector<int> gens;
  std::vector<std::vector<Vec>> pre;
  std::vector<std::vector<Vec>> relations;
};

Presentation present(const Module& m, Side side) {
  const Algebra& a = *m.algebra;
  const Field f = a.field();
  const int da = a.dim();
  const auto& acts = m.actions(side);
  Presentation p;

  auto gen_acts = generator_actions(m, side);
  Subspace sub(m.dim, f);
  for (int b = 0; b < m.dim; ++b) {
    Vec e = unit_vec(f, m.dim, b);
    if (sub.contains(e)) continue;
    p.gens.push_back(b);
    close_under(sub, std::move(e), gen_acts);
  }
  const int t = static_cast<int>(p.gens.size());
  const int width = t * da;

  Matrix pi(m.dim, width, f);
  for (int j = 0; j < t; ++j)
    for (int k = 0; k < da; ++k)
      for (int r = 0; r < m.dim; ++r) pi(r, j * da + k) = acts[k](r, p.gens[j]);

  Matrix aug(m.dim, width + m.dim, f);
  for (int r = 0; r < m.dim; ++r) {
    for (int c = 0; c < width; ++c) aug(r, c) = pi(r, c);
    aug(r, width + r) = Scalar::one(f);
  }
  auto pivots = rref_in_place(aug);
  check_internal(static_cast<int>(pivots.size()) == m.dim && (pivots.empty() || pivots.back() < width),
                 "module generators do not span");
  p.pre.assign(m.dim, std::vector<Vec>(t, zero_vec(f, da)));
  for (int b = 0; b < m.dim; ++b)
    for (int r = 0; r < m.dim; ++r) {
      const Scalar& x = aug(r, width + b);
      if (!x.is_zero()) p.pre[b][pivots[r] / da][pivots[r] % da] = x;
    }

  Matrix kernel = nullspace(pi);
  if (kernel.rows() == 0) return p;
  std::vector<Matrix> block_ops;
  for (const auto& g : a.generators()) {
    Matrix mg = side == Side::Left ? a.left_mult(g) : a.right_mult(g);
    Matrix op(width, width, f);
    for (int j = 0; j < t; ++j)
      for (int r = 0; r < da; ++r)
        for (int c = 0; c < da; ++c) op(j * da + r, j * da + c) = mg(r, c);
    block_ops.push_back(std::move(op));
  }
  Subspace rel(width, f);
  for (int i = 0; i < kernel.rows(); ++i) {
    Vec v = kernel.row(i);
    if (rel.contains(v)) continue;
    std::vector<Vec> tuple;
    for (int j = 0; j < t; ++j) tuple.emplace_back(v.begin() + j * da, v.begin() + (j + 1) * da);
    p.relations.push_back(std::move(tuple));
    close_under(rel, std::move(v), block_ops);
  }
  return p;
}

}  // namespace

void validate_module(const Module& m) {
  const Algebra& a = *m.algebra;
  const Field f = a.field();
  const int da = a.dim();
  auto check_side = [&](Side s) {
    const auto& acts = m.actions(s);
    const char* name = s == Side::Left ? "left" : "right";
    if (static_cast<int>(acts.size()) != da)
      fail(ErrorKind::Validation, std::string(name) + " action table needs one matrix per basis element");
    for (const auto& x : acts)
      if (x.rows() != m.dim || x.cols() != m.dim || !(x.field() == f))
        fail(ErrorKind::Validation, std::string(name) + " action matrix has the wrong shape");
    if (!(m.act(s, a.unit()) == Matrix::identity(m.dim, f)))
      fail(ErrorKind::Validation, std::string("unit does not act as identity on the ") + name);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) {
        Matrix prod = m.act(s, a.basis_product(i, j));
        Matrix comp = s == Side::Left ? acts[i] * acts[j] : acts[j] * acts[i];
        if (!(prod == comp))
          fail(ErrorKind::Validation, std::string(name) + " action fails at (" + a.label(i) + ", " + a.label(j) + ")");
      }
  };
  if (m.has_left()) check_side(Side::Left);
  if (m.has_right()) check_side(Side::Right);
  if (m.is_bimodule())
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        if (!(m.left[i] * m.right[j] == m.right[j] * m.left[i]))
          fail(ErrorKind::Validation, "left and right actions do not commute at (" + a.label(i) + ", " + a.label(j) + ")");
}

Module regular_bimodule(const AlgebraPtr& a) {
  Module m{a, a->dim(), {}, {}, a->labels()};
  for (int i = 0; i < a->dim(); ++i) {
    m.left.push_back(a->left_mult(i));
    m.right.push_back(a->right_mult(i));
  }
  return m;
}

Module dual_bimodule(const AlgebraPtr& a) {
  Module m{a, a->dim(), {}, {}, {}};
  for (int i = 0; i < a->dim(); ++i) {
    m.left.push_back(a->right_mult(i).transpose());
    m.right.push_back(a->left_mult(i).transpose());
    m.labels.push_back(a->label(i) + "*");
  }
  return m;
}

Module twisted_bimodule(const AlgebraPtr& a, const Matrix& alpha, const Matrix& beta) {
  require_automorphism(*a, alpha, "left twist");
  require_automorphism(*a, beta, "right twist");
  Module m{a, a->dim(), {}, {}, a->labels()};
  for (int i = 0; i < a->dim(); ++i) {
    m.left.push_back(a->left_mult(alpha.col(i)));
    m.right.push_back(a->right_mult(beta.col(i)));
  }
  return m;
}

Module one_sided(const Module& m, Side s) {
  Module out = m;
  if (s == Side::Left) out.right.clear();
  else out.left.clear();
  return out;
}

Subspace generated_submodule(const Module& m, const std::vector<Vec>& vectors, bool left, bool right) {
  std::vector<Matrix> ops;
  if (left && m.has_left())
    for (auto& x : generator_actions(m, Side::Left)) ops.push_back(std::move(x));
  if (right && m.has_right())
    for (auto& x : generator_actions(m, Side::Right)) ops.push_back(std::move(x));
  Subspace sub(m.dim, m.field());
  for (const auto& v : vectors) close_under(sub, v, ops);
  return sub;
}

namespace {

void require_stable(const Module& m, const Subspace& s) {
  for (Side side : {Side::Left, Side::Right})
    for (const auto& x : m.actions(side))
      for (const auto& v : s.basis())
        if (!s.contains(x * v)) fail(ErrorKind::Validation, "subspace is not a submodule");
}

}  // namespace

Submodule submodule(const Module& m, const Subspace& s) {
  require_stable(m, s);
  const Field f = m.field();
  Submodule out;
  out.inclusion = Matrix::from_columns(s.basis(), m.dim, f);
  out.module.algebra = m.algebra;
  out.module.dim = s.dim();
  for (int i = 0; i < s.dim(); ++i) {
    const Vec& v = s.basis()[i];
    int hit = -1;
    bool unit = true;
    for (int r = 0; r < m.dim && unit; ++r) {
      if (v[r].is_zero()) continue;
      if (v[r].is_one() && hit < 0) hit = r;
      else unit = false;
    }
    out.module.labels.push_back(unit && hit >= 0 && hit < static_cast<int>(m.labels.size()) ? m.labels[hit]
                                                                                          : "s" + std::to_string(i));
  }
  for (Side side : {Side::Left, Side::Right}) {
    auto& dst = side == Side::Left ? out.module.left : out.module.right;
    for (const auto& x : m.actions(side)) {
      std::vector<Vec> cols;
      for (const auto& v : s.basis()) cols.push_back(s.coords(x * v));
      dst.push_back(Matrix::from_columns(cols, s.dim(), f));
    }
  }
  return out;
}

QuotientModule quotient_module(const Module& m, const Subspace& s) {
  require_stable(m, s);
  const Field f = m.field();
  QuotientModule out;
  out.kernel = s;
  auto reps = s.free_columns();
  const int q = static_cast<int>(reps.size());
  out.module.algebra = m.algebra;
  out.module.dim = q;
  for (int r : reps) out.module.labels.push_back(r < static_cast<int>(m.labels.size()) ? m.labels[r] : "q" + std::to_string(r));
  for (Side side : {Side::Left, Side::Right}) {
    auto& dst = side == Side::Left ? out.module.left : out.module.right;
    for (const auto& x : m.actions(side)) {
      std::vector<Vec> cols;
      for (int r : reps) cols.push_back(s.quotient_coords(x.col(r)));
      dst.push_back(Matrix::from_columns(cols, q, f));
    }
  }
  return out;
}

Submodule socle(const Module& m) {
  if (!m.has_left()) fail(ErrorKind::Validation, "socle needs a left action");
  Subspace j = jacobson_radical(*m.algebra);
  Matrix stacked(j.dim() * m.dim, m.dim, m.field());
  for (int k = 0; k < j.dim(); ++k) {
    Matrix x = m.act(Side::Left, j.basis()[k]);
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c) stacked(k * m.dim + r, c) = x(r, c);
  }
  Matrix ns = nullspace(stacked);
  std::vector<Vec> rows;
  for (int i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
  return submodule(m, Subspace::span(rows, m.dim, m.field()));
}

QuotientModule top(const Module& m) {
  if (!m.has_left()) fail(ErrorKind::Validation, "top needs a left action");
  Subspace j = jacobson_radical(*m.algebra);
  Subspace jm(m.dim, m.field());
  for (const auto& x : j.basis()) {
    Matrix act = m.act(Side::Left, x);
    for (int c = 0; c < m.dim; ++c) jm.insert(act.col(c));
  }
  return quotient_module(m, jm);
}

Matrix HomSpace::element(const Vec& c) const {
  Matrix out(rows, cols, flat.field());
  for (int i = 0; i < dim(); ++i) out.add_scaled(c[i], basis[i]);
  return out;
}

namespace {

HomSpace make_hom_space(const std::vector<Matrix>& maps, int rows, int cols, Field f) {
  HomSpace h;
  h.rows = rows;
  h.cols = cols;
  h.flat = Subspace(rows * cols, f);
  for (const auto& x : maps) h.flat.insert(x.data());
  for (const auto& v : h.flat.basis()) h.basis.push_back(Matrix::from_flat(v, rows, cols, f));
  return h;
}

// Homs for one side, solved on the generators of a presentation of m.
std::vector<Matrix> one_sided_homs(const Module& m, const Module& n, Side side) {
  const Field f = m.field();
  const int dn = n.dim;
  Presentation p = present(m, side);
  const int t = static_cast<int>(p.gens.size());

  Matrix system(static_cast<int>(p.relations.size()) * dn, t * dn, f);
  for (std::size_t r = 0; r < p.relations.size(); ++r)
    for (int j = 0; j < t; ++j) {
      Matrix x = n.act(side, p.relations[r][j]);
      for (int a = 0; a < dn; ++a)
        for (int b = 0; b < dn; ++b) system(static_cast<int>(r) * dn + a, j * dn + b) = x(a, b);
    }
  Matrix sols = p.relations.empty() ? Matrix::identity(t * dn, f) : nullspace(system);
  if (sols.rows() == 0) return {};

  std::vector<std::vector<Matrix>> pre_acts(m.dim);
  for (int b = 0; b < m.dim; ++b)
    for (int j = 0; j < t; ++j) pre_acts[b].push_back(n.act(side, p.pre[b][j]));

  std::vector<Matrix> out;
  for (int s = 0; s < sols.rows(); ++s) {
    Vec z = sols.row(s);
    std::vector<Vec> images;
    for (int j = 0; j < t; ++j) images.emplace_back(z.begin() + j * dn, z.begin() + (j + 1) * dn);
    Matrix fmat(dn, m.dim, f);
    for (int b = 0; b < m.dim; ++b) {
      Vec col = zero_vec(f, dn);
      for (int j = 0; j < t; ++j) axpy(col, Scalar::one(f), pre_acts[b][j] * images[j]);
      fmat.set_col(b, col);
    }
    out.push_back(std::move(fmat));
  }
  return out;
}

}  // namespace

HomSpace hom_space(const Module& m, const Module& n, HomKind kind) {
  require_same(m, n);
  const Field f = m.field();
  const Side side = kind == HomKind::Right ? Side::Right : Side::Left;
  if (m.actions(side).empty() || n.actions(side).empty())
    fail(ErrorKind::Validation, "hom space needs the requested actions on both modules");
  if (kind == HomKind::Bi && (!m.is_bimodule() || !n.is_bimodule()))
    fail(ErrorKind::Validation, "bimodule homs need bimodules");
  if (m.dim == 0 || n.dim == 0) return make_hom_space({}, n.dim, m.dim, f);

  std::vector<Matrix> maps = one_sided_homs(m, n, side);
  if (kind == HomKind::Bi && !maps.empty()) {
    auto gm = generator_actions(m, Side::Right);
    auto gn = generator_actions(n, Side::Right);
    const int block = n.dim * m.dim;
    Matrix system(block * static_cast<int>(gm.size()), static_cast<int>(maps.size()), f);
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t g = 0; g < gm.size(); ++g) {
        Matrix d = maps[i] * gm[g] - gn[g] * maps[i];
        for (int e = 0; e < block; ++e) system(static_cast<int>(g) * block + e, static_cast<int>(i)) = d.data()[e];
      }
    Matrix sols = nullspace(system);
    std::vector<Matrix> bi;
    for (int s = 0; s < sols.rows(); ++s) {
      Matrix x(n.dim, m.dim, f);
      for (std::size_t i = 0; i < maps.size(); ++i) x.add_scaled(sols(s, static_cast<int>(i)), maps[i]);
      bi.push_back(std::move(x));
    }
    maps = std::move(bi);
  }
  return make_hom_space(maps, n.dim, m.dim, f);
}

bool is_hom(const Module& m, const Module& n, const Matrix& fmat, HomKind kind) {
  require_same(m, n);
  if (fmat.rows() != n.dim || fmat.cols() != m.dim) return false;
  auto check = [&](Side s) {
    const auto& am = m.actions(s);
    const auto& an = n.actions(s);
    if (am.empty() || an.empty()) return false;
    for (std::size_t i = 0; i < am.size(); ++i)
      if (!(fmat * am[i] == an[i] * fmat)) return false;
    return true;
  };
  switch (kind) {
    case HomKind::Left: return check(Side::Left);
    case HomKind::Right: return check(Side::Right);
    case HomKind::Bi: return check(Side::Left) && check(Side::Right);
  }
  return false;
}

Vec TensorFactorization::project(const Vec& m, const Vec& n) const {
  Vec out = zero_vec(projection.field(), projection.rows());
  for (int b = 0; b < left_dim; ++b) {
    if (m[b].is_zero()) continue;
    for (int c = 0; c < right_dim; ++c) {
      if (n[c].is_zero()) continue;
      axpy(out, m[b] * n[c], project_pure(b, c));
    }
  }
  return out;
}

Vec TensorFactorization::lift(const Vec& x) const {
  Vec out = zero_vec(projection.field(), left_dim * right_dim);
  for (std::size_t s = 0; s < section.size(); ++s) out[section[s].first * right_dim + section[s].second] = x[s];
  return out;
}

TensorFactorization tensor_over(const Module& m, const Module& n) {
  require_same(m, n);
  if (!m.has_right() || !n.has_left()) fail(ErrorKind::Validation, "tensor product needs a right and a left action");
  const Field f = m.field();
  const int dm = m.dim;
  const int dn = n.dim;
  TensorFactorization tf;
  tf.left_dim = dm;
  tf.right_dim = dn;
  tf.result.algebra = m.algebra;

  if (dm == 0 || dn == 0) {
    tf.projection = Matrix(0, dm * dn, f);
    if (m.has_left()) tf.result.left.assign(m.algebra->dim(), Matrix(0, 0, f));
    if (n.has_right()) tf.result.right.assign(m.algebra->dim(), Matrix(0, 0, f));
    return tf;
  }

  // m (x) n lives in n^t modulo the images of the relations of m.
  Presentation p = present(m, Side::Right);
  const int t = static_cast<int>(p.gens.size());
  Subspace w(t * dn, f);
  for (const auto& rel : p.relations) {
    std::vector<Matrix> acts;
    for (int j = 0; j < t; ++j) acts.push_back(n.act(Side::Left, rel[j]));
    for (int c = 0; c < dn; ++c) {
      Vec v(t * dn);
      for (int j = 0; j < t; ++j)
        for (int r = 0; r < dn; ++r) v[j * dn + r] = acts[j](r, c);
      w.insert(std::move(v));
    }
  }
  const int q = t * dn - w.dim();

  Matrix p0(q, dm * dn, f);
  for (int b = 0; b < dm; ++b) {
    std::vector<Matrix> acts;
    for (int j = 0; j < t; ++j) acts.push_back(n.act(Side::Left, p.pre[b][j]));
    for (int c = 0; c < dn; ++c) {
      Vec v(t * dn);
      for (int j = 0; j < t; ++j)
        for (int r = 0; r < dn; ++r) v[j * dn + r] = acts[j](r, c);
      Vec qc = w.quotient_coords(v);
      for (int r = 0; r < q; ++r) p0(r, b * dn + c) = qc[r];
    }
  }
  auto pivots = rref_in_place(p0);
  check_internal(static_cast<int>(pivots.size()) == q, "pure tensors do not span the tensor product");
  tf.projection = std::move(p0);
  for (int col : pivots) tf.section.emplace_back(col / dn, col % dn);

  Module& res = tf.result;
  res.dim = q;
  for (const auto& [b, c] : tf.section) {
    std::string lb = b < static_cast<int>(m.labels.size()) ? m.labels[b] : std::to_string(b);
    std::string lc = c < static_cast<int>(n.labels.size()) ? n.labels[c] : std::to_string(c);
    res.labels.push_back(lb + "⊗" + lc);
  }
  const int da = m.algebra->dim();
  if (m.has_left()) {
    for (int a = 0; a < da; ++a) {
      Matrix x(q, q, f);
      for (int s = 0; s < q; ++s) {
        auto [b, c] = tf.section[s];
        Vec col = zero_vec(f, q);
        for (int b2 = 0; b2 < dm; ++b2) {
          const Scalar& coef = m.left[a](b2, b);
          if (!coef.is_zero()) axpy(col, coef, tf.project_pure(b2, c));
        }
        x.set_col(s, col);
      }
      res.left.push_back(std::move(x));
    }
  }
  if (n.has_right()) {
    for (int a = 0; a < da; ++a) {
      Matrix x(q, q, f);
      for (int s = 0; s < q; ++s) {
        auto [b, c] = tf.section[s];
        Vec col = zero_vec(f, q);
        for (int c2 = 0; c2 < dn; ++c2) {
          const Scalar& coef = n.right[a](c2, c);
          if (!coef.is_zero()) axpy(col, coef, tf.project_pure(b, c2));
        }
        x.set_col(s, col);
      }
      res.right.push_back(std::move(x));
    }
  }
  return tf;
}

TensorPowers::TensorPowers(Module m) : base_(std::move(m)) {
  if (!base_.is_bimodule()) fail(ErrorKind::Validation, "tensor powers need a bimodule");
  if (base_.labels.empty())
    base_.labels = default_labels("m", base_.dim);
  steps_.resize(2);
  powers_.push_back(Module{});
  powers_.push_back(base_);
  words_.resize(2);
  for (int b = 0; b < base_.dim; ++b) words_[1].push_back({b});
}

void TensorPowers::extend(int j) {
  if (j < 1) fail(ErrorKind::BadParams, "tensor powers start at 1");
  while (static_cast<int>(powers_.size()) <= j) {
    const int k = static_cast<int>(powers_.size());
    TensorFactorization tf = tensor_over(powers_[k - 1], base_);
    std::vector<std::vector<int>> w;
    for (const auto& [b, c] : tf.section) {
      auto word = words_[k - 1][b];
      word.push_back(c);
      w.push_back(std::move(word));
    }
    powers_.push_back(tf.result);
    steps_.push_back(std::move(tf));
    words_.push_back(std::move(w));
  }
}

const Module& TensorPowers::power(int j) {
  extend(j);
  return powers_[j];
}

const TensorFactorization& TensorPowers::step(int j) {
  if (j < 2) fail(ErrorKind::BadParams, "tensor power steps start at 2");
  extend(j);
  return steps_[j];
}

const std::vector<std::vector<int>>& TensorPowers::words(int j) {
  extend(j);
  return words_[j];
}

const Vec& TensorPowers::word_coords(const std::vector<int>& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  const int k = static_cast<int>(w.size());
  const Field f = base_.field();
  Vec out;
  if (k == 1) {
    out = unit_vec(f, base_.dim, w[0]);
  } else {
    const TensorFactorization& tf = step(k);
    Vec prefix = word_coords(std::vector<int>(w.begin(), w.end() - 1));
    out = zero_vec(f, tf.result.dim);
    for (std::size_t b = 0; b < prefix.size(); ++b)
      if (!prefix[b].is_zero()) axpy(out, prefix[b], tf.project_pure(static_cast<int>(b), w.back()));
  }
  return memo_.emplace(w, std::move(out)).first->second;
}

namespace {

IsoResult search_iso(const std::vector<Matrix>& span, const SearchOptions& opts) {
  IsoResult r;
  SpanSearchResult s = find_invertible_in_span(span, opts);
  r.trials = s.trials;
  switch (s.kind) {
    case SpanSearchResult::Kind::Witness:
      r.verdict = Verdict::Yes;
      r.witness = std::move(s.combination);
      break;
    case SpanSearchResult::Kind::None:
      r.verdict = Verdict::No;
      r.reason = "no invertible map: " + s.certificate;
      break;
    case SpanSearchResult::Kind::ProbablyNone:
      r.verdict = Verdict::Undecided;
      r.reason = "no invertible map in " + std::to_string(s.trials) + " trials";
      break;
  }
  return r;
}

}  // namespace

IsoResult modules_isomorphic(const Module& m, const Module& n, HomKind kind, const SearchOptions& opts) {
  require_same(m, n);
  IsoResult r;
  if (m.dim != n.dim) {
    r.verdict = Verdict::No;
    r.reason = "dimensions differ (" + std::to_string(m.dim) + " vs " + std::to_string(n.dim) + ")";
    return r;
  }
  if (m.dim == 0) {
    r.verdict = Verdict::Yes;
    r.witness = Matrix(0, 0, m.field());
    return r;
  }
  HomSpace h = hom_space(m, n, kind);
  if (h.dim() == 0) {
    r.verdict = Verdict::No;
    r.reason = "zero hom space";
    return r;
  }
  r = search_iso(h.basis, opts);
  if (r.verdict == Verdict::Yes) check_internal(is_hom(m, n, r.witness, kind), "isomorphism witness is not a hom");
  return r;
}

IsoResult isomorphic_to_regular(const Module& m, const SearchOptions& opts) {
  if (!m.is_bimodule()) fail(ErrorKind::Validation, "regular comparison needs a bimodule");
  const Algebra& a = *m.algebra;
  const Field f = a.field();
  IsoResult r;
  if (m.dim != a.dim()) {
    r.verdict = Verdict::No;
    r.reason = "dimension " + std::to_string(m.dim) + " differs from dim R = " + std::to_string(a.dim());
    return r;
  }
  auto gl = generator_actions(m, Side::Left);
  auto gr = generator_actions(m, Side::Right);
  Matrix system(static_cast<int>(gl.size()) * m.dim, m.dim, f);
  for (std::size_t g = 0; g < gl.size(); ++g) {
    Matrix d = gl[g] - gr[g];
    for (int i = 0; i < m.dim; ++i)
      for (int c = 0; c < m.dim; ++c) system(static_cast<int>(g) * m.dim + i, c) = d(i, c);
  }
  Matrix central = nullspace(system);
  if (central.rows() == 0) {
    r.verdict = Verdict::No;
    r.reason = "no nonzero element commutes with R";
    return r;
  }
  std::vector<Matrix> span;
  for (int s = 0; s < central.rows(); ++s) {
    Vec x = central.row(s);
    Matrix phi(m.dim, a.dim(), f);
    for (int i = 0; i < a.dim(); ++i) phi.set_col(i, m.left[i] * x);
    span.push_back(std::move(phi));
  }
  r = search_iso(span, opts);
  return r;
}

Module left_dual(const Module& m) {
  if (!m.is_bimodule()) fail(ErrorKind::Validation, "dual needs a bimodule");
  const AlgebraPtr& a = m.algebra;
  const Field f = a->field();
  Module reg = regular_bimodule(a);
  HomSpace h = hom_space(one_sided(m, Side::Left), one_sided(reg, Side::Left), HomKind::Left);
  const int dh = h.dim();
  const int da = a->dim();
  const int dm = m.dim;
  const auto& piv = h.flat.pivots();

  Module out{a, dh, {}, {}, default_labels("h", dh)};
  for (int i = 0; i < da; ++i) {
    const Matrix& rm = m.right[i];
    const Matrix& ra = a->right_mult(i);
    Matrix lx(dh, dh, f);
    Matrix rx(dh, dh, f);
    for (int k = 0; k < dh; ++k) {
      const Matrix& fk = h.basis[k];
      for (int p = 0; p < dh; ++p) {
        const int row = piv[p] / dm;
        const int col = piv[p] % dm;
        Scalar sl;
        Scalar sr;
        for (int e = 0; e < dm; ++e) {
          const Scalar& x = fk(row, e);
          if (!x.is_zero() && !rm(e, col).is_zero()) sl += x * rm(e, col);
        }
        for (int e = 0; e < da; ++e) {
          const Scalar& x = ra(row, e);
          if (!x.is_zero() && !fk(e, col).is_zero()) sr += x * fk(e, col);
        }
        lx(p, k) = sl.in_field(f);
        rx(p, k) = sr.in_field(f);
      }
    }
    out.left.push_back(std::move(lx));
    out.right.push_back(std::move(rx));
  }
  return out;
}

InvertibilityResult is_invertible_bimodule(const Module& m, const SearchOptions& opts) {
  InvertibilityResult r;
  const int da = m.algebra->dim();
  Module dual = left_dual(m);
  Module x = tensor_over(m, dual).result;
  if (x.dim != da) {
    r.verdict = Verdict::No;
    r.reason = "dim(M ⊗ M^v) = " + std::to_string(x.dim) + " but dim R = " + std::to_string(da);
    return r;
  }
  Module y = tensor_over(dual, m).result;
  if (y.dim != da) {
    r.verdict = Verdict::No;
    r.reason = "dim(M^v ⊗ M) = " + std::to_string(y.dim) + " but dim R = " + std::to_string(da);
    return r;
  }
  IsoResult rx = isomorphic_to_regular(x, opts);
  IsoResult ry = isomorphic_to_regular(y, opts);
  if (rx.verdict == Verdict::No || ry.verdict == Verdict::No) {
    r.verdict = Verdict::No;
    r.reason = rx.verdict == Verdict::No ? "M ⊗ M^v is not R: " + rx.reason : "M^v ⊗ M is not R: " + ry.reason;
  } else if (rx.verdict == Verdict::Yes && ry.verdict == Verdict::Yes) {
    r.verdict = Verdict::Yes;
  } else {
    r.verdict = Verdict::Undecided;
    r.reason = rx.verdict == Verdict::Undecided ? rx.reason : ry.reason;
  }
  return r;
}

PicOrder pic_order_of_dual(const AlgebraPtr& a, int limit, const SearchOptions& opts) {
  if (limit < 1) fail(ErrorKind::BadParams, "search limit must be positive");
  Module dual = dual_bimodule(a);
  InvertibilityResult inv = is_invertible_bimodule(dual, opts);
  PicOrder out;
  if (inv.verdict == Verdict::No) fail(ErrorKind::DualNotInvertible, "R* is not invertible: " + inv.reason);
  if (inv.verdict == Verdict::Undecided) {
    out.kind = PicOrder::Kind::Undecided;
    out.certificate = "invertibility of R* undecided: " + inv.reason;
    return out;
  }
  TensorPowers powers(dual);
  for (int k = 1; k <= limit; ++k) {
    IsoResult r = isomorphic_to_regular(powers.power(k), opts);
    if (r.verdict == Verdict::Yes) {
      out.kind = PicOrder::Kind::Order;
      out.value = k;
      return out;
    }
    if (r.verdict == Verdict::Undecided) {
      out.kind = PicOrder::Kind::Undecided;
      out.value = k;
      out.certificate = "power " + std::to_string(k) + ": " + r.reason;
      return out;
    }
    if (!out.certificate.empty()) out.certificate += "; ";
    out.certificate += "power " + std::to_string(k) + ": " + r.reason;
  }
  out.kind = PicOrder::Kind::NoneUpTo;
  out.value = limit;
  return out;
}

}  // namespace fdalg
