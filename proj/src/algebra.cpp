#include "fdalg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "fdalg/errors.hpp"

namespace fdalg {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (int k = 0; k < static_cast<int>(v.size()); ++k) {
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  }
  return out;
}

std::vector<Vec> closure_of(const Algebra& a, const std::vector<Vec>& gens) {
  Subspace v(a.dim(), a.field());
  std::vector<Vec> queue{a.unit()};
  v.insert(a.unit());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      Vec w = a.mul(queue[q], g);
      if (v.insert(w)) queue.push_back(std::move(w));
    }
  }
  return v.basis();
}

}  // namespace

int Algebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim_; ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

Vec Algebra::basis_product(int i, int j) const {
  Vec v = zero();
  for (const auto& t : table_[i][j]) v[t.index] = t.coeff;
  return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : table_[i][j]) r[t.index] += ab * t.coeff;
    }
  }
  return r;
}

Vec Algebra::pow(const Vec& a, int e) const {
  Vec r = unit_;
  for (int k = 0; k < e; ++k) r = mul(r, a);
  return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(dim_, dim_, field_);
  for (int i = 0; i < dim_; ++i) {
    if (!a[i].is_zero()) m.add_scaled(a[i], left_[i]);
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(dim_, dim_, field_);
  for (int i = 0; i < dim_; ++i) {
    if (!a[i].is_zero()) m.add_scaled(a[i], right_[i]);
  }
  return m;
}

Vec Algebra::element(const std::string& expr) const {
  std::string s = trim(expr);
  Vec v = zero();
  if (s.empty()) throw Error(ErrorKind::Validation, "empty element expression");
  // Split into signed terms at " + " and " - ".
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  if (s[0] == '-' && s.size() > 1 && s[1] == ' ') {
    sign = -1;
    s = trim(s.substr(1));
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
      terms.emplace_back(sign, trim(s.substr(start, i - start)));
      sign = s[i + 1] == '+' ? 1 : -1;
      start = i + 3;
      i += 2;
    }
  }
  terms.emplace_back(sign, trim(s.substr(start)));
  for (const auto& [sg, term] : terms) {
    Scalar coef = Scalar::one(field_);
    std::string label = term;
    int idx = index_of(term);
    if (idx < 0) {
      auto star = term.find('*');
      if (star != std::string::npos) {
        coef = Scalar::parse(field_, trim(term.substr(0, star)));
        label = trim(term.substr(star + 1));
        idx = index_of(label);
        if (idx < 0) throw Error(ErrorKind::Validation, "unknown basis label '" + label + "'");
      } else {
        coef = Scalar::parse(field_, term);
      }
    }
    if (sg < 0) coef = -coef;
    if (idx >= 0) {
      v[idx] += coef;
    } else {
      axpy(v, coef, unit_);
    }
  }
  return v;
}

std::string Algebra::format(const Vec& v) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    bool neg = field_.is_rational() && !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (c == "1") {
      out << labels_[i];
    } else {
      out << c << "*" << labels_[i];
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

bool Algebra::is_invertible(const Vec& a) const { return rank(left_mult(a)) == dim_; }

std::optional<Vec> Algebra::inverse(const Vec& a) const {
  auto x = solve(left_mult(a), unit_);
  if (!x) return std::nullopt;
  if (mul(*x, a) != unit_) return std::nullopt;
  return x;
}

Poly Algebra::minimal_polynomial(const Vec& a, const Vec& one) const {
  std::vector<Vec> powers{one};
  Subspace span(dim_, field_);
  span.insert(one);
  for (;;) {
    Vec next = mul(powers.back(), a);
    if (span.contains(next)) {
      Matrix m = Matrix::from_columns(powers, dim_, field_);
      auto x = solve(m, next);
      check_internal(x.has_value(), "minimal polynomial solve");
      Vec c(powers.size() + 1, Scalar::zero(field_));
      for (std::size_t i = 0; i < powers.size(); ++i) c[i] = -(*x)[i];
      c.back() = Scalar::one(field_);
      return Poly(field_, c);
    }
    span.insert(next);
    powers.push_back(std::move(next));
  }
}

Vec Algebra::eval_poly(const Poly& p, const Vec& a, const Vec& one) const {
  Vec acc = zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul(acc, a);
    axpy(acc, p.coeff(i), one);
  }
  return acc;
}

AlgebraSpec Algebra::spec() const {
  return AlgebraSpec{field_, labels_, table_, unit_, hints_};
}

AlgebraPtr build_algebra(AlgebraSpec spec) {
  const int d = static_cast<int>(spec.labels.size());
  const Field f = spec.field;
  if (d == 0) fail(ErrorKind::Validation, "zero-dimensional algebras are not supported");
  if (static_cast<int>(spec.table.size()) != d) fail(ErrorKind::Validation, "multiplication table must be d x d");
  for (const auto& row : spec.table) {
    if (static_cast<int>(row.size()) != d) fail(ErrorKind::Validation, "multiplication table must be d x d");
  }
  if (static_cast<int>(spec.unit.size()) != d) fail(ErrorKind::Validation, "unit vector has wrong length");
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (spec.labels[i] == spec.labels[j]) fail(ErrorKind::Validation, "duplicate basis label '" + spec.labels[i] + "'");
    }
  }

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->field_ = f;
  alg->dim_ = d;
  alg->labels_ = std::move(spec.labels);
  alg->table_.assign(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vec acc = zero_vec(f, d);
      for (const auto& t : spec.table[i][j]) {
        if (t.index < 0 || t.index >= d) fail(ErrorKind::Validation, "product index out of range");
        acc[t.index] += t.coeff.in_field(f);
      }
      alg->table_[i][j] = to_sparse(acc);
    }
  }
  alg->unit_.resize(d);
  for (int i = 0; i < d; ++i) alg->unit_[i] = spec.unit[i].in_field(f);

  const Algebra& a = *alg;
  auto name3 = [&](int i, int j, int k) {
    return "(" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")";
  };
  Vec lhs(d), rhs(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar::zero(f));
        std::fill(rhs.begin(), rhs.end(), Scalar::zero(f));
        for (const auto& t : a.table_[i][j]) {
          for (const auto& u : a.table_[t.index][k]) lhs[u.index] += t.coeff * u.coeff;
        }
        for (const auto& t : a.table_[j][k]) {
          for (const auto& u : a.table_[i][t.index]) rhs[u.index] += t.coeff * u.coeff;
        }
        if (lhs != rhs) fail(ErrorKind::Validation, "associativity fails at triple " + name3(i, j, k));
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    Vec b = a.basis_vec(i);
    if (a.mul(a.unit_, b) != b) fail(ErrorKind::Validation, "left unit law fails at " + a.label(i));
    if (a.mul(b, a.unit_) != b) fail(ErrorKind::Validation, "right unit law fails at " + a.label(i));
  }

  alg->left_.assign(d, Matrix(d, d, f));
  alg->right_.assign(d, Matrix(d, d, f));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const auto& t : a.table_[i][j]) {
        alg->left_[i](t.index, j) = t.coeff;
        alg->right_[j](t.index, i) = t.coeff;
      }
    }
  }

  for (auto& h : spec.idempotent_hints) {
    if (static_cast<int>(h.size()) != d) fail(ErrorKind::Validation, "idempotent hint has wrong length");
    for (auto& c : h) c = c.in_field(f);
    if (a.mul(h, h) != h) fail(ErrorKind::NotIdempotent, "idempotent hint " + a.format(h) + " is not idempotent");
  }
  for (std::size_t p = 0; p < spec.idempotent_hints.size(); ++p) {
    for (std::size_t q = 0; q < spec.idempotent_hints.size(); ++q) {
      if (p != q && !is_zero(a.mul(spec.idempotent_hints[p], spec.idempotent_hints[q]))) {
        fail(ErrorKind::Validation, "idempotent hints are not orthogonal");
      }
    }
  }
  alg->hints_ = std::move(spec.idempotent_hints);

  std::vector<Vec> gens;
  Subspace generated = Subspace::span(closure_of(a, gens), d, f);
  for (int i = 0; i < d && generated.dim() < d; ++i) {
    Vec b = a.basis_vec(i);
    if (generated.contains(b)) continue;
    gens.push_back(b);
    generated = Subspace::span(closure_of(a, gens), d, f);
  }
  alg->generators_ = std::move(gens);
  return alg;
}

AlgebraBuilder::AlgebraBuilder(Field f, std::vector<std::string> labels)
    : field_(f), labels_(std::move(labels)) {
  const int d = static_cast<int>(labels_.size());
  dense_.assign(d, std::vector<Vec>(d, zero_vec(f, d)));
  unit_ = zero_vec(f, d);
}

int AlgebraBuilder::index(const std::string& label) const {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i] == label) return i;
  }
  throw Error(ErrorKind::BadParams, "unknown label '" + label + "'");
}

AlgebraBuilder& AlgebraBuilder::set(const std::string& i, const std::string& j, const std::string& k,
                                    const Scalar& coeff) {
  return set(index(i), index(j), index(k), coeff);
}

AlgebraBuilder& AlgebraBuilder::set(int i, int j, int k, const Scalar& coeff) {
  dense_[i][j][k] += coeff.in_field(field_);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::unit(Vec u) {
  unit_ = std::move(u);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::unit(const std::string& expr) {
  Vec u = zero_vec(field_, static_cast<int>(labels_.size()));
  std::stringstream ss(expr);
  std::string tok;
  while (std::getline(ss, tok, '+')) u[index(trim(tok))] += Scalar::one(field_);
  unit_ = u;
  return *this;
}

AlgebraBuilder& AlgebraBuilder::hint(Vec e) {
  hints_.push_back(std::move(e));
  return *this;
}

AlgebraBuilder& AlgebraBuilder::hint(const std::string& expr) {
  Vec u = zero_vec(field_, static_cast<int>(labels_.size()));
  std::stringstream ss(expr);
  std::string tok;
  while (std::getline(ss, tok, '+')) u[index(trim(tok))] += Scalar::one(field_);
  hints_.push_back(u);
  return *this;
}

AlgebraPtr AlgebraBuilder::build() const {
  AlgebraSpec spec;
  spec.field = field_;
  spec.labels = labels_;
  const int d = static_cast<int>(labels_.size());
  spec.table.assign(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) spec.table[i][j] = to_sparse(dense_[i][j]);
  spec.unit = unit_;
  spec.idempotent_hints = hints_;
  return build_algebra(std::move(spec));
}

AlgebraPtr change_basis(const AlgebraPtr& a, const Matrix& basis, std::vector<std::string> labels) {
  const int d = a->dim();
  auto inv = inverse(basis);
  if (!inv) fail(ErrorKind::Validation, "change of basis matrix is singular");
  if (labels.empty()) {
    for (int i = 0; i < d; ++i) labels.push_back("f" + std::to_string(i));
  }
  AlgebraSpec spec;
  spec.field = a->field();
  spec.labels = std::move(labels);
  spec.table.assign(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) spec.table[i][j] = to_sparse(*inv * a->mul(basis.col(i), basis.col(j)));
  }
  spec.unit = *inv * a->unit();
  for (const auto& h : a->idempotent_hints()) spec.idempotent_hints.push_back(*inv * h);
  return build_algebra(std::move(spec));
}

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) fail(ErrorKind::FieldMismatch, "product of algebras over different fields");
  const int da = a->dim();
  const int db = b->dim();
  AlgebraSpec spec;
  spec.field = a->field();
  for (int i = 0; i < da; ++i) spec.labels.push_back("(" + a->label(i) + ",0)");
  for (int i = 0; i < db; ++i) spec.labels.push_back("(0," + b->label(i) + ")");
  spec.table.assign(da + db, std::vector<SparseVec>(da + db));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) spec.table[i][j] = a->product_terms(i, j);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) {
      SparseVec s = b->product_terms(i, j);
      for (auto& t : s) t.index += da;
      spec.table[da + i][da + j] = s;
    }
  spec.unit = a->unit();
  spec.unit.insert(spec.unit.end(), b->unit().begin(), b->unit().end());
  for (const auto& h : a->idempotent_hints()) {
    Vec v = h;
    v.resize(da + db, Scalar::zero(spec.field));
    spec.idempotent_hints.push_back(v);
  }
  for (const auto& h : b->idempotent_hints()) {
    Vec v = zero_vec(spec.field, da);
    v.insert(v.end(), h.begin(), h.end());
    spec.idempotent_hints.push_back(v);
  }
  return build_algebra(std::move(spec));
}

Corner corner_algebra(const AlgebraPtr& a, const Vec& e) {
  if (!is_idempotent(*a, e)) fail(ErrorKind::NotIdempotent, "corner requires an idempotent, got " + a->format(e));
  const int d = a->dim();
  Subspace s(d, a->field());
  for (int k = 0; k < d; ++k) s.insert(a->mul(a->mul(e, a->basis_vec(k)), e));
  const int m = s.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    const Vec& row = s.basis()[i];
    int nonzero = 0;
    for (const auto& c : row) nonzero += c.is_zero() ? 0 : 1;
    labels.push_back(nonzero == 1 ? a->label(s.pivots()[i]) : "c" + std::to_string(i));
  }
  AlgebraSpec spec;
  spec.field = a->field();
  spec.labels = labels;
  spec.table.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) spec.table[i][j] = to_sparse(s.coords(a->mul(s.basis()[i], s.basis()[j])));
  spec.unit = s.coords(e);
  Corner c;
  c.algebra = build_algebra(std::move(spec));
  c.inclusion = Matrix::from_columns(s.basis(), d, a->field());
  return c;
}

AlgebraPtr restrict_to_indices(const AlgebraPtr& a, const std::vector<int>& indices) {
  const int m = static_cast<int>(indices.size());
  std::vector<int> pos(a->dim(), -1);
  for (int i = 0; i < m; ++i) pos[indices[i]] = i;
  AlgebraSpec spec;
  spec.field = a->field();
  for (int i : indices) spec.labels.push_back(a->label(i));
  spec.table.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (const auto& t : a->product_terms(indices[i], indices[j])) {
        if (pos[t.index] < 0) fail(ErrorKind::Validation, "index set is not closed under multiplication");
        spec.table[i][j].push_back({pos[t.index], t.coeff});
      }
    }
  spec.unit = zero_vec(a->field(), m);
  for (int k = 0; k < a->dim(); ++k) {
    if (a->unit()[k].is_zero()) continue;
    if (pos[k] < 0) fail(ErrorKind::Validation, "index set does not contain the unit");
    spec.unit[pos[k]] = a->unit()[k];
  }
  return build_algebra(std::move(spec));
}

Vec Quotient::lift(const Vec& q) const {
  Vec v = zero_vec(ideal.field(), ideal.ambient());
  for (std::size_t k = 0; k < reps.size(); ++k) v[reps[k]] = q[k];
  return v;
}

Quotient quotient_algebra(const AlgebraPtr& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(*a, ideal)) fail(ErrorKind::Validation, "quotient by a subspace that is not an ideal");
  Quotient q;
  q.ideal = ideal;
  q.reps = ideal.free_columns();
  const int m = static_cast<int>(q.reps.size());
  if (m == 0) fail(ErrorKind::Validation, "quotient by the whole algebra");
  AlgebraSpec spec;
  spec.field = a->field();
  for (int r : q.reps) spec.labels.push_back(a->label(r));
  spec.table.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) spec.table[i][j] = to_sparse(q.project(a->basis_product(q.reps[i], q.reps[j])));
  spec.unit = q.project(a->unit());
  q.algebra = build_algebra(std::move(spec));
  return q;
}

bool is_idempotent(const Algebra& a, const Vec& e) { return a.mul(e, e) == e; }

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (const auto& v : s.basis()) {
    for (int k = 0; k < a.dim(); ++k) {
      if (!s.contains(a.left_mult(k) * v)) return false;
      if (!s.contains(a.right_mult(k) * v)) return false;
    }
  }
  return true;
}

Subspace subspace_product(const Algebra& a, const Subspace& x, const Subspace& y) {
  Subspace out(a.dim(), a.field());
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) {
      if (out.dim() == a.dim()) return out;
      out.insert(a.mul(u, v));
    }
  return out;
}

Subspace center(const Algebra& a) {
  const int d = a.dim();
  const auto& gens = a.generators();
  Matrix m(static_cast<int>(std::max<std::size_t>(gens.size(), 1)) * d, d, a.field());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix diff = a.right_mult(gens[g]) - a.left_mult(gens[g]);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m(static_cast<int>(g) * d + r, c) = diff(r, c);
  }
  return Subspace::row_space(nullspace(m));
}

namespace {

using IntMatrix = std::vector<std::vector<std::uint64_t>>;

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y, std::uint64_t mod) {
  const std::size_t n = x.size();
  IntMatrix out(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = (out[i][j] + x[i][k] * y[k][j]) % mod;
    }
  return out;
}

// (Tr(M^{p^i}) mod p^{i+1}) / p^i for an integer lift M of the matrix.
std::uint64_t lifted_trace(const Matrix& m, std::uint64_t p, int i) {
  std::uint64_t pi = 1;
  for (int k = 0; k < i; ++k) pi *= p;
  const std::uint64_t mod = pi * p;
  const int n = m.rows();
  IntMatrix x(n, std::vector<std::uint64_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) x[r][c] = m(r, c).residue_value();
  for (int k = 0; k < i; ++k) {
    IntMatrix y = x;
    for (std::uint64_t e = 1; e < p; ++e) y = int_mul(y, x, mod);
    x = std::move(y);
  }
  std::uint64_t t = 0;
  for (int r = 0; r < n; ++r) t = (t + x[r][r]) % mod;
  check_internal(t % pi == 0, "lifted trace is not divisible by p^i");
  return (t / pi) % p;
}

// Radical over F_p with p <= dim: the chain I_i = {x in I_{i-1} : g_i(x b) = 0
// for all b}, with g_i the lifted p^i-power trace, reaches J at i = floor(log_p dim).
Subspace radical_small_char(const Algebra& a) {
  const int d = a.dim();
  const Field f = a.field();
  const std::uint64_t p = f.p;
  int top = 0;
  for (std::uint64_t q = p; q <= static_cast<std::uint64_t>(d); q *= p) ++top;
  std::vector<Vec> current;
  for (int k = 0; k < d; ++k) current.push_back(a.basis_vec(k));
  for (int i = 0; i <= top && !current.empty(); ++i) {
    Matrix g(d, static_cast<int>(current.size()), f);
    for (std::size_t k = 0; k < current.size(); ++k)
      for (int m = 0; m < d; ++m) {
        Vec z = a.mul(current[k], a.basis_vec(m));
        g(m, static_cast<int>(k)) = Scalar::residue(lifted_trace(a.left_mult(z), p, i), p);
      }
    Matrix ns = nullspace(g);
    std::vector<Vec> next;
    for (int r = 0; r < ns.rows(); ++r) {
      Vec v = a.zero();
      for (std::size_t k = 0; k < current.size(); ++k) axpy(v, ns(r, static_cast<int>(k)), current[k]);
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }
  return Subspace::span(current, d, f);
}

}  // namespace

Subspace jacobson_radical(const Algebra& a) {
  const int d = a.dim();
  const Field f = a.field();
  Subspace rad;
  if (!f.is_rational() && f.p <= static_cast<std::uint64_t>(d)) {
    rad = radical_small_char(a);
  } else {
    Vec traces(d);
    for (int k = 0; k < d; ++k) {
      Scalar t = Scalar::zero(f);
      for (int j = 0; j < d; ++j) t += a.left_mult(k)(j, j);
      traces[k] = t;
    }
    Matrix form(d, d, f);  // form(j, i) = tr(L_{b_i b_j}); left kernel of the trace form
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Scalar s = Scalar::zero(f);
        for (const auto& t : a.product_terms(i, j)) s += t.coeff * traces[t.index];
        form(j, i) = s;
      }
    rad = Subspace::row_space(nullspace(form));
  }
  check_internal(is_two_sided_ideal(a, rad), "radical candidate is not an ideal");
  Subspace power = rad;
  for (int k = 0; k <= d && power.dim() > 0; ++k) power = subspace_product(a, power, rad);
  check_internal(power.dim() == 0, "radical candidate is not nilpotent");
  return rad;
}

bool is_automorphism(const Algebra& a, const Matrix& m) {
  const int d = a.dim();
  if (m.rows() != d || m.cols() != d) return false;
  if (m * a.unit() != a.unit()) return false;
  std::vector<Vec> images;
  for (int i = 0; i < d; ++i) images.push_back(m.col(i));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (m * a.basis_product(i, j) != a.mul(images[i], images[j])) return false;
    }
  return rank(m) == d;
}

void require_automorphism(const Algebra& a, const Matrix& m, const std::string& what) {
  if (!is_automorphism(a, m)) fail(ErrorKind::NotAutomorphism, what + " is not an algebra automorphism");
}

Matrix matrix_power(const Matrix& m, const Matrix& m_inv, int e) {
  Matrix base = e >= 0 ? m : m_inv;
  int k = e >= 0 ? e : -e;
  Matrix r = Matrix::identity(m.rows(), m.field());
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

}  // namespace fdalg
