#include "fdalg/frobenius.hpp"

#include "fdalg/errors.hpp"

namespace fdalg {

Matrix gram_matrix(const Algebra& a, const Vec& lambda) {
  const int d = a.dim();
  Matrix g(d, d, a.field());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Scalar s = Scalar::zero(a.field());
      for (const auto& t : a.product_terms(i, j)) s += t.coeff * lambda[t.index];
      g(i, j) = s;
    }
  return g;
}

FrobeniusData frobenius_data(const AlgebraPtr& a, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != a->dim()) fail(ErrorKind::Validation, "functional has the wrong length");
  FrobeniusData fd;
  fd.algebra = a;
  fd.form = lambda;
  fd.gram = gram_matrix(*a, lambda);
  auto inv = inverse(fd.gram);
  if (!inv) fail(ErrorKind::Degenerate, "the pairing (r, s) -> lambda(rs) is degenerate");
  fd.gram_inv = std::move(*inv);
  fd.nu = fd.gram_inv * fd.gram.transpose();
  check_internal(is_automorphism(*a, fd.nu), "Nakayama map is not an automorphism");
  auto nu_inv = inverse(fd.nu);
  check_internal(nu_inv.has_value(), "Nakayama map is not invertible");
  fd.nu_inv = std::move(*nu_inv);
  for (int i = 0; i < a->dim(); ++i) check_internal(dot(lambda, fd.nu.col(i)) == lambda[i], "lambda o nu != lambda");
  return fd;
}

Matrix nakayama_automorphism(const AlgebraPtr& a, const Vec& lambda) { return frobenius_data(a, lambda).nu; }

Verdict is_quasi_frobenius(const AlgebraPtr& a, const SearchOptions& opts, std::string* reason) {
  InvertibilityResult r = is_invertible_bimodule(dual_bimodule(a), opts);
  if (reason) *reason = r.reason;
  return r.verdict;
}

std::string cycle_notation(const std::vector<int>& pi) {
  std::vector<bool> seen(pi.size(), false);
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i] || pi[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(pi[j]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

namespace {

NakayamaPermutation permutation_of(const AlgebraPtr& a, const SemisimpleData& ss) {
  Module dual = dual_bimodule(a);
  NakayamaPermutation out;
  out.multiplicities = ss.multiplicities;
  const int q = ss.block_count();
  std::vector<bool> hit(q, false);
  for (int j = 0; j < q; ++j) {
    Module t = tensor_over(dual, ss.simples[j]).result;
    int found = -1;
    for (int i = 0; i < q && found < 0; ++i)
      if (ss.simples[i].dim == t.dim && hom_space(ss.simples[i], t, HomKind::Left).dim() > 0) found = i;
    check_internal(found >= 0, "R* (x) S is not simple");
    check_internal(!hit[found], "Nakayama assignment is not a permutation");
    hit[found] = true;
    out.pi.push_back(found);
  }
  return out;
}

bool soft_failure(const Error& e) {
  return e.kind() == ErrorKind::UnsupportedCharacteristic || e.kind() == ErrorKind::NotSplit ||
         e.kind() == ErrorKind::IdempotentsRequired;
}

}  // namespace

NakayamaPermutation nakayama_permutation(const AlgebraPtr& a, const SearchOptions& opts, const SemisimpleData* ss) {
  std::string why;
  Verdict qf = is_quasi_frobenius(a, opts, &why);
  if (qf != Verdict::Yes)
    fail(ErrorKind::NotQuasiFrobenius, "Nakayama permutation needs a quasi-Frobenius algebra (" +
                                           std::string(verdict_name(qf)) + (why.empty() ? "" : ": " + why) + ")");
  if (ss) return permutation_of(a, *ss);
  SemisimpleData own = semisimple_data(a);
  return permutation_of(a, own);
}

SpanSearchResult search_frobenius_form(const Algebra& a, const SearchOptions& opts) {
  std::vector<Matrix> span;
  for (int k = 0; k < a.dim(); ++k) span.push_back(gram_matrix(a, a.basis_vec(k)));
  return find_invertible_in_span(span, opts);
}

FrobeniusResult frobenius_form(const AlgebraPtr& a, const SearchOptions& opts) {
  FrobeniusResult out;
  std::string why;
  Verdict qf = is_quasi_frobenius(a, opts, &why);
  if (qf == Verdict::No) {
    out.verdict = Verdict::No;
    out.reason = "not quasi-Frobenius: " + why;
    out.by_criterion = true;
    return out;
  }
  std::optional<SemisimpleData> ss;
  std::string ss_note;
  try {
    ss = semisimple_data(a);
  } catch (const Error& e) {
    if (!soft_failure(e)) throw;
    ss_note = e.what();
  }
  if (qf == Verdict::Yes && ss) {
    out.permutation = permutation_of(a, *ss);
    out.by_criterion = true;
    const auto& pi = out.permutation->pi;
    const auto& m = out.permutation->multiplicities;
    for (std::size_t i = 0; i < pi.size(); ++i)
      if (m[i] != m[pi[i]]) {
        out.verdict = Verdict::No;
        out.reason = "multiplicity mismatch: m_" + std::to_string(i + 1) + " = " + std::to_string(m[i]) + " but m_" +
                     std::to_string(pi[i] + 1) + " = " + std::to_string(m[pi[i]]) + " under pi = " + cycle_notation(pi);
        return out;
      }
  }
  SpanSearchResult s = search_frobenius_form(*a, opts);
  if (s.found()) {
    out.verdict = Verdict::Yes;
    out.data = frobenius_data(a, s.coeffs);
    return out;
  }
  if (out.by_criterion) {
    check_internal(s.kind != SpanSearchResult::Kind::None, "criterion says Frobenius but every functional is degenerate");
    out.verdict = Verdict::Undecided;
    out.reason = "criterion holds but no nondegenerate form found in " + std::to_string(s.trials) + " trials";
    return out;
  }
  std::string prefix = ss_note.empty() ? "" : "(criterion unavailable: " + ss_note + ") ";
  if (s.kind == SpanSearchResult::Kind::None) {
    out.verdict = Verdict::No;
    out.reason = prefix + "every functional is degenerate: " + s.certificate;
  } else {
    out.verdict = Verdict::Undecided;
    out.reason = prefix + "no nondegenerate form found in " + std::to_string(s.trials) + " trials";
  }
  return out;
}

namespace {

ElementResult element_search(const Algebra& a, const std::vector<Vec>& basis, bool as_forms, const SearchOptions& opts,
                             const std::string& what) {
  ElementResult r;
  if (basis.empty()) {
    r.verdict = Verdict::No;
    r.reason = what + " is zero";
    return r;
  }
  std::vector<Matrix> span;
  for (const auto& v : basis) span.push_back(as_forms ? gram_matrix(a, v) : a.left_mult(v));
  SpanSearchResult s = find_invertible_in_span(span, opts);
  switch (s.kind) {
    case SpanSearchResult::Kind::Witness: {
      r.verdict = Verdict::Yes;
      r.element = a.zero();
      for (std::size_t i = 0; i < basis.size(); ++i) axpy(r.element, s.coeffs[i], basis[i]);
      break;
    }
    case SpanSearchResult::Kind::None:
      r.verdict = Verdict::No;
      r.reason = "no invertible element in the " + what + ": " + s.certificate;
      break;
    case SpanSearchResult::Kind::ProbablyNone:
      r.verdict = Verdict::Undecided;
      r.reason = "no invertible element in the " + what + " after " + std::to_string(s.trials) + " trials";
      break;
  }
  return r;
}

}  // namespace

ElementResult is_symmetric(const AlgebraPtr& ap, const SearchOptions& opts) {
  const Algebra& a = *ap;
  const int d = a.dim();
  Subspace comm(d, a.field());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) comm.insert(sub(a.basis_product(i, j), a.basis_product(j, i)));
  Subspace sym = comm.annihilator();
  ElementResult r = element_search(a, sym.basis(), true, opts, "space of symmetric functionals");
  if (r.verdict == Verdict::Yes) {
    Matrix g = gram_matrix(a, r.element);
    check_internal(g == g.transpose() && inverse(g).has_value(), "symmetric form witness failed verification");
  }
  return r;
}

ElementResult is_inner(const AlgebraPtr& ap, const Matrix& alpha, const SearchOptions& opts) {
  const Algebra& a = *ap;
  require_automorphism(a, alpha, "map");
  const int d = a.dim();
  const auto& gens = a.generators();
  Matrix system(static_cast<int>(std::max<std::size_t>(gens.size(), 1)) * d, d, a.field());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix m = a.right_mult(alpha * gens[g]) - a.left_mult(gens[g]);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) system(static_cast<int>(g) * d + r, c) = m(r, c);
  }
  Matrix ns = nullspace(system);
  std::vector<Vec> basis;
  for (int i = 0; i < ns.rows(); ++i) basis.push_back(ns.row(i));
  ElementResult r = element_search(a, basis, false, opts, "twisted centralizer");
  if (r.verdict == Verdict::Yes) {
    check_internal(a.is_invertible(r.element), "inner witness is not invertible");
    for (int i = 0; i < d; ++i)
      check_internal(a.mul(r.element, alpha.col(i)) == a.mul(a.basis_vec(i), r.element), "inner witness fails");
  }
  return r;
}

Vec theta_word(const FrobeniusData& fd, const std::vector<int>& word) {
  const Algebra& a = *fd.algebra;
  if (word.empty()) return a.unit();
  Vec acc = fd.dual_preimage(word.back());
  for (int t = static_cast<int>(word.size()) - 2; t >= 0; --t) acc = a.mul(fd.dual_preimage(word[t]), fd.nu * acc);
  return acc;
}

LinearMap twisted_presentation(const FrobeniusData& fd, TensorPowers& powers, int p) {
  if (p < 1) fail(ErrorKind::BadParams, "twisted presentation needs p >= 1");
  const AlgebraPtr& a = fd.algebra;
  check_internal(powers.base().dim == a->dim(), "tensor powers of a different module");
  const Module& tp = powers.power(p);
  const auto& words = powers.words(p);
  Matrix theta(a->dim(), tp.dim, a->field());
  for (int s = 0; s < tp.dim; ++s) theta.set_col(s, theta_word(fd, words[s]));
  Module target = twisted_bimodule(a, Matrix::identity(a->dim(), a->field()), fd.nu_power(p));
  check_internal(tp.dim == a->dim() && rank(theta) == a->dim(), "theta is not bijective");
  check_internal(is_hom(tp, target, theta, HomKind::Bi), "theta is not a bimodule map");
  return LinearMap{"(R*)^" + std::to_string(p), "1_R_nu^" + std::to_string(p), std::move(theta)};
}

Subspace associative_c_space(const FrobeniusData& fd, int n) {
  if (n < 1) fail(ErrorKind::BadParams, "n must be positive");
  const Algebra& a = *fd.algebra;
  const int d = a.dim();
  const Field f = a.field();
  Matrix nun = fd.nu_power(n);
  const auto& gens = a.generators();
  Matrix system(static_cast<int>(gens.size() + 1) * d, d, f);
  Matrix fix = fd.nu - Matrix::identity(d, f);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) system(r, c) = fix(r, c);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix m = a.left_mult(nun * gens[g]) - a.right_mult(gens[g]);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) system(static_cast<int>(g + 1) * d + r, c) = m(r, c);
  }
  Matrix ns = nullspace(system);
  std::vector<Vec> rows;
  for (int i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
  return Subspace::span(rows, d, f);
}

Matrix phi_from_c(const FrobeniusData& fd, TensorPowers& powers, int n, const Vec& c) {
  const Algebra& a = *fd.algebra;
  const auto& words = powers.words(n);
  Matrix phi(a.dim(), static_cast<int>(words.size()), a.field());
  for (std::size_t s = 0; s < words.size(); ++s) phi.set_col(static_cast<int>(s), a.mul(theta_word(fd, words[s]), c));
  return phi;
}

}  // namespace fdalg
