#include "fdalg/span_search.hpp"

#include "fdalg/errors.hpp"

namespace fdalg {

const char* search_kind_name(SpanSearchResult::Kind k) {
  switch (k) {
    case SpanSearchResult::Kind::Witness: return "witness";
    case SpanSearchResult::Kind::None: return "none";
    case SpanSearchResult::Kind::ProbablyNone: return "probably_none";
  }
  return "?";
}

CoefficientStream::CoefficientStream(std::uint64_t seed, int bound, Field f)
    : state_(seed), bound_(bound), field_(f) {}

Vec CoefficientStream::next(int k) {
  // splitmix64, so streams are identical across standard libraries
  Vec out;
  for (int i = 0; i < k; ++i) {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    if (field_.is_rational()) {
      auto width = static_cast<std::uint64_t>(2 * bound_ + 1);
      out.push_back(Scalar(static_cast<long>(z % width) - bound_));
    } else {
      out.push_back(Scalar::residue(z % field_.p, field_.p));
    }
  }
  return out;
}

namespace {

Matrix combine(const std::vector<Matrix>& span, const Vec& c) {
  Matrix m(span[0].rows(), span[0].cols(), span[0].field());
  for (std::size_t i = 0; i < span.size(); ++i) m.add_scaled(c[i], span[i]);
  return m;
}

bool witness(const std::vector<Matrix>& span, const Vec& c, SpanSearchResult& out) {
  Matrix m = combine(span, c);
  Scalar d = determinant(m);
  if (d.is_zero()) return false;
  out.kind = SpanSearchResult::Kind::Witness;
  out.coeffs = c;
  out.combination = std::move(m);
  out.det = d;
  return true;
}

Subspace preimage(const Matrix& a, const Subspace& w) {
  const int n = a.cols();
  const int k = w.dim();
  Matrix sys(a.rows(), n + k, a.field());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c) sys(r, c) = a(r, c);
    for (int j = 0; j < k; ++j) sys(r, n + j) = -w.basis()[j][r];
  }
  Matrix ns = nullspace(sys);
  Subspace out(n, a.field());
  for (int i = 0; i < ns.rows(); ++i) {
    Vec row = ns.row(i);
    out.insert(Vec(row.begin(), row.begin() + n));
  }
  return out;
}

Subspace image_of(const std::vector<Matrix>& span, const Subspace& u) {
  Subspace out(span[0].rows(), span[0].field());
  for (const auto& m : span)
    for (const auto& v : u.basis()) out.insert(m * v);
  return out;
}

// Second Wong sequence started from a combination a0 of maximal found rank.
// Returns the dimensions of a shrunk subspace U (dim S(U) < dim U) if found.
bool shrunk_subspace(const std::vector<Matrix>& span, const Matrix& a0, std::string& cert) {
  const int n = a0.rows();
  Subspace im = Subspace::column_space(a0);
  Subspace w(n, a0.field());
  for (int it = 0; it <= n + 1; ++it) {
    Subspace u = preimage(a0, w);
    Subspace next = image_of(span, u);
    if (!im.contains(next)) return false;
    if (next == w) {
      if (next.dim() < u.dim()) {
        cert = "shrunk subspace: dim U = " + std::to_string(u.dim()) + ", dim span(S U) = " + std::to_string(next.dim());
        return true;
      }
      return false;
    }
    w = std::move(next);
  }
  return false;
}

bool common_kernel(const std::vector<Matrix>& span, bool transposed) {
  const int n = span[0].rows();
  Matrix stacked(static_cast<int>(span.size()) * n, n, span[0].field());
  for (std::size_t i = 0; i < span.size(); ++i) {
    Matrix m = transposed ? span[i].transpose() : span[i];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked(static_cast<int>(i) * n + r, c) = m(r, c);
  }
  return rank(stacked) < n;
}

}  // namespace

SpanSearchResult find_invertible_in_span(const std::vector<Matrix>& span, const SearchOptions& opts) {
  if (span.empty()) fail(ErrorKind::EmptySpan, "invertibility search over an empty span");
  const int n = span[0].rows();
  if (n != span[0].cols()) fail(ErrorKind::Validation, "invertibility search needs square matrices");
  const Field f = span[0].field();
  const int k = static_cast<int>(span.size());
  SpanSearchResult out;
  if (n == 0) {
    out.kind = SpanSearchResult::Kind::Witness;
    out.coeffs = zero_vec(f, k);
    out.coeffs[0] = Scalar::one(f);
    out.combination = span[0];
    out.det = Scalar::one(f);
    return out;
  }

  for (int i = 0; i < k; ++i) {
    ++out.trials;
    if (witness(span, unit_vec(f, k, i), out)) return out;
  }
  if (common_kernel(span, false) || common_kernel(span, true)) {
    out.kind = SpanSearchResult::Kind::None;
    out.certificate = "common kernel";
    return out;
  }

  bool exhaustive = false;
  if (!f.is_rational()) {
    mpz_class total = 1;
    for (int i = 0; i < k && total <= opts.exhaustive_limit; ++i) total *= static_cast<unsigned long>(f.p);
    exhaustive = total <= opts.exhaustive_limit;
  }

  if (!exhaustive) {
    CoefficientStream stream(opts.seed, opts.coeff_bound, f);
    Matrix best;
    int best_rank = -1;
    for (int t = 0; t < opts.mc_trials; ++t) {
      ++out.trials;
      Vec c = stream.next(k);
      Matrix m = combine(span, c);
      Matrix reduced = m;
      int r = static_cast<int>(rref_in_place(reduced).size());
      if (r == n) {
        out.kind = SpanSearchResult::Kind::Witness;
        out.coeffs = c;
        out.det = determinant(m);
        out.combination = std::move(m);
        return out;
      }
      if (r > best_rank) {
        best_rank = r;
        best = std::move(m);
      }
    }
    std::string cert;
    if (shrunk_subspace(span, best, cert)) {
      out.kind = SpanSearchResult::Kind::None;
      out.certificate = cert;
      return out;
    }
    std::vector<Matrix> transposed;
    for (const auto& m : span) transposed.push_back(m.transpose());
    if (shrunk_subspace(transposed, best.transpose(), cert)) {
      out.kind = SpanSearchResult::Kind::None;
      out.certificate = "transposed " + cert;
      return out;
    }
  }

  if (exhaustive) {
    Vec c = zero_vec(f, k);
    for (;;) {
      int pos = 0;
      while (pos < k) {
        std::uint64_t v = c[pos].residue_value() + 1;
        if (v < f.p) {
          c[pos] = Scalar::residue(v, f.p);
          break;
        }
        c[pos] = Scalar::zero(f);
        ++pos;
      }
      if (pos == k) break;
      ++out.trials;
      if (witness(span, c, out)) return out;
    }
    out.kind = SpanSearchResult::Kind::None;
    out.certificate = "exhaustive enumeration of the span";
    return out;
  }

  const bool grid_ok = k <= opts.fallback_max_span && n <= opts.fallback_max_size &&
                       (f.is_rational() || f.p > static_cast<std::uint64_t>(n));
  if (grid_ok) {
    // det(sum c_i S_i) has degree <= n in each variable, so vanishing on
    // {0..n}^k proves it is identically zero.
    std::vector<int> idx(k, 0);
    for (;;) {
      Vec c(k);
      for (int i = 0; i < k; ++i) c[i] = Scalar::from_int(f, idx[i]);
      ++out.trials;
      if (witness(span, c, out)) return out;
      int pos = 0;
      while (pos < k && ++idx[pos] > n) idx[pos++] = 0;
      if (pos == k) break;
    }
    out.kind = SpanSearchResult::Kind::None;
    out.certificate = "determinant vanishes on a (" + std::to_string(n + 1) + ")^" + std::to_string(k) + " grid";
    return out;
  }

  out.kind = SpanSearchResult::Kind::ProbablyNone;
  return out;
}

}  // namespace fdalg
