#include "fdalg/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdalg {

Poly::Poly(Field f, Vec coeffs) : field_(f), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.in_field(f);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(Field f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::constant(Field f, const Scalar& c) { return Poly(f, {c}); }

Poly Poly::linear(Field f, const Scalar& a) { return Poly(f, {-a.in_field(f), Scalar::one(f)}); }

Scalar Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(field_);
  return c_[i];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  Vec c = c_;
  for (auto& e : c) e *= inv;
  return Poly(field_, std::move(c));
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (int i = degree(); i >= 0; --i) acc = acc * at + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  Vec d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * Scalar::from_int(field_, i));
  return Poly(field_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vec c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  Vec c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Field f = a.field_;
  if (a.degree() < b.degree()) return {Poly(f), a};
  Vec r = a.c_;
  Vec q(a.c_.size() - b.c_.size() + 1, Scalar::zero(f));
  Scalar inv = b.lead().inverse();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (r[i].is_zero()) continue;
    Scalar t = r[i] * inv;
    int shift = i - b.degree();
    q[shift] = t;
    for (int j = 0; j <= b.degree(); ++j) r[shift + j] -= t * b.c_[j];
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = Poly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b) {
  Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, Scalar::one(f)), s1(f);
  Poly t0(f), t1 = Poly::constant(f, Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Poly inv = Poly::constant(f, r0.lead().inverse());
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 0) return f.monic();
  Poly d = f.derivative();
  if (d.is_zero()) {
    // Only possible in characteristic p for p-th powers; roots are unaffected
    // by keeping f itself, callers only need the root set.
    return f.monic();
  }
  return Poly::divmod(f, gcd(f, d)).first.monic();
}

Poly powmod(Poly base, mpz_class e, const Poly& m) {
  Field f = m.field();
  Poly result = Poly::constant(f, Scalar::one(f));
  base = Poly::divmod(base, m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = Poly::divmod(result * base, m).second;
    e >>= 1;
    if (e > 0) base = Poly::divmod(base * base, m).second;
  }
  return result;
}

namespace {

void split_linear(const Poly& g, std::vector<Scalar>& out) {
  Field f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.monic().coeff(0));
    return;
  }
  mpz_class half = (mpz_class(static_cast<unsigned long>(f.p)) - 1) / 2;
  for (long a = 0;; ++a) {
    Poly shifted(f, {Scalar::from_int(f, a), Scalar::one(f)});
    Poly h = powmod(shifted, half, g) - Poly::constant(f, Scalar::one(f));
    Poly d = gcd(h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, out);
      split_linear(Poly::divmod(g, d).first, out);
      return;
    }
  }
}

std::vector<Scalar> roots_mod_p(const Poly& f) {
  Field fld = f.field();
  std::vector<Scalar> out;
  if (f.degree() <= 0) return out;
  if (fld.p <= 50000) {
    for (std::uint64_t a = 0; a < fld.p; ++a) {
      Scalar s = Scalar::residue(a, fld.p);
      if (f.eval(s).is_zero()) out.push_back(s);
    }
    return out;
  }
  Poly m = f.monic();
  Poly xp = powmod(Poly::x(fld), mpz_class(static_cast<unsigned long>(fld.p)), m);
  Poly g = gcd(xp - Poly::x(fld), m);
  split_linear(g, out);
  std::sort(out.begin(), out.end(),
            [](const Scalar& a, const Scalar& b) { return a.residue_value() < b.residue_value(); });
  return out;
}

mpz_class eval_mpz(const std::vector<mpz_class>& g, const mpz_class& y) {
  mpz_class acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * y + *it;
  return acc;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  std::vector<Scalar> out;
  Poly sf = squarefree_part(f);
  if (sf.degree() <= 0) return out;
  if (sf.coeff(0).is_zero()) {
    out.push_back(Scalar());
    sf = Poly::divmod(sf, Poly::x(sf.field())).first;
  }
  const int n = sf.degree();
  if (n >= 1) {
    // Integer coefficients a_i with content removed.
    mpz_class lcm = 1;
    for (const auto& c : sf.coeffs()) {
      mpz_class den = c.to_mpq().get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> a;
    for (const auto& c : sf.coeffs()) {
      mpq_class v = c.to_mpq() * lcm;
      a.push_back(v.get_num());
    }
    const mpz_class an = a[n];
    // g(y) = an^(n-1) f(y / an) is monic with integer coefficients; its
    // integer roots y give the rational roots y / an of f.
    std::vector<mpz_class> g(n + 1);
    mpz_class pw = 1;
    for (int i = n - 1; i >= 0; --i) {
      g[i] = a[i] * pw;
      pw *= an;
    }
    g[n] = 1;
    mpz_class bound = 0;
    for (const auto& c : g) bound = std::max(bound, mpz_class(abs(c)));
    bound = 2 * (bound + 1);

    std::uint64_t prime = (1ULL << 61) - 1;
    for (;; prime -= 2) {
      while (!is_prime_u64(prime)) prime -= 2;
      Field fp = Field{prime};
      Vec red;
      for (const auto& c : g) red.push_back(Scalar::from_mpq(mpq_class(c)).in_field(fp));
      Poly gp(fp, red);
      if (gcd(gp, gp.derivative()).degree() != 0) continue;
      const mpz_class pz(static_cast<unsigned long>(prime));
      std::vector<mpz_class> dg;
      for (int i = 1; i <= n; ++i) dg.push_back(g[i] * i);
      for (const Scalar& r : roots_mod_p(gp)) {
        mpz_class mod = pz;
        mpz_class y(static_cast<unsigned long>(r.residue_value()));
        while (mod <= bound) {
          mpz_class mod2 = mod * mod;
          mpz_class num = eval_mpz(g, y) % mod2;
          mpz_class den = eval_mpz(dg, y) % mod2;
          if (den < 0) den += mod2;
          mpz_class inv;
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod2.get_mpz_t()) == 0) break;
          y = (y - num * inv) % mod2;
          if (y < 0) y += mod2;
          mod = mod2;
        }
        if (y > mod / 2) y -= mod;
        if (eval_mpz(g, y) != 0) continue;
        mpq_class root(y, an);
        root.canonicalize();
        Scalar s = Scalar::from_mpq(root);
        if (f.eval(s).is_zero()) out.push_back(s);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.to_mpq() < b.to_mpq(); });
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (f.field().is_rational()) return rational_roots(f);
  return roots_mod_p(squarefree_part(f));
}

}  // namespace fdalg
