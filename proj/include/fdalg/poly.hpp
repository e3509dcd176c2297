#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "fdalg/linalg.hpp"

namespace fdalg {

/// Dense univariate polynomial over an exact field, coefficients low to high.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, Vec coeffs);

  static Poly x(Field f);
  static Poly constant(Field f, const Scalar& c);
  /// x - a
  static Poly linear(Field f, const Scalar& a);

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Vec& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar lead() const { return c_.back(); }
  Poly monic() const;
  Scalar eval(const Scalar& at) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

 private:
  void trim();
  Field field_;
  Vec c_;
};

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
std::tuple<Poly, Poly, Poly> extended_gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& f);
/// (base^e) mod m.
Poly powmod(Poly base, mpz_class e, const Poly& m);

/// Distinct roots lying in the base field, in increasing order (by residue
/// over F_p). Over Q this is exact rational-root extraction; over F_p it
/// splits gcd(f, x^p - x) with a deterministic equal-degree sweep.
std::vector<Scalar> roots_in_field(const Poly& f);

}  // namespace fdalg
