#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fdalg {

/// Base field descriptor: the rationals (p == 0) or the prime field F_p.
struct Field {
  std::uint64_t p = 0;

  static Field rationals() { return Field{0}; }
  /// Throws std::invalid_argument when p is not a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator. Values
/// whose numerator and denominator fit in int64 use an inline fast path;
/// anything larger is promoted to a shared immutable mpq_class. Prime-field
/// elements store their residue in [0, p).
///
/// A default-constructed Scalar is the rational zero. Mixing a rational with
/// a residue reduces the rational modulo p, so zero/one literals work in any
/// field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT: implicit integer literals are convenient
  Scalar(int v) : Scalar(static_cast<long>(v)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar residue(std::uint64_t v, std::uint64_t p);
  /// Parses "a", "-a", "a/b"; for prime fields the value is reduced mod p.
  static Scalar parse(Field f, const std::string& text);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return mod_ == 0; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t residue_value() const { return static_cast<std::uint64_t>(num_); }
  Field field() const { return Field{mod_}; }

  mpq_class to_mpq() const;
  /// Same value in field f (rationals reduced mod p).
  Scalar in_field(Field f) const;
  std::string str() const;

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  static Scalar make_small(std::int64_t n, std::int64_t d);
  static Scalar normalize128(__int128 n, __int128 d);
  static Scalar from_big(mpq_class q);
  bool is_big() const { return static_cast<bool>(big_); }

  std::uint64_t mod_ = 0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace fdalg
