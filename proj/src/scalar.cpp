#include "fdalg/scalar.hpp"

#include <limits>
#include <stdexcept>

namespace fdalg {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  if (a % m == 0) throw std::domain_error("division by zero in prime field");
  i128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    i128 q = r / nr;
    i128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

void set_mpz_from_i128(mpz_t out, i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  auto hi = static_cast<std::uint64_t>(u >> 64);
  auto lo = static_cast<std::uint64_t>(u);
  mpz_set_ui(out, static_cast<unsigned long>(hi));
  mpz_mul_2exp(out, out, 64);
  mpz_add_ui(out, out, static_cast<unsigned long>(lo));
  if (neg) mpz_neg(out, out);
}

// Reduce a (possibly big) rational into F_p.
std::uint64_t reduce_mpq(const mpq_class& q, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = q.get_num() % pz;
  if (n < 0) n += pz;
  mpz_class d = q.get_den() % pz;
  auto nv = static_cast<std::uint64_t>(n.get_ui());
  auto dv = static_cast<std::uint64_t>(d.get_ui());
  return mulmod(nv, invmod(dv, p), p);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime_u64(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field{p};
}

std::string Field::name() const { return p == 0 ? std::string("Q") : "F_" + std::to_string(p); }

Scalar::Scalar(long v) : num_(v), den_(1) {
  if (v == std::numeric_limits<long>::min()) *this = from_big(mpq_class(v));
}

Scalar Scalar::zero(Field f) { return f.is_rational() ? Scalar() : residue(0, f.p); }
Scalar Scalar::one(Field f) { return f.is_rational() ? Scalar(1L) : residue(1, f.p); }

Scalar Scalar::from_int(Field f, long v) { return Scalar(v).in_field(f); }

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return from_big(std::move(c));
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.mod_ = p;
  s.num_ = static_cast<std::int64_t>(v % p);
  s.den_ = 1;
  return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("cannot parse exact coefficient '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return from_big(std::move(q)).in_field(f);
}

Scalar Scalar::make_small(std::int64_t n, std::int64_t d) {
  Scalar s;
  s.num_ = n;
  s.den_ = d;
  return s;
}

Scalar Scalar::from_big(mpq_class q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) return make_small(n, d);
  }
  Scalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::normalize128(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return make_small(0, 1);
  u128 g = gcd128(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) return make_small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  mpq_class q;
  set_mpz_from_i128(q.get_num_mpz_t(), n);
  set_mpz_from_i128(q.get_den_mpz_t(), d);
  return from_big(std::move(q));
}

bool Scalar::is_zero() const {
  if (is_big()) return false;  // canonical big values are never small enough to be zero
  return num_ == 0;
}

bool Scalar::is_one() const {
  if (mod_ != 0) return num_ == 1 % static_cast<std::int64_t>(mod_);
  return !is_big() && num_ == 1 && den_ == 1;
}

mpq_class Scalar::to_mpq() const {
  if (mod_ != 0) return mpq_class(static_cast<unsigned long>(num_));
  if (is_big()) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num_);
  mpz_set_si(q.get_den_mpz_t(), den_);
  return q;
}

Scalar Scalar::in_field(Field f) const {
  if (f.p == mod_) return *this;
  if (f.is_rational()) throw std::logic_error("cannot lift a prime-field element to Q");
  if (mod_ != 0) throw std::logic_error("field mismatch between F_" + std::to_string(mod_) + " and " + f.name());
  if (is_big()) return residue(reduce_mpq(*big_, f.p), f.p);
  std::int64_t n = num_ % static_cast<std::int64_t>(f.p);
  if (n < 0) n += static_cast<std::int64_t>(f.p);
  std::uint64_t d = static_cast<std::uint64_t>(den_) % f.p;
  return residue(mulmod(static_cast<std::uint64_t>(n), invmod(d, f.p), f.p), f.p);
}

std::string Scalar::str() const {
  if (mod_ != 0) return std::to_string(num_);
  if (is_big()) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (mod_ != 0) return residue(invmod(static_cast<std::uint64_t>(num_), mod_), mod_);
  if (is_big()) {
    mpq_class q = 1 / *big_;
    return from_big(std::move(q));
  }
  return num_ < 0 ? make_small(-den_, -num_) : make_small(den_, num_);
}

Scalar Scalar::operator-() const {
  if (mod_ != 0) return residue(num_ == 0 ? 0 : mod_ - static_cast<std::uint64_t>(num_), mod_);
  if (is_big()) return from_big(-*big_);
  return make_small(-num_, den_);
}

namespace {
// Bring both operands into a common field; returns the modulus (0 = Q).
std::uint64_t common_mod(const Scalar& a, const Scalar& b) {
  if (a.modulus() == b.modulus()) return a.modulus();
  if (a.modulus() != 0 && b.modulus() != 0) throw std::logic_error("arithmetic across different prime fields");
  return a.modulus() != 0 ? a.modulus() : b.modulus();
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint64_t m = common_mod(a, b);
  if (m != 0) {
    std::uint64_t x = a.in_field(Field{m}).residue_value();
    std::uint64_t y = b.in_field(Field{m}).residue_value();
    std::uint64_t s = x + y;
    if (s >= m) s -= m;
    return Scalar::residue(s, m);
  }
  if (!a.is_big() && !b.is_big()) {
    if (a.den_ == 1 && b.den_ == 1) return Scalar::normalize128(static_cast<i128>(a.num_) + b.num_, 1);
    return Scalar::normalize128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                static_cast<i128>(a.den_) * b.den_);
  }
  return Scalar::from_big(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint64_t m = common_mod(a, b);
  if (m != 0) {
    return Scalar::residue(mulmod(a.in_field(Field{m}).residue_value(), b.in_field(Field{m}).residue_value(), m), m);
  }
  if (!a.is_big() && !b.is_big()) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    if (a.den_ == 1 && b.den_ == 1) return Scalar::normalize128(static_cast<i128>(a.num_) * b.num_, 1);
    return Scalar::normalize128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Scalar::from_big(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint64_t m = common_mod(a, b);
  if (m != 0) return a.in_field(Field{m}).residue_value() == b.in_field(Field{m}).residue_value();
  if (!a.is_big() && !b.is_big()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.is_big() != b.is_big()) return false;
  return *a.big_ == *b.big_;
}

}  // namespace fdalg
