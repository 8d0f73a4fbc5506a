#include "famalg/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace famalg {

namespace {

using i128 = wide_int;
using u128 = wide_uint;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  if (a == 0)
    return b;
  if (b == 0)
    return a;
  // Fall back to 64-bit gcd when both fit, which is the common case.
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    std::uint64_t x = std::uint64_t(a), y = std::uint64_t(b);
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs(std::int64_t v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(std::uint64_t(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(std::uint64_t(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t((u128(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class &z, std::uint64_t p) {
  mpz_class r;
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  return r.get_ui();
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class &value) { assign_big(value); }

Rational::Rational(const Rational &other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational &Rational::operator=(const Rational &other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
      num /= i128(g);
      den /= i128(g);
    }
  }
  if (num >= kMin64 && num <= kMax64 && den <= kMax64) {
    num_ = std::int64_t(num);
    den_ = std::int64_t(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  q.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  if (mpz_fits_slong_p(value.get_num_mpz_t()) && mpz_fits_slong_p(value.get_den_mpz_t())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(value));
  num_ = 0;
  den_ = 1;
}

int Rational::sign() const noexcept {
  if (big_)
    return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_)
    return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::to_string() const {
  if (big_)
    return big_->get_str();
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string &text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  if (q.get_den() == 0)
    throw std::domain_error("Rational::parse: zero denominator");
  return Rational(q);
}

std::uint64_t Rational::mod(std::uint64_t p) const {
  std::uint64_t n, d;
  if (big_) {
    n = mpz_mod(big_->get_num(), p);
    d = mpz_mod(big_->get_den(), p);
  } else {
    n = num_ >= 0 ? std::uint64_t(num_) % p : (p - uabs(num_) % p) % p;
    d = std::uint64_t(den_) % p;
  }
  if (d == 0)
    throw std::domain_error("Rational::mod: denominator vanishes modulo p");
  return mulmod(n, powmod(d, p - 2, p), p);
}

Rational &Rational::operator+=(const Rational &rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, rhs.num_, &r)) {
        num_ = r;
        return *this;
      }
      assign_wide(i128(num_) + rhs.num_, 1);
      return *this;
    }
    if (den_ == rhs.den_) {
      assign_wide(i128(num_) + rhs.num_, den_);
      return *this;
    }
    std::uint64_t g = gcd64(std::uint64_t(den_), std::uint64_t(rhs.den_));
    i128 lhs_scale = rhs.den_ / std::int64_t(g);
    i128 rhs_scale = den_ / std::int64_t(g);
    assign_wide(i128(num_) * lhs_scale + i128(rhs.num_) * rhs_scale, i128(den_) * lhs_scale);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  if (!rhs.big_ && rhs.num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational neg;
    neg.num_ = -rhs.num_;
    neg.den_ = rhs.den_;
    return *this += neg;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, rhs.num_, &r)) {
        num_ = r;
        return *this;
      }
      assign_wide(i128(num_) * rhs.num_, 1);
      return *this;
    }
    // Cross-cancel so the product is already reduced.
    std::int64_t g1 = std::int64_t(gcd64(uabs(num_), std::uint64_t(rhs.den_)));
    std::int64_t g2 = std::int64_t(gcd64(uabs(rhs.num_), std::uint64_t(den_)));
    i128 n = i128(num_ / g1) * (rhs.num_ / g2);
    i128 d = i128(den_ / g2) * (rhs.den_ / g1);
    if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
      num_ = std::int64_t(n);
      den_ = std::int64_t(d);
      return *this;
    }
    assign_wide(n, d);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw std::domain_error("Rational: division by zero");
  if (!rhs.big_ && rhs.num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  r.assign_big(-to_mpq());
  return r;
}

bool operator==(const Rational &a, const Rational &b) noexcept {
  if (!a.big_ && !b.big_)
    return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_)
    return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational &a, const Rational &b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_)
      return a.num_ < b.num_;
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.to_string(); }

} // namespace famalg
