#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace famalg {

__extension__ using wide_int = __int128;
__extension__ using wide_uint = unsigned __int128;

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are held
/// inline; anything larger is promoted to a GMP rational. The representation
/// is canonical (small whenever possible, reduced, positive denominator), so
/// equality is a field comparison.
class Rational {
public:
  Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class &value);

  Rational(const Rational &other);
  Rational(Rational &&other) noexcept = default;
  Rational &operator=(const Rational &other);
  Rational &operator=(Rational &&other) noexcept = default;
  ~Rational() = default;

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const noexcept { return !big_ && den_ == 1; }
  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] int sign() const noexcept;

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;

  /// Parses "p" or "p/q" (optional leading '-').
  static Rational parse(const std::string &text);

  /// Image in Z/pZ. Throws std::domain_error if p divides the denominator.
  [[nodiscard]] std::uint64_t mod(std::uint64_t p) const;

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) noexcept;
  friend bool operator<(const Rational &a, const Rational &b);
  friend bool operator!=(const Rational &a, const Rational &b) noexcept { return !(a == b); }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
  friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

  friend std::ostream &operator<<(std::ostream &os, const Rational &q);

private:
  void assign_wide(wide_int num, wide_int den);
  void assign_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

} // namespace famalg
