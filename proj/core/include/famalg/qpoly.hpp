#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace famalg {

/// Laurent-free polynomial in q with integer coefficients; no zero
/// coefficients are stored.
class QPoly {
public:
  QPoly() = default;
  /// c * q^degree.
  static QPoly monomial(int degree, std::int64_t c = 1);
  static QPoly constant(std::int64_t c) { return monomial(0, c); }

  [[nodiscard]] const std::map<int, std::int64_t> &coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] std::int64_t coefficient(int degree) const;
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest degree; -1 for zero.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] bool nonnegative() const noexcept;
  [[nodiscard]] std::int64_t at_one() const noexcept;

  QPoly &operator+=(const QPoly &rhs);
  QPoly &operator-=(const QPoly &rhs);
  friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
  friend QPoly operator*(const QPoly &a, const QPoly &b);
  /// Multiplication by q^k.
  [[nodiscard]] QPoly shifted(int k) const;

  friend bool operator==(const QPoly &, const QPoly &) = default;

  /// Ascending degree, e.g. "q^2+q^3+2q^4", "1", "0", "q-q^3".
  [[nodiscard]] std::string to_string() const;

private:
  void add(int degree, std::int64_t c);
  std::map<int, std::int64_t> coeffs_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a or
/// the leading coefficient of b is not +-1.
QPoly exact_divide(const QPoly &a, const QPoly &b);

/// [m]_q = 1 + q + ... + q^{m-1}.
QPoly q_integer(int m);
/// Gaussian binomial prod_{i=1}^k (1 - q^{m-k+i}) / (1 - q^i).
QPoly q_binomial(int m, int k);

} // namespace famalg
