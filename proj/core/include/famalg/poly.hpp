#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "famalg/rational.hpp"

namespace famalg {

/// Exponent vector packed eight bits per variable.
///
/// Variable 0 sits in the most significant byte of the first word, so
/// comparing the words as unsigned integers is lexicographic comparison of
/// the exponent vectors. Exponent addition never carries between fields as
/// long as the total degree stays below 256, which multiplication checks.
class Monomial {
public:
  static constexpr int kMaxVars = 24;

  Monomial() = default;
  static Monomial variable(int index, int power = 1);

  [[nodiscard]] int exponent(int index) const noexcept {
    return int((words_[index >> 3] >> shift(index)) & 0xffu);
  }
  [[nodiscard]] int degree() const noexcept { return int(degree_); }

  /// Same monomial with exponent of `index` lowered by one (caller checks > 0).
  [[nodiscard]] Monomial lowered(int index) const noexcept;
  void set_exponent(int index, int power);

  friend Monomial operator*(const Monomial &a, const Monomial &b);

  friend bool operator==(const Monomial &a, const Monomial &b) noexcept {
    return a.degree_ == b.degree_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Monomial &a, const Monomial &b) noexcept { return !(a == b); }

  /// Graded lexicographic order.
  friend bool operator<(const Monomial &a, const Monomial &b) noexcept {
    if (a.degree_ != b.degree_)
      return a.degree_ < b.degree_;
    return a.words_ < b.words_;
  }

  [[nodiscard]] std::uint64_t hash() const noexcept {
    std::uint64_t h = words_[0] * 0x9e3779b97f4a7c15ull;
    h ^= (words_[1] + 0x632be59bd9b4e019ull) * 0xbf58476d1ce4e5b9ull;
    h ^= (words_[2] + degree_) * 0x94d049bb133111ebull;
    return h ^ (h >> 29);
  }

private:
  static constexpr int shift(int index) noexcept { return (7 - (index & 7)) * 8; }

  std::array<std::uint64_t, 3> words_{};
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse polynomial with exact rational coefficients in `nvars` commuting
/// variables x1..x_nvars.
///
/// Terms are kept in strictly decreasing graded-lex order with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
class Poly {
public:
  Poly() = default;
  explicit Poly(int nvars);

  static Poly constant(int nvars, const Rational &value);
  static Poly variable(int nvars, int index, const Rational &coeff = Rational(1));
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Poly from_terms(int nvars, std::vector<Term> terms);

  [[nodiscard]] int nvars() const noexcept { return nvars_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const std::vector<Term> &terms() const noexcept { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] bool is_homogeneous() const noexcept;
  [[nodiscard]] bool is_constant() const noexcept;
  /// Coefficient of the given monomial (zero if absent).
  [[nodiscard]] Rational coefficient(const Monomial &m) const;

  Poly &operator+=(const Poly &rhs);
  Poly &operator-=(const Poly &rhs);
  Poly &operator*=(const Poly &rhs);
  Poly &operator*=(const Rational &c);

  friend Poly operator+(Poly lhs, const Poly &rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly &rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly &lhs, const Poly &rhs);
  friend Poly operator*(Poly lhs, const Rational &c) { return lhs *= c; }
  friend Poly operator*(const Rational &c, Poly rhs) { return rhs *= c; }
  Poly operator-() const;

  [[nodiscard]] Poly scaled(const Rational &c) const { return *this * c; }
  [[nodiscard]] Poly pow(int exponent) const;

  /// Formal partial derivative with respect to variable `index` (0-based).
  [[nodiscard]] Poly partial(int index) const;

  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
  [[nodiscard]] std::uint64_t evaluate_mod(std::span<const std::uint64_t> point,
                                           std::uint64_t p) const;

  /// Canonical text form, e.g. "5/2*x1^2*x3 - x2 + 1". Variables are 1-based.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Poly &a, const Poly &b) noexcept {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly &a, const Poly &b) noexcept { return !(a == b); }

private:
  friend class PolyAccumulator;
  void check_same_ring(const Poly &rhs) const;
  Poly &add_scaled(const Poly &rhs, bool negate);

  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Hash-based accumulator for sums of products of polynomials.
///
/// Used by polynomial multiplication and by matrix products, where one
/// output entry collects many products before canonicalisation.
class PolyAccumulator {
public:
  explicit PolyAccumulator(int nvars);

  void add(const Monomial &m, const Rational &c);
  void add(const Poly &p);
  void add_scaled(const Poly &p, const Rational &c);
  void add_product(const Poly &a, const Poly &b);

  /// Returns the accumulated polynomial and resets the accumulator, keeping
  /// its allocated capacity.
  Poly take();

  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

private:
  void grow();
  std::size_t find_slot(const Monomial &m) const;

  int nvars_;
  std::vector<Term> entries_;
  std::vector<std::uint32_t> slots_; // index + 1 into entries_, 0 = empty
  std::size_t mask_ = 0;
};

} // namespace famalg
