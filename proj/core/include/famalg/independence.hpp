#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "famalg/family.hpp"

namespace famalg {

/// The monomial L^k S^m R^l (m in {0, 1}).
struct MonomialIndex {
  int k = 0;
  int m = 0;
  int l = 0;

  [[nodiscard]] int degree() const noexcept { return k + 2 * m + l; }
  /// Generator word, e.g. "LLSR"; empty for the identity.
  [[nodiscard]] std::string word() const;
  /// Human-readable form, e.g. "L^2SR", "1".
  [[nodiscard]] std::string label() const;
  friend bool operator==(const MonomialIndex &, const MonomialIndex &) = default;
};

/// Which L^a R^b monomial is discarded in each degree n-1 .. 2n-2.
enum class Transversal {
  /// L^{n-1} R^{d-n+1} in degree d.
  LeadingL,
  /// At n = 4 the list {R^3, L^2R^2, L^2R^3, L^3R^3} used in the standard
  /// presentation of the 21-element basis; LeadingL for every other n.
  Standard,
};

/// 2n^2 - 3n + 1: the I(g)-rank of the family algebra of the adjoint representation.
int expected_basis_size(int n);

/// L^k R^l (0 <= k, l <= n-1) minus one monomial per degree n-1 .. 2n-2, then
/// L^k S R^l (0 <= k, l <= n-2). Ordered by degree, pure L/R words before words
/// containing S, then by decreasing power of L.
std::vector<MonomialIndex> monomial_basis(int n, Transversal rule = Transversal::Standard);

struct RankReport {
  int n = 0;
  std::size_t expected = 0;           ///< number of monomials tested
  std::size_t rank = 0;               ///< maximum rank over the sample points
  std::vector<std::size_t> per_point; ///< rank at each point
  int points = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0; ///< modulus of the fast path
  bool exact = false;      ///< true if exact rational elimination decided the rank

  [[nodiscard]] bool full_rank() const noexcept { return rank == expected; }
};

/// Evaluates every monomial at `num_points` random integer points of g*,
/// flattens each value to a vector of length (n^2-1)^2 and computes the rank of
/// the monomials-by-entries matrix at each point.
///
/// A full rank at any point proves the monomials are linearly independent over
/// I(g) (a dependence with invariant coefficients would persist at every point).
/// A deficiency is only evidence of dependence: the points may be special.
/// Ranks are first computed modulo a random 62-bit prime; the modular rank can
/// only undercount, so a deficiency is rechecked by exact elimination.
RankReport rank_certificate(const FamilyAlgebra &A, const std::vector<MonomialIndex> &monomials,
                            int num_points, std::uint64_t seed);

/// Expansion of symmetrize((L+R)^m) in products of Casimirs c_2 .. c_{m+2}.
struct CasimirWitness {
  int n = 0;
  int m = 0;
  Poly symmetrized;
  /// (parts, coefficient): the coefficient of prod_i c_{parts[i]}.
  std::vector<std::pair<std::vector<int>, Rational>> expansion;
  Rational top_coefficient; ///< coefficient of c_{m+2}
  bool solved = false;      ///< false if no expansion exists

  [[nodiscard]] bool nonvanishing() const { return solved && !top_coefficient.is_zero(); }
};

/// Requires 0 <= m < n - 1.
CasimirWitness casimir_witness(const FamilyAlgebra &A, int m);

/// Partitions of `total` with all parts in [min_part, max_part], parts
/// non-increasing, in reverse lexicographic order.
std::vector<std::vector<int>> bounded_partitions(int total, int min_part, int max_part);

} // namespace famalg
