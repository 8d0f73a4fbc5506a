#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "famalg/matrix.hpp"
#include "famalg/rational.hpp"

namespace famalg {

/// One element of the ordered sl(n) basis. Indices are 1-based.
struct BasisElement {
  enum class Kind { OffDiagonal, Diagonal };

  Kind kind = Kind::OffDiagonal;
  int i = 1; ///< row of E_ij, or index of H_i = E_ii - E_{i+1,i+1}
  int j = 2; ///< column of E_ij (unused for diagonal elements)

  [[nodiscard]] std::string name() const;
  friend bool operator==(const BasisElement &, const BasisElement &) = default;
};

/// A structure-constant entry: [x_a, x_b] contains coeff * x_target.
struct BracketTerm {
  int target;
  Rational coeff;
};

/// sl(n) in the defining representation, together with the trace form.
///
/// Basis order: E_ij (i != j) lexicographically in (i, j), then H_1..H_{n-1}.
/// The bilinear form used for raising and lowering is K_ab = tr(pi_a pi_b).
/// Immutable once built.
class LieData {
public:
  static LieData build(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<BasisElement> &basis() const noexcept { return basis_; }
  [[nodiscard]] const RationalMatrix &pi(int a) const { return pi_.at(std::size_t(a)); }
  [[nodiscard]] const RationalMatrix &killing() const noexcept { return killing_; }
  [[nodiscard]] const RationalMatrix &killing_inverse() const noexcept { return killing_inv_; }

  /// Nonzero terms of [x_a, x_b].
  [[nodiscard]] const std::vector<BracketTerm> &bracket(int a, int b) const {
    return brackets_[std::size_t(a * dim_ + b)];
  }
  /// f^c_{ab}.
  [[nodiscard]] Rational structure_constant(int a, int b, int c) const;
  /// Matrix of ad(x_a) acting on basis coordinates (column b = [x_a, x_b]).
  [[nodiscard]] RationalMatrix ad_matrix(int a) const;

  /// Coordinates of a traceless n x n matrix in the basis.
  [[nodiscard]] std::vector<Rational> coordinates(const RationalMatrix &m) const;
  /// Basis index of E_ij (1-based i, j, i != j).
  [[nodiscard]] int index_of_offdiagonal(int i, int j) const;

private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<RationalMatrix> pi_;
  RationalMatrix killing_;
  RationalMatrix killing_inv_;
  std::vector<std::vector<BracketTerm>> brackets_;
};

/// Exact group element: Ad(g) on the basis coordinates and g itself.
struct GroupElement {
  RationalMatrix adjoint;
  RationalMatrix defining;
};

/// sum_{ab} (x_a)_{rs} K^{ab} (x_b)_{uv} == delta_rv delta_us - delta_rs delta_uv / n
/// for every index quadruple, using the supplied inverse form.
bool projector_identity_check(const LieData &lie, const RationalMatrix &killing_inverse);
inline bool projector_identity_check(const LieData &lie) {
  return projector_identity_check(lie, lie.killing_inverse());
}

/// exp(t ad E_ij) and exp(t E_ij); both series terminate.
GroupElement exp_ad_nilpotent(const LieData &lie, int i, int j, const Rational &t);

/// Group product a*b.
GroupElement compose(const GroupElement &a, const GroupElement &b);

/// Product of `factors` random unipotent elements with small rational parameters.
GroupElement random_group_element(const LieData &lie, std::mt19937_64 &rng, int factors = 3);

/// Random point of g* with integer coordinates in [-bound, bound].
std::vector<Rational> random_point(const LieData &lie, std::mt19937_64 &rng, int bound = 20);

/// Coadjoint action on coordinates: xi -> K G K^{-1} xi.
std::vector<Rational> transform_point(const LieData &lie, const GroupElement &g,
                                      const std::vector<Rational> &xi);

/// Uniform integer in [lo, hi] drawn directly from the engine, so that
/// sequences are identical across standard library implementations.
std::int64_t draw_int(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi);

} // namespace famalg
