#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famalg/casimir.hpp"
#include "famalg/lie.hpp"

namespace famalg {

/// Element of (End(g) (x) C[g*])^G as a dim x dim matrix of polynomials.
///
/// Row index is the x_a slot, column index the x^b slot; the product is the
/// ordinary matrix product with polynomial entries.
class FamilyElement {
public:
  FamilyElement() = default;
  explicit FamilyElement(int dim);

  static FamilyElement identity(int dim);
  /// p * Id.
  static FamilyElement scalar(int dim, const Poly &p);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] const Poly &operator()(int a, int b) const { return mat_(a, b); }
  Poly &operator()(int a, int b) { return mat_(a, b); }
  [[nodiscard]] const PolyMatrix &matrix() const noexcept { return mat_; }

  [[nodiscard]] bool is_zero() const noexcept;
  /// Largest entry degree; -1 for zero.
  [[nodiscard]] int degree() const noexcept;
  /// All nonzero entries homogeneous of one common degree.
  [[nodiscard]] bool is_homogeneous() const noexcept;
  [[nodiscard]] std::size_t term_count() const noexcept;

  FamilyElement &operator+=(const FamilyElement &rhs);
  FamilyElement &operator-=(const FamilyElement &rhs);
  friend FamilyElement operator+(FamilyElement a, const FamilyElement &b) { return a += b; }
  friend FamilyElement operator-(FamilyElement a, const FamilyElement &b) { return a -= b; }
  friend FamilyElement operator*(const FamilyElement &a, const FamilyElement &b);

  [[nodiscard]] FamilyElement scaled(const Rational &c) const;
  /// Multiplication by an invariant polynomial (entrywise).
  [[nodiscard]] FamilyElement scaled(const Poly &p) const;

  [[nodiscard]] RationalMatrix evaluate(std::span<const Rational> point) const;
  [[nodiscard]] std::vector<std::uint64_t> evaluate_mod(std::span<const std::uint64_t> point,
                                                        std::uint64_t p) const;

  friend bool operator==(const FamilyElement &a, const FamilyElement &b) {
    return a.dim_ == b.dim_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const FamilyElement &a, const FamilyElement &b) { return !(a == b); }

private:
  void check_same(const FamilyElement &rhs) const;

  int dim_ = 0;
  PolyMatrix mat_;
};

/// {K^{ag} tr(pi_b pi_g X)} (left) or {K^{ag} tr(pi_g pi_b X)} (right) for
/// an n x n polynomial matrix X.
FamilyElement trace_form(const LieData &lie, const PolyMatrix &X, bool left);

FamilyElement gen_L(const LieData &lie, const FMatrix &F);
FamilyElement gen_R(const LieData &lie, const FMatrix &F);
FamilyElement gen_S(const LieData &lie);

/// {K^{ag} f^d_{gb} x_d}: the element built from structure constants.
FamilyElement structure_element(const LieData &lie);
/// {K_{bg} d^a d^g c3}: second derivatives of the cubic Casimir.
FamilyElement hessian_element(const LieData &lie, const Poly &c3);

/// sum_{ab} A^a_b x_a K^{bg} x_g.
Poly symmetrize(const LieData &lie, const FamilyElement &A);
/// (A^t)^a_b = K^{ag} A^d_g K_{db}.
FamilyElement killing_transpose(const LieData &lie, const FamilyElement &A);
/// D = (d^a c3) K_ab d^b applied to every entry.
FamilyElement apply_D(const LieData &lie, const Poly &c3, const FamilyElement &A);
/// A(G.xi) == Ad(G) A(xi) Ad(G)^{-1}, checked as A(G.xi) Ad(G) == Ad(G) A(xi).
bool equivariance_check(const LieData &lie, const FamilyElement &A, const GroupElement &g,
                        const std::vector<Rational> &xi);

/// Scalar r with A == r * B, if one exists (B nonzero).
std::optional<Rational> proportionality(const FamilyElement &A, const FamilyElement &B);

/// Which compositions enter the S-correction of L_k, R_k and N_k.
///
/// TraceForm keeps compositions with at most three parts: iterating the
/// projector identity only ever produces one Casimir factor per side.
/// AllCompositions keeps every composition with the full product over parts
/// beyond the second; the two agree for k <= 5 and differ from k = 6 on
/// (by c_2^2 S / n^3 first).
enum class CorrectionRule { TraceForm, AllCompositions };

/// The family algebra of the adjoint representation of sl(n), with its
/// generators and a cache of products ("words") of generators.
///
/// Words are strings over {L, R, S, M, N}; the empty word is the identity.
/// All members are safe to call concurrently.
class FamilyAlgebra {
public:
  explicit FamilyAlgebra(int n);

  [[nodiscard]] int n() const noexcept { return lie_.n(); }
  [[nodiscard]] int dim() const noexcept { return lie_.dim(); }
  [[nodiscard]] const LieData &lie() const noexcept { return lie_; }
  [[nodiscard]] const Casimirs &casimirs() const noexcept { return cas_; }
  [[nodiscard]] const Poly &c(int k) const { return cas_.c(k); }
  [[nodiscard]] const Poly &d(int k) const { return cas_.d(k); }

  [[nodiscard]] const FamilyElement &identity() const noexcept { return identity_; }
  [[nodiscard]] const FamilyElement &L() const noexcept { return L_; }
  [[nodiscard]] const FamilyElement &R() const noexcept { return R_; }
  [[nodiscard]] const FamilyElement &S() const noexcept { return S_; }
  [[nodiscard]] const FamilyElement &M() const noexcept { return M_; }
  [[nodiscard]] const FamilyElement &N() const noexcept { return N_; }
  [[nodiscard]] const FamilyElement &generator(char letter) const;

  /// Product of the generators spelled by `w`, cached by prefix.
  const FamilyElement &word(std::string_view w) const;
  FamilyElement power(const FamilyElement &A, int k) const;

  /// L^k + (1/n) sum_{lambda |= k, |lambda|>1} prod_{i>2} (c_{lambda_i}/n) L^{l1-1} S R^{l2-1}.
  FamilyElement element_Lk(int k, CorrectionRule rule = CorrectionRule::TraceForm) const;
  FamilyElement element_Rk(int k, CorrectionRule rule = CorrectionRule::TraceForm) const;
  /// sum_j C(k,2j) N^{k-2j} M^{2j} + the same S correction with N on both sides.
  FamilyElement element_Nk(int k, CorrectionRule rule = CorrectionRule::TraceForm) const;

  FamilyElement trace_form_Lk(int k) const;
  FamilyElement trace_form_Rk(int k) const;

  [[nodiscard]] Poly symmetrize(const FamilyElement &A) const { return famalg::symmetrize(lie_, A); }
  [[nodiscard]] FamilyElement killing_transpose(const FamilyElement &A) const {
    return famalg::killing_transpose(lie_, A);
  }
  [[nodiscard]] FamilyElement apply_D(const FamilyElement &A) const {
    return famalg::apply_D(lie_, cas_.c(3), A);
  }
  [[nodiscard]] bool equivariance_check(const FamilyElement &A, const GroupElement &g,
                                        const std::vector<Rational> &xi) const {
    return famalg::equivariance_check(lie_, A, g, xi);
  }

private:
  enum class Side { Left, Right, Natural };
  FamilyElement composition_sum(int k, Side side, CorrectionRule rule) const;

  LieData lie_;
  Casimirs cas_;
  FamilyElement identity_, L_, R_, S_, M_, N_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const FamilyElement>, std::less<>> words_;
};

} // namespace famalg
