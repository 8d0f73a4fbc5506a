#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include "famalg/lie.hpp"
#include "famalg/matrix.hpp"
#include "famalg/poly.hpp"

namespace famalg {

using PolyMatrix = Matrix<Poly>;

/// Product of polynomial matrices; each output entry is accumulated in one
/// hash pass over all contributing products.
PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b, int nvars);
PolyMatrix zero_poly_matrix(std::size_t rows, std::size_t cols, int nvars);
PolyMatrix identity_poly_matrix(std::size_t n, int nvars);

/// F = sum_ab pi(x_a) K^{ab} x_b, an n x n matrix of linear forms.
struct FMatrix {
  int n = 0;
  int nvars = 0;
  PolyMatrix entries;
};

/// An ordered list of positive parts.
struct Composition {
  std::vector<int> parts;

  [[nodiscard]] int total() const;
  [[nodiscard]] std::size_t size() const noexcept { return parts.size(); }
  friend bool operator==(const Composition &, const Composition &) = default;
};

FMatrix build_F(const LieData &lie);

/// c_k = tr(F^k).
Poly casimir_c(const FMatrix &F, int k);

/// Cayley-Hamilton coefficients: F^n = sum_{k=0}^{n-2} d_{n-k} F^k.
/// Returned vector has n+1 entries; d[j] is d_j for 2 <= j <= n, d[1] is the
/// (vanishing) coefficient of F^{n-1} and d[0] is unused.
std::vector<Poly> coeffs_d(const FMatrix &F);

/// Entrywise F^n - sum_k d_{n-k} F^k.
PolyMatrix cayley_hamilton_residual(const FMatrix &F, const std::vector<Poly> &d);

/// Compositions of k with at least `min_parts` parts, ordered by number of
/// parts and then lexicographically.
std::vector<Composition> compositions(int k, int min_parts = 1);

/// Lazily extended table of F^k, c_k and d_k for one sl(n). Thread-safe.
class Casimirs {
public:
  explicit Casimirs(const LieData &lie);

  [[nodiscard]] const FMatrix &F() const noexcept { return F_; }
  [[nodiscard]] int n() const noexcept { return F_.n; }
  [[nodiscard]] int nvars() const noexcept { return F_.nvars; }

  const PolyMatrix &power(int k) const;
  const Poly &c(int k) const;
  /// d_j, 0 <= j <= n (see coeffs_d).
  const Poly &d(int j) const;
  /// Product of c_{parts[i]} over the given parts.
  Poly product(const std::vector<int> &parts) const;

private:
  FMatrix F_;
  mutable std::mutex mutex_;
  mutable std::deque<PolyMatrix> powers_;
  mutable std::deque<Poly> c_;
  mutable std::vector<Poly> d_;
};

/// -n * sum_{lambda composition of m} prod_i (-c_{lambda_i} / n): the invariant
/// multiplying S in S L^k R^l S with k + l + 2 = m.
Poly sandwich_scalar(const Casimirs &cas, int m);
Poly sandwich_scalar(const FMatrix &F, int m);

} // namespace famalg
