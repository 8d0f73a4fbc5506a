#include "famalg/casimir.hpp"

#include <algorithm>
#include <numeric>

#include "famalg/errors.hpp"

namespace famalg {

PolyMatrix zero_poly_matrix(std::size_t rows, std::size_t cols, int nvars) {
  return PolyMatrix(rows, cols, Poly(nvars));
}

PolyMatrix identity_poly_matrix(std::size_t n, int nvars) {
  PolyMatrix m = zero_poly_matrix(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Poly::constant(nvars, Rational(1));
  return m;
}

PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b, int nvars) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("PolyMatrix: product shape mismatch");
  PolyMatrix c = zero_poly_matrix(a.rows(), b.cols(), nvars);
  PolyAccumulator acc(nvars);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool any = false;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Poly &x = a(i, k);
        const Poly &y = b(k, j);
        if (x.is_zero() || y.is_zero())
          continue;
        if (x.is_constant()) {
          acc.add_scaled(y, x.terms()[0].coeff);
        } else if (y.is_constant()) {
          acc.add_scaled(x, y.terms()[0].coeff);
        } else {
          acc.add_product(x, y);
        }
        any = true;
      }
      if (any)
        c(i, j) = acc.take();
    }
  return c;
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

FMatrix build_F(const LieData &lie) {
  const int n = lie.n(), dim = lie.dim();
  FMatrix F{n, dim, zero_poly_matrix(n, n, dim)};
  const auto &kinv = lie.killing_inverse();
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      PolyAccumulator acc(dim);
      for (int a = 0; a < dim; ++a) {
        const Rational &p = lie.pi(a)(r, s);
        if (p.is_zero())
          continue;
        for (int b = 0; b < dim; ++b)
          if (!kinv(a, b).is_zero())
            acc.add(Monomial::variable(b), p * kinv(a, b));
      }
      F.entries(r, s) = acc.take();
    }
  return F;
}

namespace {

Poly matrix_trace(const PolyMatrix &m, int nvars) {
  Poly t(nvars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    t += m(i, i);
  return t;
}

// Newton's identities: e_k = (1/k) sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i, and
// d_k = (-1)^{k+1} e_k from the characteristic polynomial.
std::vector<Poly> newton_d(int n, int nvars, const std::vector<Poly> &p) {
  std::vector<Poly> e(std::size_t(n + 1), Poly(nvars));
  e[0] = Poly::constant(nvars, Rational(1));
  for (int k = 1; k <= n; ++k) {
    PolyAccumulator acc(nvars);
    for (int i = 1; i <= k; ++i) {
      Poly term = e[k - i] * p[i];
      acc.add_scaled(term, Rational(i % 2 == 1 ? 1 : -1, k));
    }
    e[k] = acc.take();
  }
  std::vector<Poly> d(std::size_t(n + 1), Poly(nvars));
  for (int k = 1; k <= n; ++k)
    d[k] = k % 2 == 1 ? e[k] : -e[k];
  return d;
}

} // namespace

Poly casimir_c(const FMatrix &F, int k) {
  if (k < 0)
    throw std::domain_error("casimir_c: k must be non-negative");
  PolyMatrix power = identity_poly_matrix(F.n, F.nvars);
  for (int i = 0; i < k; ++i)
    power = multiply(power, F.entries, F.nvars);
  return matrix_trace(power, F.nvars);
}

std::vector<Poly> coeffs_d(const FMatrix &F) {
  std::vector<Poly> p(std::size_t(F.n + 1), Poly(F.nvars));
  PolyMatrix power = identity_poly_matrix(F.n, F.nvars);
  for (int k = 1; k <= F.n; ++k) {
    power = multiply(power, F.entries, F.nvars);
    p[k] = matrix_trace(power, F.nvars);
  }
  return newton_d(F.n, F.nvars, p);
}

PolyMatrix cayley_hamilton_residual(const FMatrix &F, const std::vector<Poly> &d) {
  const int n = F.n;
  std::vector<PolyMatrix> powers{identity_poly_matrix(n, F.nvars)};
  for (int k = 1; k <= n; ++k)
    powers.push_back(multiply(powers.back(), F.entries, F.nvars));
  PolyMatrix residual = powers[n];
  for (int k = 0; k <= n - 2; ++k) {
    const PolyMatrix &scaled = powers[k];
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        if (!scaled(r, s).is_zero())
          residual(r, s) -= d[n - k] * scaled(r, s);
  }
  return residual;
}

namespace {

void extend_compositions(int remaining, std::vector<int> &current, std::vector<Composition> &out) {
  if (remaining == 0) {
    out.push_back(Composition{current});
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    current.push_back(part);
    extend_compositions(remaining - part, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Composition> compositions(int k, int min_parts) {
  std::vector<Composition> all;
  if (k < 0)
    return all;
  std::vector<int> current;
  extend_compositions(k, current, all);
  std::vector<Composition> out;
  for (auto &c : all)
    if (int(c.size()) >= min_parts)
      out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(), [](const Composition &a, const Composition &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.parts < b.parts;
  });
  return out;
}

Casimirs::Casimirs(const LieData &lie) : F_(build_F(lie)) {
  powers_.push_back(identity_poly_matrix(F_.n, F_.nvars));
  c_.push_back(Poly::constant(F_.nvars, Rational(F_.n)));
}

const PolyMatrix &Casimirs::power(int k) const {
  if (k < 0)
    throw std::domain_error("Casimirs::power: negative exponent");
  std::lock_guard lock(mutex_);
  while (int(powers_.size()) <= k)
    powers_.push_back(multiply(powers_.back(), F_.entries, F_.nvars));
  return powers_[std::size_t(k)];
}

const Poly &Casimirs::c(int k) const {
  if (k < 0)
    throw std::domain_error("Casimirs::c: negative index");
  power(k);
  std::lock_guard lock(mutex_);
  while (int(c_.size()) <= k)
    c_.push_back(matrix_trace(powers_[c_.size()], F_.nvars));
  return c_[std::size_t(k)];
}

const Poly &Casimirs::d(int j) const {
  if (j < 0 || j > F_.n)
    throw std::out_of_range("Casimirs::d: index outside 0..n");
  {
    std::lock_guard lock(mutex_);
    if (!d_.empty())
      return d_[std::size_t(j)];
  }
  std::vector<Poly> p(std::size_t(F_.n + 1), Poly(F_.nvars));
  for (int k = 1; k <= F_.n; ++k)
    p[k] = c(k);
  auto d = newton_d(F_.n, F_.nvars, p);
  std::lock_guard lock(mutex_);
  if (d_.empty())
    d_ = std::move(d);
  return d_[std::size_t(j)];
}

Poly Casimirs::product(const std::vector<int> &parts) const {
  Poly result = Poly::constant(F_.nvars, Rational(1));
  for (int part : parts) {
    const Poly &ck = c(part);
    if (ck.is_zero())
      return Poly(F_.nvars);
    result = result * ck;
  }
  return result;
}

Poly sandwich_scalar(const Casimirs &cas, int m) {
  if (m < 2)
    throw std::domain_error("sandwich_scalar: m must be at least 2");
  const int n = cas.n();
  PolyAccumulator acc(cas.nvars());
  for (const auto &lambda : compositions(m, 1)) {
    // (-n) * prod_i (-1/n) = (-1)^{|lambda|+1} n^{1-|lambda|}.
    Poly prod = cas.product(lambda.parts);
    if (prod.is_zero())
      continue;
    const int len = int(lambda.size());
    Rational scale(len % 2 == 1 ? 1 : -1);
    for (int i = 1; i < len; ++i)
      scale /= Rational(n);
    acc.add_scaled(prod, scale);
  }
  return acc.take();
}

Poly sandwich_scalar(const FMatrix &F, int m) {
  // Stand-alone path without a cached table.
  if (m < 2)
    throw std::domain_error("sandwich_scalar: m must be at least 2");
  const int n = F.n;
  std::vector<Poly> c;
  for (int k = 0; k <= m; ++k)
    c.push_back(casimir_c(F, k));
  PolyAccumulator acc(F.nvars);
  for (const auto &lambda : compositions(m, 1)) {
    Poly prod = Poly::constant(F.nvars, Rational(1));
    for (int part : lambda.parts)
      prod = prod * c[part];
    if (prod.is_zero())
      continue;
    const int len = int(lambda.size());
    Rational scale(len % 2 == 1 ? 1 : -1);
    for (int i = 1; i < len; ++i)
      scale /= Rational(n);
    acc.add_scaled(prod, scale);
  }
  return acc.take();
}

} // namespace famalg
