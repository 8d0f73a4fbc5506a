#include "famalg/lie.hpp"

#include "famalg/errors.hpp"

namespace famalg {

std::string BasisElement::name() const {
  if (kind == Kind::Diagonal)
    return "H" + std::to_string(i);
  return "E" + std::to_string(i) + std::to_string(j);
}

LieData LieData::build(int n) {
  if (n < 2)
    throw InvalidDimension("sl(n) requires n >= 2, got " + std::to_string(n));

  LieData L;
  L.n_ = n;
  L.dim_ = n * n - 1;

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        L.basis_.push_back({BasisElement::Kind::OffDiagonal, i, j});
  for (int i = 1; i < n; ++i)
    L.basis_.push_back({BasisElement::Kind::Diagonal, i, i + 1});

  for (const auto &b : L.basis_) {
    RationalMatrix m{std::size_t(n), std::size_t(n)};
    if (b.kind == BasisElement::Kind::OffDiagonal) {
      m(b.i - 1, b.j - 1) = Rational(1);
    } else {
      m(b.i - 1, b.i - 1) = Rational(1);
      m(b.i, b.i) = Rational(-1);
    }
    L.pi_.push_back(std::move(m));
  }

  const int dim = L.dim_;
  L.killing_ = RationalMatrix(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      L.killing_(a, b) = trace(L.pi_[a] * L.pi_[b]);
  L.killing_inv_ = inverse(L.killing_);

  L.brackets_.resize(std::size_t(dim * dim));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const RationalMatrix comm = L.pi_[a] * L.pi_[b] - L.pi_[b] * L.pi_[a];
      const auto coords = L.coordinates(comm);
      auto &terms = L.brackets_[std::size_t(a * dim + b)];
      for (int c = 0; c < dim; ++c)
        if (!coords[c].is_zero())
          terms.push_back({c, coords[c]});
    }
  return L;
}

std::vector<Rational> LieData::coordinates(const RationalMatrix &m) const {
  if (int(m.rows()) != n_ || int(m.cols()) != n_)
    throw DimensionMismatch("LieData::coordinates: expected an n x n matrix");
  std::vector<Rational> coords(static_cast<std::size_t>(dim_));
  int k = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j)
        coords[k++] = m(i, j);
  // diag(d) = sum_i h_i H_i with h_i = d_1 + ... + d_i.
  Rational partial;
  for (int i = 0; i + 1 < n_; ++i) {
    partial += m(i, i);
    coords[k++] = partial;
  }
  if (partial + m(n_ - 1, n_ - 1) != Rational(0))
    throw std::domain_error("LieData::coordinates: matrix is not traceless");
  return coords;
}

int LieData::index_of_offdiagonal(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_)
    throw InvalidGenerator("E_" + std::to_string(i) + std::to_string(j) +
                           " is not an off-diagonal generator of sl(" + std::to_string(n_) + ")");
  // Row i contributes n-1 entries; skip the diagonal slot.
  return (i - 1) * (n_ - 1) + (j < i ? j - 1 : j - 2);
}

Rational LieData::structure_constant(int a, int b, int c) const {
  for (const auto &t : bracket(a, b))
    if (t.target == c)
      return t.coeff;
  return Rational(0);
}

RationalMatrix LieData::ad_matrix(int a) const {
  RationalMatrix ad{std::size_t(dim_), std::size_t(dim_)};
  for (int b = 0; b < dim_; ++b)
    for (const auto &t : bracket(a, b))
      ad(t.target, b) = t.coeff;
  return ad;
}

bool projector_identity_check(const LieData &lie, const RationalMatrix &kinv) {
  const int n = lie.n(), dim = lie.dim();
  const Rational inv_n = Rational(1, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          Rational sum;
          for (int a = 0; a < dim; ++a) {
            const Rational &pa = lie.pi(a)(r, s);
            if (pa.is_zero())
              continue;
            for (int b = 0; b < dim; ++b) {
              const Rational &pb = lie.pi(b)(u, v);
              if (!pb.is_zero() && !kinv(a, b).is_zero())
                sum += pa * kinv(a, b) * pb;
            }
          }
          Rational expected;
          if (r == v && u == s)
            expected += Rational(1);
          if (r == s && u == v)
            expected -= inv_n;
          if (sum != expected)
            return false;
        }
  return true;
}

GroupElement exp_ad_nilpotent(const LieData &lie, int i, int j, const Rational &t) {
  const int e = lie.index_of_offdiagonal(i, j);
  const RationalMatrix ad = lie.ad_matrix(e);
  const RationalMatrix ad2 = ad * ad;
  GroupElement g;
  g.adjoint = identity_matrix(lie.dim()) + t * ad + (t * t / Rational(2)) * ad2;
  g.defining = identity_matrix(lie.n()) + t * lie.pi(e);
  return g;
}

GroupElement compose(const GroupElement &a, const GroupElement &b) {
  return {a.adjoint * b.adjoint, a.defining * b.defining};
}

std::int64_t draw_int(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  return lo + std::int64_t(rng() % span);
}

GroupElement random_group_element(const LieData &lie, std::mt19937_64 &rng, int factors) {
  const int n = lie.n();
  GroupElement g{identity_matrix(lie.dim()), identity_matrix(n)};
  for (int f = 0; f < factors; ++f) {
    int i = int(draw_int(rng, 1, n));
    int j = int(draw_int(rng, 1, n - 1));
    if (j >= i)
      ++j;
    std::int64_t num = 0;
    while (num == 0)
      num = draw_int(rng, -3, 3);
    const Rational t(num, draw_int(rng, 1, 3));
    g = compose(g, exp_ad_nilpotent(lie, i, j, t));
  }
  return g;
}

std::vector<Rational> random_point(const LieData &lie, std::mt19937_64 &rng, int bound) {
  std::vector<Rational> xi(std::size_t(lie.dim()));
  for (auto &x : xi)
    x = Rational(draw_int(rng, -bound, bound));
  return xi;
}

std::vector<Rational> transform_point(const LieData &lie, const GroupElement &g,
                                      const std::vector<Rational> &xi) {
  return lie.killing() * (g.adjoint * (lie.killing_inverse() * xi));
}

} // namespace famalg
