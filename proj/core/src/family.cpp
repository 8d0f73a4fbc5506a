#include "famalg/family.hpp"

#include "famalg/errors.hpp"

namespace famalg {

// ----------------------------------------------------------- FamilyElement

FamilyElement::FamilyElement(int dim) : dim_(dim), mat_(zero_poly_matrix(dim, dim, dim)) {}

FamilyElement FamilyElement::identity(int dim) {
  FamilyElement e(dim);
  for (int a = 0; a < dim; ++a)
    e(a, a) = Poly::constant(dim, Rational(1));
  return e;
}

FamilyElement FamilyElement::scalar(int dim, const Poly &p) {
  FamilyElement e(dim);
  for (int a = 0; a < dim; ++a)
    e(a, a) = p;
  return e;
}

void FamilyElement::check_same(const FamilyElement &rhs) const {
  if (dim_ != rhs.dim_)
    throw DimensionMismatch("FamilyElement: operands have dimensions " + std::to_string(dim_) +
                            " and " + std::to_string(rhs.dim_));
}

bool FamilyElement::is_zero() const noexcept {
  for (const auto &p : mat_.data())
    if (!p.is_zero())
      return false;
  return true;
}

int FamilyElement::degree() const noexcept {
  int d = -1;
  for (const auto &p : mat_.data())
    d = std::max(d, p.degree());
  return d;
}

bool FamilyElement::is_homogeneous() const noexcept {
  int d = -1;
  for (const auto &p : mat_.data()) {
    if (p.is_zero())
      continue;
    if (!p.is_homogeneous())
      return false;
    if (d >= 0 && p.degree() != d)
      return false;
    d = p.degree();
  }
  return true;
}

std::size_t FamilyElement::term_count() const noexcept {
  std::size_t count = 0;
  for (const auto &p : mat_.data())
    count += p.size();
  return count;
}

FamilyElement &FamilyElement::operator+=(const FamilyElement &rhs) {
  check_same(rhs);
  for (std::size_t i = 0; i < mat_.data().size(); ++i)
    mat_.data()[i] += rhs.mat_.data()[i];
  return *this;
}

FamilyElement &FamilyElement::operator-=(const FamilyElement &rhs) {
  check_same(rhs);
  for (std::size_t i = 0; i < mat_.data().size(); ++i)
    mat_.data()[i] -= rhs.mat_.data()[i];
  return *this;
}

FamilyElement operator*(const FamilyElement &a, const FamilyElement &b) {
  a.check_same(b);
  FamilyElement c;
  c.dim_ = a.dim_;
  c.mat_ = multiply(a.mat_, b.mat_, a.dim_);
  return c;
}

FamilyElement FamilyElement::scaled(const Rational &c) const {
  FamilyElement e = *this;
  for (auto &p : e.mat_.data())
    p *= c;
  return e;
}

FamilyElement FamilyElement::scaled(const Poly &s) const {
  FamilyElement e(dim_);
  if (s.is_zero())
    return e;
  for (std::size_t i = 0; i < mat_.data().size(); ++i)
    if (!mat_.data()[i].is_zero())
      e.mat_.data()[i] = mat_.data()[i] * s;
  return e;
}

RationalMatrix FamilyElement::evaluate(std::span<const Rational> point) const {
  RationalMatrix m{std::size_t(dim_), std::size_t(dim_)};
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      if (!mat_(a, b).is_zero())
        m(a, b) = mat_(a, b).evaluate(point);
  return m;
}

std::vector<std::uint64_t> FamilyElement::evaluate_mod(std::span<const std::uint64_t> point,
                                                       std::uint64_t p) const {
  std::vector<std::uint64_t> out(mat_.data().size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!mat_.data()[i].is_zero())
      out[i] = mat_.data()[i].evaluate_mod(point, p);
  return out;
}

// -------------------------------------------------------------- builders

FamilyElement trace_form(const LieData &lie, const PolyMatrix &X, bool left) {
  const int n = lie.n(), dim = lie.dim();
  if (int(X.rows()) != n || int(X.cols()) != n)
    throw DimensionMismatch("trace_form: expected an n x n matrix");
  // T(b, g) = tr(pi_b pi_g X) or tr(pi_g pi_b X).
  std::vector<Poly> T(std::size_t(dim * dim), Poly(dim));
  PolyAccumulator acc(dim);
  for (int b = 0; b < dim; ++b)
    for (int g = 0; g < dim; ++g) {
      const RationalMatrix prod = left ? lie.pi(b) * lie.pi(g) : lie.pi(g) * lie.pi(b);
      bool any = false;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (!prod(r, s).is_zero() && !X(s, r).is_zero()) {
            acc.add_scaled(X(s, r), prod(r, s));
            any = true;
          }
      if (any)
        T[std::size_t(b * dim + g)] = acc.take();
    }
  const auto &kinv = lie.killing_inverse();
  FamilyElement e(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      bool any = false;
      for (int g = 0; g < dim; ++g)
        if (!kinv(a, g).is_zero() && !T[std::size_t(b * dim + g)].is_zero()) {
          acc.add_scaled(T[std::size_t(b * dim + g)], kinv(a, g));
          any = true;
        }
      if (any)
        e(a, b) = acc.take();
    }
  return e;
}

FamilyElement gen_L(const LieData &lie, const FMatrix &F) { return trace_form(lie, F.entries, true); }
FamilyElement gen_R(const LieData &lie, const FMatrix &F) { return trace_form(lie, F.entries, false); }

namespace {

// v^a = K^{ag} x_g.
std::vector<Poly> raised_coordinates(const LieData &lie) {
  const int dim = lie.dim();
  std::vector<Poly> v;
  PolyAccumulator acc(dim);
  for (int a = 0; a < dim; ++a) {
    for (int g = 0; g < dim; ++g)
      if (!lie.killing_inverse()(a, g).is_zero())
        acc.add(Monomial::variable(g), lie.killing_inverse()(a, g));
    v.push_back(acc.take());
  }
  return v;
}

} // namespace

FamilyElement gen_S(const LieData &lie) {
  const int dim = lie.dim();
  const auto v = raised_coordinates(lie);
  FamilyElement e(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      e(a, b) = v[a] * Poly::variable(dim, b);
  return e;
}

FamilyElement structure_element(const LieData &lie) {
  const int dim = lie.dim();
  FamilyElement e(dim);
  PolyAccumulator acc(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      for (int g = 0; g < dim; ++g) {
        const Rational &k = lie.killing_inverse()(a, g);
        if (k.is_zero())
          continue;
        for (const auto &t : lie.bracket(g, b))
          acc.add(Monomial::variable(t.target), k * t.coeff);
      }
      e(a, b) = acc.take();
    }
  return e;
}

FamilyElement hessian_element(const LieData &lie, const Poly &c3) {
  const int dim = lie.dim();
  std::vector<Poly> first;
  for (int a = 0; a < dim; ++a)
    first.push_back(c3.partial(a));
  FamilyElement e(dim);
  PolyAccumulator acc(dim);
  for (int a = 0; a < dim; ++a) {
    std::vector<Poly> second;
    for (int g = 0; g < dim; ++g)
      second.push_back(first[a].partial(g));
    for (int b = 0; b < dim; ++b) {
      for (int g = 0; g < dim; ++g)
        if (!lie.killing()(b, g).is_zero())
          acc.add_scaled(second[g], lie.killing()(b, g));
      e(a, b) = acc.take();
    }
  }
  return e;
}

Poly symmetrize(const LieData &lie, const FamilyElement &A) {
  const int dim = lie.dim();
  if (A.dim() != dim)
    throw DimensionMismatch("symmetrize: element dimension does not match the Lie algebra");
  const auto v = raised_coordinates(lie);
  PolyAccumulator acc(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      if (A(a, b).is_zero())
        continue;
      acc.add_product(A(a, b), Poly::variable(dim, a) * v[b]);
    }
  return acc.take();
}

FamilyElement killing_transpose(const LieData &lie, const FamilyElement &A) {
  const int dim = lie.dim();
  if (A.dim() != dim)
    throw DimensionMismatch("killing_transpose: dimension mismatch");
  const auto &K = lie.killing();
  const auto &Kinv = lie.killing_inverse();
  PolyAccumulator acc(dim);
  // B(g, b) = sum_d A(d, g) K(d, b)
  PolyMatrix B = zero_poly_matrix(dim, dim, dim);
  for (int g = 0; g < dim; ++g)
    for (int b = 0; b < dim; ++b) {
      for (int d = 0; d < dim; ++d)
        if (!K(d, b).is_zero() && !A(d, g).is_zero())
          acc.add_scaled(A(d, g), K(d, b));
      B(g, b) = acc.take();
    }
  FamilyElement out(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      for (int g = 0; g < dim; ++g)
        if (!Kinv(a, g).is_zero() && !B(g, b).is_zero())
          acc.add_scaled(B(g, b), Kinv(a, g));
      out(a, b) = acc.take();
    }
  return out;
}

FamilyElement apply_D(const LieData &lie, const Poly &c3, const FamilyElement &A) {
  const int dim = lie.dim();
  if (A.dim() != dim)
    throw DimensionMismatch("apply_D: dimension mismatch");
  // w_b = sum_a (d^a c3) K_ab
  std::vector<Poly> w;
  {
    std::vector<Poly> grad;
    for (int a = 0; a < dim; ++a)
      grad.push_back(c3.partial(a));
    PolyAccumulator acc(dim);
    for (int b = 0; b < dim; ++b) {
      for (int a = 0; a < dim; ++a)
        if (!lie.killing()(a, b).is_zero())
          acc.add_scaled(grad[a], lie.killing()(a, b));
      w.push_back(acc.take());
    }
  }
  FamilyElement out(dim);
  PolyAccumulator acc(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const Poly &p = A(a, b);
      if (p.is_zero() || p.is_constant())
        continue;
      for (int v = 0; v < dim; ++v) {
        if (w[v].is_zero())
          continue;
        const Poly dp = p.partial(v);
        if (!dp.is_zero())
          acc.add_product(w[v], dp);
      }
      out(a, b) = acc.take();
    }
  return out;
}

bool equivariance_check(const LieData &lie, const FamilyElement &A, const GroupElement &g,
                        const std::vector<Rational> &xi) {
  if (A.dim() != lie.dim() || int(xi.size()) != lie.dim() ||
      int(g.adjoint.rows()) != lie.dim())
    throw DimensionMismatch("equivariance_check: dimension mismatch");
  const auto moved = transform_point(lie, g, xi);
  const RationalMatrix lhs = A.evaluate(moved) * g.adjoint;
  const RationalMatrix rhs = g.adjoint * A.evaluate(xi);
  return lhs == rhs;
}

std::optional<Rational> proportionality(const FamilyElement &A, const FamilyElement &B) {
  if (A.dim() != B.dim())
    throw DimensionMismatch("proportionality: dimension mismatch");
  for (int a = 0; a < B.dim(); ++a)
    for (int b = 0; b < B.dim(); ++b) {
      const Poly &q = B(a, b);
      if (q.is_zero())
        continue;
      const Term &lead = q.terms().front();
      const Rational ratio = A(a, b).coefficient(lead.monomial) / lead.coeff;
      if (B.scaled(ratio) == A)
        return ratio;
      return std::nullopt;
    }
  return std::nullopt;
}

// ---------------------------------------------------------- FamilyAlgebra

FamilyAlgebra::FamilyAlgebra(int n) : lie_(LieData::build(n)), cas_(lie_) {
  if (lie_.dim() > Monomial::kMaxVars)
    throw InvalidDimension("family algebra computations support n <= 5 (sl(" +
                           std::to_string(n) + ") has " + std::to_string(lie_.dim()) +
                           " coordinates)");
  identity_ = FamilyElement::identity(lie_.dim());
  L_ = gen_L(lie_, cas_.F());
  R_ = gen_R(lie_, cas_.F());
  S_ = gen_S(lie_);
  M_ = (L_ - R_).scaled(Rational(1, 2));
  N_ = (L_ + R_).scaled(Rational(1, 2));
}

const FamilyElement &FamilyAlgebra::generator(char letter) const {
  switch (letter) {
  case 'L':
    return L_;
  case 'R':
    return R_;
  case 'S':
    return S_;
  case 'M':
    return M_;
  case 'N':
    return N_;
  default:
    throw std::invalid_argument(std::string("unknown generator '") + letter + "'");
  }
}

const FamilyElement &FamilyAlgebra::word(std::string_view w) const {
  if (w.empty())
    return identity_;
  if (w.size() == 1)
    return generator(w[0]);
  {
    std::lock_guard lock(mutex_);
    auto it = words_.find(w);
    if (it != words_.end())
      return *it->second;
  }
  const FamilyElement &prefix = word(w.substr(0, w.size() - 1));
  auto product = std::make_shared<const FamilyElement>(prefix * generator(w.back()));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = words_.emplace(std::string(w), std::move(product));
  return *it->second;
}

FamilyElement FamilyAlgebra::power(const FamilyElement &A, int k) const {
  if (k < 0)
    throw std::domain_error("FamilyAlgebra::power: negative exponent");
  FamilyElement result = identity_;
  for (int i = 0; i < k; ++i)
    result = result * A;
  return result;
}

FamilyElement FamilyAlgebra::composition_sum(int k, Side side, CorrectionRule rule) const {
  const int n = lie_.n();
  const int dim = lie_.dim();
  // Collect the invariant coefficient of each (lambda_1, lambda_2) head.
  std::map<std::pair<int, int>, PolyAccumulator> heads;
  for (const auto &lambda : compositions(k, 2)) {
    if (rule == CorrectionRule::TraceForm && lambda.size() > 3)
      continue;
    std::vector<int> tail(lambda.parts.begin() + 2, lambda.parts.end());
    Poly coeff = cas_.product(tail);
    if (coeff.is_zero())
      continue;
    Rational scale = Rational(1, n);
    for (std::size_t i = 0; i < tail.size(); ++i)
      scale /= Rational(n);
    auto key = std::make_pair(lambda.parts[0] - 1, lambda.parts[1] - 1);
    auto it = heads.try_emplace(key, dim).first;
    it->second.add_scaled(coeff, scale);
  }
  const char before = side == Side::Natural ? 'N' : 'L';
  const char after = side == Side::Natural ? 'N' : 'R';
  FamilyElement sum(dim);
  for (auto &[key, acc] : heads) {
    Poly coeff = acc.take();
    if (coeff.is_zero())
      continue;
    const std::string w = std::string(std::size_t(key.first), before) + "S" +
                          std::string(std::size_t(key.second), after);
    sum += word(w).scaled(coeff);
  }
  return sum;
}

FamilyElement FamilyAlgebra::element_Lk(int k, CorrectionRule rule) const {
  if (k < 0)
    throw std::domain_error("element_Lk: k must be non-negative");
  return word(std::string(std::size_t(k), 'L')) + composition_sum(k, Side::Left, rule);
}

FamilyElement FamilyAlgebra::element_Rk(int k, CorrectionRule rule) const {
  if (k < 0)
    throw std::domain_error("element_Rk: k must be non-negative");
  return word(std::string(std::size_t(k), 'R')) + composition_sum(k, Side::Right, rule);
}

FamilyElement FamilyAlgebra::element_Nk(int k, CorrectionRule rule) const {
  if (k < 0)
    throw std::domain_error("element_Nk: k must be non-negative");
  FamilyElement sum(lie_.dim());
  Rational binom(1); // C(k, 2j)
  for (int j = 0; 2 * j <= k; ++j) {
    if (j > 0)
      binom = binom * Rational(k - 2 * j + 2) * Rational(k - 2 * j + 1) /
              (Rational(2 * j - 1) * Rational(2 * j));
    const std::string w = std::string(std::size_t(k - 2 * j), 'N') + std::string(std::size_t(2 * j), 'M');
    sum += word(w).scaled(binom);
  }
  return sum + composition_sum(k, Side::Natural, rule);
}

FamilyElement FamilyAlgebra::trace_form_Lk(int k) const {
  return trace_form(lie_, cas_.power(k), true);
}

FamilyElement FamilyAlgebra::trace_form_Rk(int k) const {
  return trace_form(lie_, cas_.power(k), false);
}

} // namespace famalg
