#include "famalg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "famalg/errors.hpp"

namespace famalg {

namespace {

bool term_greater(const Term &a, const Term &b) { return b.monomial < a.monomial; }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t((static_cast<wide_uint>(a) * b) % p);
}

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw DimensionMismatch("Poly: variable count " + std::to_string(nvars) +
                            " outside supported range 0.." +
                            std::to_string(Monomial::kMaxVars));
}

} // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(int index, int power) {
  if (index < 0 || index >= kMaxVars)
    throw DimensionMismatch("Monomial: variable index out of range");
  if (power < 0 || power > 255)
    throw std::overflow_error("Monomial: exponent out of range");
  const int old = exponent(index);
  auto &w = words_[index >> 3];
  w &= ~(std::uint64_t(0xff) << shift(index));
  w |= std::uint64_t(power) << shift(index);
  degree_ = std::uint32_t(int(degree_) - old + power);
  if (degree_ > 255)
    throw std::overflow_error("Monomial: total degree exceeds 255");
}

Monomial Monomial::lowered(int index) const noexcept {
  Monomial m = *this;
  m.words_[index >> 3] -= std::uint64_t(1) << shift(index);
  --m.degree_;
  return m;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial m;
  m.degree_ = a.degree_ + b.degree_;
  if (m.degree_ > 255)
    throw std::overflow_error("Monomial: total degree exceeds 255");
  for (std::size_t i = 0; i < m.words_.size(); ++i)
    m.words_[i] = a.words_[i] + b.words_[i];
  return m;
}

// -------------------------------------------------------- PolyAccumulator

PolyAccumulator::PolyAccumulator(int nvars) : nvars_(nvars) {
  slots_.assign(64, 0);
  mask_ = slots_.size() - 1;
}

std::size_t PolyAccumulator::find_slot(const Monomial &m) const {
  std::size_t i = std::size_t(m.hash()) & mask_;
  while (slots_[i] != 0 && entries_[slots_[i] - 1].monomial != m)
    i = (i + 1) & mask_;
  return i;
}

void PolyAccumulator::grow() {
  slots_.assign(slots_.size() * 2, 0);
  mask_ = slots_.size() - 1;
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    std::size_t i = std::size_t(entries_[e].monomial.hash()) & mask_;
    while (slots_[i] != 0)
      i = (i + 1) & mask_;
    slots_[i] = std::uint32_t(e + 1);
  }
}

void PolyAccumulator::add(const Monomial &m, const Rational &c) {
  std::size_t i = find_slot(m);
  if (slots_[i] != 0) {
    entries_[slots_[i] - 1].coeff += c;
    return;
  }
  entries_.push_back(Term{m, c});
  slots_[i] = std::uint32_t(entries_.size());
  if (entries_.size() * 2 > slots_.size())
    grow();
}

void PolyAccumulator::add(const Poly &p) {
  for (const auto &t : p.terms_)
    add(t.monomial, t.coeff);
}

void PolyAccumulator::add_scaled(const Poly &p, const Rational &c) {
  if (c.is_zero())
    return;
  for (const auto &t : p.terms_)
    add(t.monomial, t.coeff * c);
}

void PolyAccumulator::add_product(const Poly &a, const Poly &b) {
  if (a.nvars_ != nvars_ || b.nvars_ != nvars_)
    throw DimensionMismatch("PolyAccumulator: variable count mismatch");
  if (a.terms_.size() < b.terms_.size()) {
    add_product(b, a);
    return;
  }
  for (const auto &tb : b.terms_)
    for (const auto &ta : a.terms_)
      add(ta.monomial * tb.monomial, ta.coeff * tb.coeff);
}

Poly PolyAccumulator::take() {
  Poly out(nvars_);
  out.terms_.reserve(entries_.size());
  for (auto &e : entries_) {
    if (!e.coeff.is_zero())
      out.terms_.push_back(std::move(e));
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  if (entries_.size() * 8 < slots_.size()) {
    for (const auto &e : entries_) {
      // Entries may have been moved-from; their monomials are intact.
      std::size_t i = std::size_t(e.monomial.hash()) & mask_;
      while (slots_[i] != 0) {
        slots_[i] = 0;
        i = (i + 1) & mask_;
      }
    }
  } else {
    std::fill(slots_.begin(), slots_.end(), 0);
  }
  entries_.clear();
  return out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly Poly::constant(int nvars, const Rational &value) {
  Poly p(nvars);
  if (!value.is_zero())
    p.terms_.push_back(Term{Monomial{}, value});
  return p;
}

Poly Poly::variable(int nvars, int index, const Rational &coeff) {
  if (index < 0 || index >= nvars)
    throw DimensionMismatch("Poly::variable: index out of range");
  Poly p(nvars);
  if (!coeff.is_zero())
    p.terms_.push_back(Term{Monomial::variable(index), coeff});
  return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
  PolyAccumulator acc(nvars);
  for (auto &t : terms)
    acc.add(t.monomial, t.coeff);
  return acc.take();
}

void Poly::check_same_ring(const Poly &rhs) const {
  if (nvars_ != rhs.nvars_)
    throw DimensionMismatch("Poly: operands have " + std::to_string(nvars_) + " and " +
                            std::to_string(rhs.nvars_) + " variables");
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto &t : terms_)
    d = std::max(d, t.monomial.degree());
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

Rational Poly::coefficient(const Monomial &m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term &t, const Monomial &key) { return key < t.monomial; });
  if (it != terms_.end() && it->monomial == m)
    return it->coeff;
  return Rational(0);
}

Poly &Poly::add_scaled(const Poly &rhs, bool negate) {
  check_same_ring(rhs);
  if (rhs.terms_.empty())
    return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && b->monomial < a->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || a->monomial < b->monomial) {
      merged.push_back(Term{b->monomial, negate ? -b->coeff : b->coeff});
      ++b;
    } else {
      Rational c = std::move(a->coeff);
      if (negate)
        c -= b->coeff;
      else
        c += b->coeff;
      if (!c.is_zero())
        merged.push_back(Term{a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly &Poly::operator+=(const Poly &rhs) { return add_scaled(rhs, false); }
Poly &Poly::operator-=(const Poly &rhs) { return add_scaled(rhs, true); }

Poly operator*(const Poly &lhs, const Poly &rhs) {
  lhs.check_same_ring(rhs);
  if (lhs.is_zero() || rhs.is_zero())
    return Poly(lhs.nvars_);
  if (rhs.is_constant())
    return lhs * rhs.terms_[0].coeff;
  if (lhs.is_constant())
    return rhs * lhs.terms_[0].coeff;
  PolyAccumulator acc(lhs.nvars_);
  acc.add_product(lhs, rhs);
  return acc.take();
}

Poly &Poly::operator*=(const Poly &rhs) {
  *this = *this * rhs;
  return *this;
}

Poly &Poly::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one())
    return *this;
  for (auto &t : terms_)
    t.coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto &t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0)
    throw std::domain_error("Poly::pow: negative exponent");
  Poly result = Poly::constant(nvars_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1)
      result = result * base;
    exponent >>= 1;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

Poly Poly::partial(int index) const {
  if (index < 0 || index >= nvars_)
    throw DimensionMismatch("Poly::partial: variable index out of range");
  // Lowering one exponent can reorder terms, so go through the accumulator.
  PolyAccumulator acc(nvars_);
  for (const auto &t : terms_) {
    const int e = t.monomial.exponent(index);
    if (e > 0)
      acc.add(t.monomial.lowered(index), t.coeff * Rational(e));
  }
  return acc.take();
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (int(point.size()) != nvars_)
    throw DimensionMismatch("Poly::evaluate: point has " + std::to_string(point.size()) +
                            " coordinates, expected " + std::to_string(nvars_));
  const int maxdeg = std::max(degree(), 0);
  std::vector<std::vector<Rational>> powers(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    powers[v].reserve(maxdeg + 1);
    powers[v].emplace_back(1);
    for (int e = 1; e <= maxdeg; ++e)
      powers[v].push_back(powers[v].back() * point[v]);
  }
  Rational sum;
  for (const auto &t : terms_) {
    Rational prod = t.coeff;
    for (int v = 0; v < nvars_ && !prod.is_zero(); ++v) {
      const int e = t.monomial.exponent(v);
      if (e != 0)
        prod *= powers[v][e];
    }
    sum += prod;
  }
  return sum;
}

std::uint64_t Poly::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const {
  if (int(point.size()) != nvars_)
    throw DimensionMismatch("Poly::evaluate_mod: point dimension mismatch");
  std::uint64_t sum = 0;
  for (const auto &t : terms_) {
    std::uint64_t prod = t.coeff.mod(p);
    for (int v = 0; v < nvars_; ++v) {
      for (int e = t.monomial.exponent(v); e > 0; --e)
        prod = mulmod(prod, point[v] % p, p);
    }
    sum = (sum + prod) % p;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    Rational c = t.coeff;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative)
        os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative)
      c = -c;
    const bool unit = c.is_one();
    bool wrote = false;
    if (!unit || t.monomial.degree() == 0) {
      os << c;
      wrote = true;
    }
    for (int v = 0; v < nvars_; ++v) {
      const int e = t.monomial.exponent(v);
      if (e == 0)
        continue;
      if (wrote)
        os << "*";
      os << "x" << (v + 1);
      if (e > 1)
        os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

} // namespace famalg
