#include "famalg/qpoly.hpp"

#include <stdexcept>

namespace famalg {

QPoly QPoly::monomial(int degree, std::int64_t c) {
  if (degree < 0)
    throw std::domain_error("QPoly: negative degree");
  QPoly p;
  p.add(degree, c);
  return p;
}

void QPoly::add(int degree, std::int64_t c) {
  if (c == 0)
    return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (!inserted && (it->second += c) == 0)
    coeffs_.erase(it);
}

std::int64_t QPoly::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

int QPoly::degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

bool QPoly::nonnegative() const noexcept {
  for (const auto &[d, c] : coeffs_)
    if (c < 0)
      return false;
  return true;
}

std::int64_t QPoly::at_one() const noexcept {
  std::int64_t s = 0;
  for (const auto &[d, c] : coeffs_)
    s += c;
  return s;
}

QPoly &QPoly::operator+=(const QPoly &rhs) {
  for (const auto &[d, c] : rhs.coeffs_)
    add(d, c);
  return *this;
}

QPoly &QPoly::operator-=(const QPoly &rhs) {
  for (const auto &[d, c] : rhs.coeffs_)
    add(d, -c);
  return *this;
}

QPoly operator*(const QPoly &a, const QPoly &b) {
  QPoly out;
  for (const auto &[da, ca] : a.coeffs_)
    for (const auto &[db, cb] : b.coeffs_)
      out.add(da + db, ca * cb);
  return out;
}

QPoly QPoly::shifted(int k) const {
  QPoly out;
  for (const auto &[d, c] : coeffs_) {
    if (d + k < 0)
      throw std::domain_error("QPoly::shifted: negative degree");
    out.coeffs_.emplace(d + k, c);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::string s;
  for (const auto &[d, c] : coeffs_) {
    std::int64_t mag = c;
    if (c < 0) {
      s += '-';
      mag = -c;
    } else if (!s.empty()) {
      s += '+';
    }
    if (d == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1)
      s += std::to_string(mag);
    s += 'q';
    if (d != 1)
      s += '^' + std::to_string(d);
  }
  return s;
}

QPoly exact_divide(const QPoly &a, const QPoly &b) {
  if (b.is_zero())
    throw std::domain_error("exact_divide: division by zero");
  const int db = b.degree();
  const std::int64_t lead = b.coefficient(db);
  if (lead != 1 && lead != -1)
    throw std::domain_error("exact_divide: divisor is not monic up to sign");
  QPoly rem = a;
  QPoly quotient;
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const std::int64_t c = rem.coefficient(rem.degree()) * lead;
    const QPoly term = QPoly::monomial(shift, c);
    quotient += term;
    rem -= term * b;
  }
  if (!rem.is_zero())
    throw std::domain_error("exact_divide: remainder " + rem.to_string());
  return quotient;
}

QPoly q_integer(int m) {
  if (m < 0)
    throw std::domain_error("q_integer: negative argument");
  QPoly p;
  for (int i = 0; i < m; ++i)
    p += QPoly::monomial(i);
  return p;
}

QPoly q_binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m)
    throw std::domain_error("q_binomial: need 0 <= k <= m");
  QPoly result = QPoly::constant(1);
  for (int i = 1; i <= k; ++i)
    result = result * (QPoly::constant(1) - QPoly::monomial(m - k + i));
  for (int i = 1; i <= k; ++i)
    result = exact_divide(result, QPoly::constant(1) - QPoly::monomial(i));
  return result;
}

} // namespace famalg
