#include "famalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace famalg {

// ------------------------------------------------------------ dense basics

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Rational(1);
  return m;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("RationalMatrix: product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("RationalMatrix: sum shape mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i)
    c.data()[i] += b.data()[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("RationalMatrix: difference shape mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i)
    c.data()[i] -= b.data()[i];
  return c;
}

RationalMatrix operator*(const Rational &s, const RationalMatrix &a) {
  RationalMatrix c = a;
  for (auto &x : c.data())
    x *= s;
  return c;
}

std::vector<Rational> operator*(const RationalMatrix &a, const std::vector<Rational> &v) {
  if (a.cols() != v.size())
    throw DimensionMismatch("RationalMatrix: vector length mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero())
        out[i] += a(i, j) * v[j];
  return out;
}

RationalMatrix transpose(const RationalMatrix &a) {
  RationalMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      t(j, i) = a(i, j);
  return t;
}

Rational trace(const RationalMatrix &a) {
  Rational t;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    t += a(i, i);
  return t;
}

bool is_zero(const RationalMatrix &a) {
  for (const auto &x : a.data())
    if (!x.is_zero())
      return false;
  return true;
}

RationalMatrix inverse(const RationalMatrix &a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw DimensionMismatch("inverse: matrix is not square");
  RationalMatrix work = a;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      throw std::domain_error("inverse: matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational scale = Rational(1) / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero())
        continue;
      const Rational f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero())
          work(r, j) -= f * work(col, j);
        if (!inv(col, j).is_zero())
          inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix &a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw DimensionMismatch("determinant: matrix is not square");
  RationalMatrix work = a;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero())
        continue;
      const Rational f = work(r, col) / work(col, col);
      for (std::size_t j = col; j < n; ++j)
        work(r, j) -= f * work(col, j);
    }
  }
  return det;
}

// ------------------------------------------------------------------- rank

std::size_t exact_rank(const RationalMatrix &a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      if (!a(i, j).is_zero())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      if (!a(i, j).is_zero())
        m[i][j] = a(i, j).numerator() * (lcm / a(i, j).denominator());
  }

  // Bareiss: after step k every entry below/right of the pivot is the
  // (k+1)x(k+1) minor, and the division by the previous pivot is exact.
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[r][j] = m[rank][col] * m[r][j] - m[r][col] * m[rank][j];
        mpz_divexact(m[r][j].get_mpz_t(), m[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] % p == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = powmod(m[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] % p == 0)
        continue;
      const std::uint64_t f = mulmod(m[r][col], inv, p);
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t sub = mulmod(f, m[rank][j], p);
        m[r][j] = (m[r][j] % p + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix &a,
                                                 const std::vector<Rational> &b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows)
    throw DimensionMismatch("solve_exact: right-hand side length mismatch");
  RationalMatrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && aug(pivot, col).is_zero())
      ++pivot;
    if (pivot == rows)
      continue;
    for (std::size_t j = 0; j <= cols; ++j)
      std::swap(aug(pivot, j), aug(rank, j));
    const Rational scale = Rational(1) / aug(rank, col);
    for (std::size_t j = col; j <= cols; ++j)
      aug(rank, j) *= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || aug(r, col).is_zero())
        continue;
      const Rational f = aug(r, col);
      for (std::size_t j = col; j <= cols; ++j)
        if (!aug(rank, j).is_zero())
          aug(r, j) -= f * aug(rank, j);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!aug(r, cols).is_zero())
      return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < rank; ++r)
    x[pivot_cols[r]] = aug(r, cols);
  return x;
}

// ------------------------------------------------------------- primes

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t((static_cast<wide_uint>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0)
      return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2)
    return 2;
  if ((n & 1) == 0)
    ++n;
  while (!is_prime(n))
    n += 2;
  return n;
}

} // namespace famalg
