#include "famalg/independence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "famalg/errors.hpp"
#include "famalg/linalg.hpp"

namespace famalg {

namespace {

std::string power_label(char g, int e) {
  if (e == 0)
    return {};
  if (e == 1)
    return std::string(1, g);
  return std::string(1, g) + "^" + std::to_string(e);
}

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

ModMatrix mod_multiply(const ModMatrix &a, const ModMatrix &b, std::uint64_t p) {
  const std::size_t n = a.size();
  ModMatrix c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[k][j] != 0)
          c[i][j] = (c[i][j] + mulmod(a[i][k], b[k][j], p)) % p;
    }
  return c;
}

std::uint64_t reduce(const Rational &x, std::uint64_t p) { return x.mod(p); }

} // namespace

std::string MonomialIndex::word() const {
  return std::string(std::size_t(k), 'L') + std::string(std::size_t(m), 'S') +
         std::string(std::size_t(l), 'R');
}

std::string MonomialIndex::label() const {
  std::string s = power_label('L', k) + power_label('S', m) + power_label('R', l);
  return s.empty() ? "1" : s;
}

int expected_basis_size(int n) { return 2 * n * n - 3 * n + 1; }

std::vector<MonomialIndex> monomial_basis(int n, Transversal rule) {
  if (n < 2)
    throw InvalidDimension("monomial_basis requires n >= 2, got " + std::to_string(n));

  auto dropped = [&](int k, int l) {
    const int d = k + l;
    if (d < n - 1)
      return false;
    if (rule == Transversal::Standard && n == 4) {
      static const std::pair<int, int> dropped[] = {{0, 3}, {2, 2}, {2, 3}, {3, 3}};
      return std::find(std::begin(dropped), std::end(dropped), std::make_pair(k, l)) !=
             std::end(dropped);
    }
    return k == n - 1;
  };

  std::vector<MonomialIndex> out;
  for (int k = 0; k <= n - 1; ++k)
    for (int l = 0; l <= n - 1; ++l)
      if (!dropped(k, l))
        out.push_back({k, 0, l});
  for (int k = 0; k <= n - 2; ++k)
    for (int l = 0; l <= n - 2; ++l)
      out.push_back({k, 1, l});

  std::sort(out.begin(), out.end(), [](const MonomialIndex &a, const MonomialIndex &b) {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    if (a.m != b.m)
      return a.m < b.m;
    return a.k > b.k;
  });
  return out;
}

RankReport rank_certificate(const FamilyAlgebra &A, const std::vector<MonomialIndex> &monomials,
                            int num_points, std::uint64_t seed) {
  if (num_points < 1)
    throw std::invalid_argument("rank_certificate: num_points must be at least 1");
  const LieData &lie = A.lie();
  const std::size_t dim = std::size_t(lie.dim());

  RankReport report;
  report.n = A.n();
  report.expected = monomials.size();
  report.points = num_points;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  report.prime = next_prime((std::uint64_t(1) << 61) | (rng() >> 3));
  const std::uint64_t p = report.prime;

  for (int pt = 0; pt < num_points; ++pt) {
    const std::vector<Rational> xi = random_point(lie, rng);

    // Evaluation is a ring homomorphism, so each monomial is the product of
    // the evaluated generators.
    std::map<char, ModMatrix> gen_mod;
    std::map<char, RationalMatrix> gen_exact;
    std::vector<std::uint64_t> xi_mod;
    for (const auto &x : xi)
      xi_mod.push_back(reduce(x, p));
    for (char g : {'L', 'S', 'R'}) {
      const auto flat = A.generator(g).evaluate_mod(xi_mod, p);
      ModMatrix m(dim, std::vector<std::uint64_t>(dim));
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          m[i][j] = flat[i * dim + j];
      gen_mod.emplace(g, std::move(m));
    }

    ModMatrix rows;
    for (const auto &mono : monomials) {
      ModMatrix value(dim, std::vector<std::uint64_t>(dim, 0));
      for (std::size_t i = 0; i < dim; ++i)
        value[i][i] = 1;
      for (char g : mono.word())
        value = mod_multiply(value, gen_mod.at(g), p);
      std::vector<std::uint64_t> flat;
      flat.reserve(dim * dim);
      for (const auto &row : value)
        flat.insert(flat.end(), row.begin(), row.end());
      rows.push_back(std::move(flat));
    }
    std::size_t rank = modular_rank(rows, p);

    if (rank < monomials.size()) {
      report.exact = true;
      for (char g : {'L', 'S', 'R'})
        gen_exact.emplace(g, A.generator(g).evaluate(xi));
      RationalMatrix stacked(monomials.size(), dim * dim);
      for (std::size_t r = 0; r < monomials.size(); ++r) {
        RationalMatrix value = identity_matrix(dim);
        for (char g : monomials[r].word())
          value = value * gen_exact.at(g);
        for (std::size_t e = 0; e < dim * dim; ++e)
          stacked(r, e) = value.data()[e];
      }
      rank = exact_rank(stacked);
    }
    report.per_point.push_back(rank);
    report.rank = std::max(report.rank, rank);
  }
  return report;
}

std::vector<std::vector<int>> bounded_partitions(int total, int min_part, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto &&self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(cap, remaining); part >= min_part; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  if (total >= 0 && min_part >= 1)
    rec(rec, total, max_part);
  return out;
}

CasimirWitness casimir_witness(const FamilyAlgebra &A, int m) {
  const int n = A.n();
  if (m < 0 || m >= n - 1)
    throw std::invalid_argument("casimir_witness: need 0 <= m < n - 1 (got m = " +
                                std::to_string(m) + ", n = " + std::to_string(n) + ")");
  CasimirWitness w;
  w.n = n;
  w.m = m;
  w.symmetrized = A.symmetrize(A.power(A.L() + A.R(), m));

  const auto parts = bounded_partitions(m + 2, 2, m + 2);
  std::vector<Poly> products;
  for (const auto &p : parts)
    products.push_back(A.casimirs().product(p));

  std::map<Monomial, std::size_t> row_of;
  auto collect = [&](const Poly &q) {
    for (const auto &t : q.terms())
      row_of.try_emplace(t.monomial, row_of.size());
  };
  collect(w.symmetrized);
  for (const auto &q : products)
    collect(q);

  RationalMatrix system(row_of.size(), parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (const auto &t : products[c].terms())
      system(row_of.at(t.monomial), c) = t.coeff;
  std::vector<Rational> rhs(row_of.size());
  for (const auto &t : w.symmetrized.terms())
    rhs[row_of.at(t.monomial)] = t.coeff;

  const auto solution = solve_exact(system, rhs);
  if (!solution)
    return w;
  w.solved = true;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    w.expansion.emplace_back(parts[c], (*solution)[c]);
    if (parts[c].size() == 1)
      w.top_coefficient = (*solution)[c];
  }
  return w;
}

} // namespace famalg
