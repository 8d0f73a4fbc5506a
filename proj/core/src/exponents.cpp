#include "famalg/exponents.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "famalg/errors.hpp"

namespace famalg {

std::map<std::vector<int>, int> weight_multiplicities(int n) {
  if (n < 2)
    throw InvalidDimension("weight_multiplicities requires n >= 2, got " + std::to_string(n));
  std::map<std::vector<int>, int> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        std::vector<int> w(std::size_t(n), 0);
        w[std::size_t(i)] = 1;
        w[std::size_t(j)] = -1;
        out[w] += 1;
      }
  out[std::vector<int>(std::size_t(n), 0)] += n - 1;
  return out;
}

int family_dimension(int n) {
  int sum = 0;
  for (const auto &[w, m] : weight_multiplicities(n))
    sum += m * m;
  return sum;
}

std::string DominantWeight::label() const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    if (!s.empty())
      s += '+';
    if (a[i] != 1)
      s += std::to_string(a[i]);
    s += 'w' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::pair<Partition, Partition> weight_to_partition(const DominantWeight &w, int n) {
  if (int(w.a.size()) != n - 1)
    throw std::invalid_argument("weight_to_partition: expected " + std::to_string(n - 1) +
                                " coefficients");
  Partition lambda(std::size_t(n), 0);
  for (int i = n - 2; i >= 0; --i) {
    if (w.a[std::size_t(i)] < 0)
      throw std::invalid_argument("weight_to_partition: weight is not dominant");
    lambda[std::size_t(i)] = lambda[std::size_t(i) + 1] + w.a[std::size_t(i)];
  }
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (size % n != 0)
    throw std::invalid_argument("weight_to_partition: " + w.label() +
                                " is not in the root lattice of sl(" + std::to_string(n) + ")");
  while (!lambda.empty() && lambda.back() == 0)
    lambda.pop_back();
  const int k = size / n;
  Partition mu = k == 0 ? Partition{} : Partition(std::size_t(n), k);
  return {lambda, mu};
}

std::vector<Tableau> semistandard_tableaux(const Partition &lambda, const Partition &mu) {
  std::vector<Tableau> out;
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (size != std::accumulate(mu.begin(), mu.end(), 0))
    return out;
  const std::size_t rows = lambda.size();

  // Letter v+1 fills a horizontal strip of size mu[v] on top of the shape
  // occupied by smaller letters.
  std::vector<int> shape(rows, 0);
  Tableau t(rows);
  for (std::size_t r = 0; r < rows; ++r)
    t[r].assign(std::size_t(lambda[r]), 0);

  auto place = [&](auto &&self, std::size_t letter, std::size_t row, int remaining,
                   const std::vector<int> &before) -> void {
    if (row == rows) {
      if (remaining != 0)
        return;
      if (letter + 1 == mu.size()) {
        out.push_back(t);
        return;
      }
      const std::vector<int> next_before = shape;
      self(self, letter + 1, 0, mu[letter + 1], next_before);
      return;
    }
    // New length of this row: at most lambda[row], and at most the old
    // length of the row above (horizontal strip).
    const int cap = row == 0 ? lambda[row] : std::min(lambda[row], before[row - 1]);
    const int start = before[row];
    for (int add = std::min(remaining, cap - start); add >= 0; --add) {
      for (int c = start; c < start + add; ++c)
        t[row][std::size_t(c)] = int(letter) + 1;
      shape[row] = start + add;
      self(self, letter, row + 1, remaining - add, before);
      shape[row] = start;
    }
  };

  if (mu.empty()) {
    if (size == 0)
      out.push_back(Tableau{});
    return out;
  }
  const std::vector<int> empty_shape = shape;
  place(place, 0, 0, mu[0], empty_shape);
  return out;
}

std::vector<int> reading_word(const Tableau &t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge(std::vector<int> word) {
  int total = 0;
  while (!word.empty()) {
    const int top = *std::max_element(word.begin(), word.end());
    std::vector<bool> used(word.size(), false);
    // Scan leftwards from the right end for 1, then 2, ..., cyclically; each
    // wrap-around means r+1 sits to the right of r and raises the index.
    std::size_t pos = word.size();
    int index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      bool found = false;
      for (std::size_t step = 0; step < word.size(); ++step) {
        if (pos == 0) {
          pos = word.size();
          if (letter > 1)
            ++index;
        }
        --pos;
        if (!used[pos] && word[pos] == letter) {
          found = true;
          break;
        }
      }
      if (!found)
        throw std::invalid_argument("charge: word content is not a partition");
      used[pos] = true;
      total += index;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (!used[i])
        rest.push_back(word[i]);
    word = std::move(rest);
  }
  return total;
}

QPoly kostka(const Partition &lambda, const Partition &mu) {
  QPoly out;
  for (const auto &t : semistandard_tableaux(lambda, mu))
    out += QPoly::monomial(charge(reading_word(t)));
  return out;
}

namespace {

DominantWeight weight_of(int n, std::initializer_list<std::pair<int, int>> entries) {
  DominantWeight w{std::vector<int>(std::size_t(n - 1), 0)};
  for (auto [index, coeff] : entries)
    w.a[std::size_t(index - 1)] += coeff;
  return w;
}

} // namespace

std::vector<ExponentRow> exponent_table(int n) {
  if (n < 4)
    throw UnsupportedRegime("exponent_table requires n >= 4; for n = 2, 3 the decomposition of g (x) g "
                            "differs (got n = " + std::to_string(n) + ")");
  const QPoly b = q_binomial(n - 1, 2);
  std::vector<ExponentRow> rows;
  auto add = [&](DominantWeight w, QPoly p) {
    ExponentRow r{w, w.label(), std::move(p)};
    rows.push_back(std::move(r));
  };
  add(weight_of(n, {}), QPoly::constant(1));
  add(weight_of(n, {{1, 1}, {n - 1, 1}}), q_integer(n - 1).shifted(1));
  add(weight_of(n, {{1, 2}, {n - 2, 1}}), b.shifted(3));
  add(weight_of(n, {{2, 1}, {n - 1, 2}}), b.shifted(3));
  add(weight_of(n, {{2, 1}, {n - 2, 1}}), b.shifted(2) - QPoly::monomial(n - 1));
  add(weight_of(n, {{1, 2}, {n - 1, 2}}), q_binomial(n, 2).shifted(2));
  return rows;
}

bool ExponentReport::all_rows_match() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ExponentCheck &c) { return c.matches; });
}

ExponentReport verify_exponent_table(int n) {
  ExponentReport report;
  report.n = n;
  for (auto &row : exponent_table(n)) {
    const auto [lambda, mu] = weight_to_partition(row.weight, n);
    ExponentCheck c;
    c.computed = kostka(lambda, mu);
    c.matches = c.computed == row.closed_form;
    c.row = std::move(row);
    report.rows.push_back(std::move(c));
  }
  // rows: 0, adjoint, two duals, w2+w_{n-2}, 2w1+2w_{n-1}
  const QPoly &small = report.rows[4].computed;
  const QPoly &large = report.rows[5].computed;
  report.shift_law = large == small + q_integer(n).shifted(n - 1);
  for (const auto &c : report.rows)
    report.total_at_one += c.computed.at_one();
  report.total_at_one += report.rows[1].computed.at_one();
  report.family_dimension = family_dimension(n);
  return report;
}

} // namespace famalg
