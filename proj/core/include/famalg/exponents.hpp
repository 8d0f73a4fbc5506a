#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "famalg/qpoly.hpp"

namespace famalg {

using Partition = std::vector<int>;
/// A semistandard tableau stored row by row (English notation).
using Tableau = std::vector<std::vector<int>>;

/// Weights of the adjoint representation of sl(n) in epsilon coordinates
/// (length n, entries summing to zero) with their multiplicities.
std::map<std::vector<int>, int> weight_multiplicities(int n);

/// sum over weights of multiplicity^2.
int family_dimension(int n);

/// Dominant weight in fundamental-weight coordinates a_1 .. a_{n-1}.
struct DominantWeight {
  std::vector<int> a;

  /// e.g. "0", "w1+w3", "2w1+w2", "2w2".
  [[nodiscard]] std::string label() const;
  friend bool operator==(const DominantWeight &, const DominantWeight &) = default;
};

/// lambda_i = sum_{j >= i} a_j (trailing zeros dropped) and content mu = (k^n)
/// with k = |lambda| / n. Throws std::invalid_argument if |lambda| is not a
/// multiple of n (the weight is not in the root lattice, so it never occurs in
/// a tensor power of the adjoint representation).
std::pair<Partition, Partition> weight_to_partition(const DominantWeight &w, int n);

/// All semistandard tableaux of shape lambda and content mu.
std::vector<Tableau> semistandard_tableaux(const Partition &lambda, const Partition &mu);

/// Rows from bottom to top, each read left to right.
std::vector<int> reading_word(const Tableau &t);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
int charge(std::vector<int> word);

/// sum over SSYT of shape lambda and content mu of q^{charge}; zero when the
/// sizes differ or no tableau exists.
QPoly kostka(const Partition &lambda, const Partition &mu);

struct ExponentRow {
  DominantWeight weight;
  std::string label;
  QPoly closed_form;
};

/// Closed-form q-multiplicities of the isotypic components of g (x) g in the
/// harmonic polynomials, for n >= 4 (throws UnsupportedRegime otherwise).
std::vector<ExponentRow> exponent_table(int n);

struct ExponentCheck {
  ExponentRow row;
  QPoly computed; ///< charge-statistic Kostka polynomial
  bool matches = false;
};

struct ExponentReport {
  int n = 0;
  std::vector<ExponentCheck> rows;
  /// exponents(2w1+2w_{n-1}) == exponents(w2+w_{n-2}) + q^{n-1}[n]_q
  bool shift_law = false;
  /// sum of all rows at q = 1, with the adjoint row counted twice
  std::int64_t total_at_one = 0;
  int family_dimension = 0;

  [[nodiscard]] bool all_rows_match() const;
  [[nodiscard]] bool ok() const { return all_rows_match() && shift_law && total_at_one == family_dimension; }
};

ExponentReport verify_exponent_table(int n);

} // namespace famalg
