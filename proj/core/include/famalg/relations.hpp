#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famalg/family.hpp"

namespace famalg {

enum class RelationStatus { Holds, Fails, NotApplicable };

std::string_view to_string(RelationStatus s) noexcept;

struct RelationResult {
  std::string id;
  int n = 0;
  RelationStatus status = RelationStatus::NotApplicable;
  int degree = 0;
  std::optional<double> wall_time_ms;
  std::string detail; ///< optional human-readable remark (e.g. a ratio)
};

struct RelationReport {
  int n = 0;
  std::vector<RelationResult> results; ///< sorted by id

  [[nodiscard]] std::size_t count(RelationStatus s) const noexcept;
  [[nodiscard]] bool all_hold() const noexcept { return count(RelationStatus::Fails) == 0; }
};

/// Outcome of a single check before bookkeeping.
struct CheckOutcome {
  RelationStatus status;
  std::string detail;
};

/// A named identity in the family algebra. `degree` is the polynomial degree
/// of the identity with L, R, M, N of degree 1 and S of degree 2.
struct RelationCheck {
  std::string id;
  int degree = 0;
  std::function<CheckOutcome(const FamilyAlgebra &)> run;
};

/// Holds iff `difference` is the zero element.
CheckOutcome expect_zero(const FamilyElement &difference);

/// The defining relations for the generators L, R, S, plus the trace-form
/// identities for L_k and R_k (k <= n+1), Killing transposes and the D image
/// of the power-sum relation.
std::vector<RelationCheck> relation_checks(int n);
/// The same structure expressed through M and N.
std::vector<RelationCheck> natural_relation_checks(int n);
/// Explicit closed forms at n = 4 for d_k, the sandwich scalars, L_k, N_k and
/// the cubic identity in N and M, stated both with coefficient c_2/2
/// (n4.cubic.half_c2) and with coefficient c_2 (n4.cubic.binomial); only the
/// second follows from the binomial relation.
std::vector<RelationCheck> n4_identities();

/// A(G.xi) == Ad(G) A(xi) Ad(G)^{-1} for each generator L, R, S, M, N at
/// `points` random exact pairs (G, xi). Each generator draws from its own
/// engine seeded from `seed`, so results do not depend on scheduling.
std::vector<RelationCheck> equivariance_checks(std::uint64_t seed, int points);

/// True if `id` is selected by `filter` ("all", an exact id, or a dotted prefix).
bool matches_filter(std::string_view id, const std::vector<std::string> &filter);

struct SuiteOptions {
  std::vector<std::string> filter{"all"};
  unsigned threads = 1;
  bool timing = false;
  /// Called in id order, as soon as every earlier result is available.
  std::function<void(const RelationResult &)> on_result;
};

/// Runs the selected checks on a worker pool; the report is sorted by id.
RelationReport run_checks(const FamilyAlgebra &A, std::vector<RelationCheck> checks,
                          const SuiteOptions &options = {});

RelationReport check_relations(const FamilyAlgebra &A, const SuiteOptions &options = {});
RelationReport check_natural_relations(const FamilyAlgebra &A, const SuiteOptions &options = {});

/// Worker count from FAMALG_THREADS, else the hardware concurrency (at least 1).
unsigned default_thread_count();

} // namespace famalg
