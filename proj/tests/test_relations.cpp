#include <gtest/gtest.h>

#include <algorithm>

#include "famalg/errors.hpp"
#include "famalg/relations.hpp"

using namespace famalg;

namespace {

const RelationResult *find(const RelationReport &r, const std::string &id) {
  for (const auto &x : r.results)
    if (x.id == id)
      return &x;
  return nullptr;
}

} // namespace

TEST(Relations, FilterSemantics) {
  EXPECT_TRUE(matches_filter("sandwich.k1.l2", {"all"}));
  EXPECT_TRUE(matches_filter("sandwich.k1.l2", {"sandwich"}));
  EXPECT_TRUE(matches_filter("sandwich.k1.l2", {"sandwich.k1"}));
  EXPECT_TRUE(matches_filter("sandwich.k1.l2", {"sandwich.k1.l2"}));
  EXPECT_FALSE(matches_filter("sandwich.k1.l2", {"sand"}));
  EXPECT_FALSE(matches_filter("sandwich_redundant.k1.l3", {"sandwich"}));
  EXPECT_TRUE(matches_filter("commute.LR_RL", {"x", "commute"}));
}

TEST(Relations, ExpectZero) {
  const FamilyAlgebra A(2);
  EXPECT_EQ(expect_zero(A.S() - A.S()).status, RelationStatus::Holds);
  EXPECT_EQ(expect_zero(A.S()).status, RelationStatus::Fails);
  EXPECT_EQ(to_string(RelationStatus::NotApplicable), "not_applicable");
}

class SuiteAtN : public ::testing::TestWithParam<int> {};

TEST_P(SuiteAtN, StructuralRelationsHold) {
  const int n = GetParam();
  const FamilyAlgebra A(n);
  const RelationReport r = check_relations(A);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.count(RelationStatus::NotApplicable), 0u);
  EXPECT_TRUE(std::is_sorted(r.results.begin(), r.results.end(),
                             [](const auto &a, const auto &b) { return a.id < b.id; }));
  for (const auto &x : r.results) {
    EXPECT_EQ(x.status, RelationStatus::Holds) << x.id;
    EXPECT_FALSE(x.wall_time_ms.has_value());
  }
  for (int k = 1; k <= n + 1; ++k)
    EXPECT_NE(find(r, "trace_form.L.k" + std::to_string(k)), nullptr);
}

TEST_P(SuiteAtN, NaturalRelationsHold) {
  const int n = GetParam();
  const FamilyAlgebra A(n);
  const RelationReport r = check_natural_relations(A);
  EXPECT_TRUE(r.all_hold());
  const auto *prop_n = find(r, "natural.proportional.N");
  ASSERT_NE(prop_n, nullptr);
  EXPECT_EQ(prop_n->status, n == 2 ? RelationStatus::NotApplicable : RelationStatus::Holds);
  const auto *prop_m = find(r, "natural.proportional.M");
  ASSERT_NE(prop_m, nullptr);
  EXPECT_EQ(prop_m->detail, "ratio -1/2");
}

INSTANTIATE_TEST_SUITE_P(SmallN, SuiteAtN, ::testing::Values(2, 3, 4));

TEST(Relations, SandwichIdsCoverTheRange) {
  const auto checks = relation_checks(4);
  int sandwich = 0, redundant = 0;
  for (const auto &c : checks) {
    sandwich += c.id.rfind("sandwich.", 0) == 0;
    redundant += c.id.rfind("sandwich_redundant.", 0) == 0;
  }
  EXPECT_EQ(sandwich, 10);  // k + l <= 3
  EXPECT_EQ(redundant, 5);  // k + l == 4
}

TEST(Relations, ParallelRunIsDeterministic) {
  const FamilyAlgebra A(3);
  SuiteOptions one, many;
  many.threads = 4;
  const auto a = check_relations(A, one);
  const auto b = check_relations(A, many);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].id, b.results[i].id);
    EXPECT_EQ(a.results[i].status, b.results[i].status);
  }
}

TEST(Relations, StreamingCallbackIsOrdered) {
  const FamilyAlgebra A(3);
  SuiteOptions opt;
  opt.threads = 3;
  opt.filter = {"sandwich", "commute"};
  opt.timing = true;
  std::vector<std::string> seen;
  opt.on_result = [&](const RelationResult &r) { seen.push_back(r.id); };
  const auto r = check_relations(A, opt);
  ASSERT_EQ(seen.size(), r.results.size());
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  for (const auto &x : r.results) {
    EXPECT_TRUE(x.wall_time_ms.has_value());
    EXPECT_TRUE(x.id.rfind("sandwich.", 0) == 0 || x.id.rfind("commute.", 0) == 0);
  }
}

TEST(Relations, N4Identities) {
  const FamilyAlgebra A(4);
  const RelationReport r = run_checks(A, n4_identities());
  for (const auto &x : r.results) {
    if (x.id == "n4.cubic.half_c2")
      EXPECT_EQ(x.status, RelationStatus::Fails);
    else
      EXPECT_EQ(x.status, RelationStatus::Holds) << x.id;
  }
  EXPECT_NE(find(r, "n4.cubic.binomial"), nullptr);
  EXPECT_NE(find(r, "n4.c5"), nullptr);
}

TEST(Relations, N4IdentitiesRejectOtherN) {
  const FamilyAlgebra A(3);
  EXPECT_THROW(run_checks(A, n4_identities()), UnsupportedRegime);
}

TEST(Relations, EquivarianceChecks) {
  const FamilyAlgebra A(3);
  const auto checks = equivariance_checks(17, 2);
  EXPECT_EQ(checks.size(), 5u);
  const auto r = run_checks(A, checks);
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.count(RelationStatus::Holds), 5u);
}
