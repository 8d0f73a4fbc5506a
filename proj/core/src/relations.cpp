#include "famalg/relations.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

#include "famalg/errors.hpp"

namespace famalg {

std::string_view to_string(RelationStatus s) noexcept {
  switch (s) {
  case RelationStatus::Holds:
    return "holds";
  case RelationStatus::Fails:
    return "fails";
  case RelationStatus::NotApplicable:
    return "not_applicable";
  }
  return "unknown";
}

std::size_t RelationReport::count(RelationStatus s) const noexcept {
  return std::size_t(std::count_if(results.begin(), results.end(),
                                   [s](const RelationResult &r) { return r.status == s; }));
}

CheckOutcome expect_zero(const FamilyElement &difference) {
  if (difference.is_zero())
    return {RelationStatus::Holds, {}};
  return {RelationStatus::Fails,
          "difference has " + std::to_string(difference.term_count()) + " nonzero terms"};
}

namespace {

CheckOutcome expect_equal(const Poly &a, const Poly &b) {
  if (a == b)
    return {RelationStatus::Holds, {}};
  return {RelationStatus::Fails, "difference " + (a - b).to_string()};
}

std::string repeat(char c, int k) { return std::string(std::size_t(std::max(k, 0)), c); }

FamilyElement scalar(const FamilyAlgebra &A, const Poly &p) {
  return FamilyElement::scalar(A.dim(), p);
}

Rational binomial(int m, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i)
    r = r * Rational(m - k + i) / Rational(i);
  return r;
}

FamilyElement power_sum_lhs(const FamilyAlgebra &A) {
  const int n = A.n();
  FamilyElement sum(A.dim());
  for (int l = 0; l <= n - 1; ++l)
    sum += A.word(repeat('L', n - 1 - l) + repeat('R', l));
  return sum;
}

FamilyElement power_sum_rhs(const FamilyAlgebra &A) {
  const int n = A.n();
  FamilyElement sum(A.dim());
  for (int k = 0; k <= n - 3; ++k) {
    FamilyElement inner(A.dim());
    for (int l = 0; l <= k; ++l)
      inner += A.word(repeat('L', k - l) + repeat('R', l));
    sum += inner.scaled(A.d(n - k - 1));
  }
  return sum;
}

FamilyElement cayley_hamilton_difference(const FamilyAlgebra &A, char which) {
  const int n = A.n();
  auto elem = [&](int k) {
    switch (which) {
    case 'L':
      return A.element_Lk(k);
    case 'R':
      return A.element_Rk(k);
    default:
      return A.element_Nk(k);
    }
  };
  FamilyElement diff = elem(n);
  for (int k = 0; k <= n - 2; ++k)
    diff -= elem(k).scaled(A.d(n - k));
  return diff;
}

// sum_{k} C(m, 2k+1) N^{m-1-2k} M^{2k}
FamilyElement odd_binomial_sum(const FamilyAlgebra &A, int m) {
  FamilyElement sum(A.dim());
  for (int k = 0; 2 * k + 1 <= m; ++k)
    sum += A.word(repeat('N', m - 1 - 2 * k) + repeat('M', 2 * k)).scaled(binomial(m, 2 * k + 1));
  return sum;
}

FamilyElement sandwich_difference(const FamilyAlgebra &A, const std::string &middle) {
  const int m = int(middle.size()) + 2;
  const FamilyElement inner = A.S() * A.word(middle);
  return inner * A.S() - A.S().scaled(sandwich_scalar(A.casimirs(), m));
}

} // namespace

std::vector<RelationCheck> relation_checks(int n) {
  std::vector<RelationCheck> out;
  out.push_back({"commute.LR_RL", 2, [](const FamilyAlgebra &A) {
                   return expect_zero(A.word("LR") - A.word("RL"));
                 }});
  out.push_back({"commute.LS_RS", 3, [](const FamilyAlgebra &A) {
                   return expect_zero(A.word("LS") - A.word("RS"));
                 }});
  out.push_back({"commute.SL_SR", 3, [](const FamilyAlgebra &A) {
                   return expect_zero(A.word("SL") - A.word("SR"));
                 }});

  for (int total = 0; total <= n; ++total)
    for (int k = total; k >= 0; --k) {
      const int l = total - k;
      const std::string prefix = total <= n - 1 ? "sandwich" : "sandwich_redundant";
      out.push_back({prefix + ".k" + std::to_string(k) + ".l" + std::to_string(l), total + 4,
                     [k, l](const FamilyAlgebra &A) {
                       return expect_zero(sandwich_difference(A, repeat('L', k) + repeat('R', l)));
                     }});
    }

  out.push_back({"cayley_hamilton.L", n, [](const FamilyAlgebra &A) {
                   return expect_zero(cayley_hamilton_difference(A, 'L'));
                 }});
  out.push_back({"cayley_hamilton.R", n, [](const FamilyAlgebra &A) {
                   return expect_zero(cayley_hamilton_difference(A, 'R'));
                 }});
  out.push_back({"power_sum.LR", n - 1, [](const FamilyAlgebra &A) {
                   return expect_zero(power_sum_lhs(A) - power_sum_rhs(A));
                 }});

  for (int k = 1; k <= n + 1; ++k) {
    out.push_back({"trace_form.L.k" + std::to_string(k), k, [k](const FamilyAlgebra &A) {
                     return expect_zero(A.element_Lk(k) - A.trace_form_Lk(k));
                   }});
    out.push_back({"trace_form.R.k" + std::to_string(k), k, [k](const FamilyAlgebra &A) {
                     return expect_zero(A.element_Rk(k) - A.trace_form_Rk(k));
                   }});
  }

  out.push_back({"transpose.L_R", 1, [](const FamilyAlgebra &A) {
                   return expect_zero(A.killing_transpose(A.L()) - A.R());
                 }});
  out.push_back({"transpose.S", 2, [](const FamilyAlgebra &A) {
                   return expect_zero(A.killing_transpose(A.S()) - A.S());
                 }});
  out.push_back({"transpose.M", 1, [](const FamilyAlgebra &A) {
                   return expect_zero(A.killing_transpose(A.M()) + A.M());
                 }});
  out.push_back({"transpose.N", 1, [](const FamilyAlgebra &A) {
                   return expect_zero(A.killing_transpose(A.N()) - A.N());
                 }});

  out.push_back({"D.power_sum", n, [](const FamilyAlgebra &A) {
                   return expect_zero(A.apply_D(power_sum_lhs(A)) - A.apply_D(power_sum_rhs(A)));
                 }});
  return out;
}

std::vector<RelationCheck> natural_relation_checks(int n) {
  std::vector<RelationCheck> out;
  out.push_back({"natural.commute.MN_NM", 2, [](const FamilyAlgebra &A) {
                   return expect_zero(A.word("MN") - A.word("NM"));
                 }});
  out.push_back({"natural.MS_zero", 3, [](const FamilyAlgebra &A) {
                   return expect_zero(A.word("MS"));
                 }});
  out.push_back({"natural.SM_zero", 3, [](const FamilyAlgebra &A) {
                   return expect_zero(A.word("SM"));
                 }});
  for (int k = 0; k <= n - 1; ++k)
    out.push_back({"natural.sandwich.k" + std::to_string(k), k + 4, [k](const FamilyAlgebra &A) {
                     return expect_zero(sandwich_difference(A, repeat('N', k)));
                   }});
  out.push_back({"natural.binomial", n - 1, [](const FamilyAlgebra &A) {
                   const int n = A.n();
                   FamilyElement rhs(A.dim());
                   for (int j = 1; j <= n - 2; ++j)
                     rhs += odd_binomial_sum(A, j).scaled(A.d(n - j));
                   return expect_zero(odd_binomial_sum(A, n) - rhs);
                 }});
  out.push_back({"natural.cayley_hamilton.N", n, [](const FamilyAlgebra &A) {
                   return expect_zero(cayley_hamilton_difference(A, 'N'));
                 }});
  for (int k = 1; k <= n + 1; ++k)
    out.push_back({"natural.trace_form.N.k" + std::to_string(k), k, [k](const FamilyAlgebra &A) {
                     const FamilyElement half =
                         (A.trace_form_Lk(k) + A.trace_form_Rk(k)).scaled(Rational(1, 2));
                     return expect_zero(A.element_Nk(k) - half);
                   }});
  out.push_back({"natural.proportional.M", 1, [](const FamilyAlgebra &A) -> CheckOutcome {
                   const auto r = proportionality(A.M(), structure_element(A.lie()));
                   if (!r)
                     return {RelationStatus::Fails, "M is not a multiple of the structure element"};
                   return {RelationStatus::Holds, "ratio " + r->to_string()};
                 }});
  out.push_back({"natural.proportional.N", 1, [](const FamilyAlgebra &A) -> CheckOutcome {
                   const FamilyElement h = hessian_element(A.lie(), A.c(3));
                   if (h.is_zero())
                     return {A.N().is_zero() ? RelationStatus::NotApplicable : RelationStatus::Fails,
                             "c_3 vanishes identically"};
                   const auto r = proportionality(A.N(), h);
                   if (!r)
                     return {RelationStatus::Fails, "N is not a multiple of the Hessian element"};
                   return {RelationStatus::Holds, "ratio " + r->to_string()};
                 }});
  return out;
}

std::vector<RelationCheck> n4_identities() {
  auto guard = [](const FamilyAlgebra &A) {
    if (A.n() != 4)
      throw UnsupportedRegime("the n = 4 identities require sl(4)");
  };
  std::vector<RelationCheck> out;
  out.push_back({"n4.d2", 2, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_equal(A.d(2), A.c(2) * Rational(1, 2));
                 }});
  out.push_back({"n4.d3", 3, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_equal(A.d(3), A.c(3) * Rational(1, 3));
                 }});
  out.push_back({"n4.d4", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_equal(A.d(4), A.c(4) * Rational(1, 4) - A.c(2) * A.c(2) * Rational(1, 8));
                 }});
  out.push_back({"n4.sandwich.SS", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_zero(A.word("SS") - A.S().scaled(A.c(2)));
                 }});
  out.push_back({"n4.sandwich.SLS", 5, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_zero(A.word("SLS") - A.S().scaled(A.c(3)));
                 }});
  out.push_back({"n4.sandwich.SL2S", 6, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const Poly s = A.c(4) - A.c(2) * A.c(2) * Rational(1, 4);
                   return expect_zero(A.word("SLLS") - A.S().scaled(s));
                 }});
  out.push_back({"n4.sandwich.SL3S", 7, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const Poly s = A.c(2) * A.c(3) * Rational(1, 3);
                   return expect_zero(A.word("SLLLS") - A.S().scaled(s));
                 }});
  out.push_back({"n4.c5", 5, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_equal(A.c(5), A.c(2) * A.c(3) * Rational(5, 6));
                 }});
  out.push_back({"n4.L2", 2, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   return expect_zero(A.element_Lk(2) - (A.word("LL") + A.S().scaled(Rational(1, 4))));
                 }});
  out.push_back({"n4.L4", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement expected =
                       A.word("LLLL") +
                       (A.word("LLS") + A.word("LSR") + A.word("SRR")).scaled(Rational(1, 4)) +
                       A.S().scaled(A.c(2) * Rational(1, 16));
                   return expect_zero(A.element_Lk(4) - expected);
                 }});
  out.push_back({"n4.R4", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement expected =
                       A.word("RRRR") +
                       (A.word("LLS") + A.word("LSR") + A.word("SRR")).scaled(Rational(1, 4)) +
                       A.S().scaled(A.c(2) * Rational(1, 16));
                   return expect_zero(A.element_Rk(4) - expected);
                 }});
  out.push_back({"n4.L4_relation", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement rhs =
                       (A.word("LL") + A.S().scaled(Rational(1, 4))).scaled(A.c(2) * Rational(1, 2)) +
                       A.L().scaled(A.c(3) * Rational(1, 3)) +
                       scalar(A, A.c(4) * Rational(1, 4) - A.c(2) * A.c(2) * Rational(1, 8));
                   return expect_zero(A.element_Lk(4) - rhs);
                 }});
  out.push_back({"n4.power_sum", 3, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement lhs = A.word("LLL") + A.word("LLR") + A.word("LRR") + A.word("RRR");
                   const FamilyElement rhs = (A.L() + A.R()).scaled(A.c(2) * Rational(1, 2)) +
                                             scalar(A, A.c(3) * Rational(1, 3));
                   return expect_zero(lhs - rhs);
                 }});
  out.push_back({"n4.N2", 2, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement expected =
                       A.word("NN") + A.word("MM") + A.S().scaled(Rational(1, 4));
                   return expect_zero(A.element_Nk(2) - expected);
                 }});
  out.push_back({"n4.N3", 3, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement expected = A.word("NNN") + A.word("NMM").scaled(Rational(3)) +
                                                  (A.word("NS") + A.word("SN")).scaled(Rational(1, 4));
                   return expect_zero(A.element_Nk(3) - expected);
                 }});
  out.push_back({"n4.N4", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement expected =
                       A.word("NNNN") + A.word("NNMM").scaled(Rational(6)) + A.word("MMMM") +
                       (A.word("NNS") + A.word("NSN") + A.word("SNN")).scaled(Rational(1, 4)) +
                       A.S().scaled(A.c(2) * Rational(1, 16));
                   return expect_zero(A.element_Nk(4) - expected);
                 }});
  out.push_back({"n4.N4_relation", 4, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement rhs =
                       (A.word("NN") + A.word("MM") + A.S().scaled(Rational(1, 4)))
                           .scaled(A.c(2) * Rational(1, 2)) +
                       A.N().scaled(A.c(3) * Rational(1, 3)) +
                       scalar(A, A.c(4) * Rational(1, 4) - A.c(2) * A.c(2) * Rational(1, 8));
                   return expect_zero(A.element_Nk(4) - rhs);
                 }});
  out.push_back({"n4.cubic.half_c2", 3, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement lhs = (A.word("NNN") + A.word("NMM")).scaled(Rational(4));
                   const FamilyElement rhs =
                       A.N().scaled(A.c(2) * Rational(1, 2)) + scalar(A, A.c(3) * Rational(1, 3));
                   return expect_zero(lhs - rhs);
                 }});
  out.push_back({"n4.cubic.binomial", 3, [guard](const FamilyAlgebra &A) {
                   guard(A);
                   const FamilyElement lhs = (A.word("NNN") + A.word("NMM")).scaled(Rational(4));
                   const FamilyElement rhs = A.N().scaled(A.c(2)) + scalar(A, A.c(3) * Rational(1, 3));
                   return expect_zero(lhs - rhs);
                 }});
  return out;
}

std::vector<RelationCheck> equivariance_checks(std::uint64_t seed, int points) {
  std::vector<RelationCheck> out;
  for (char g : std::string("LRSMN")) {
    const int degree = g == 'S' ? 2 : 1;
    out.push_back({std::string("equivariance.") + g, degree,
                   [g, seed, points](const FamilyAlgebra &A) -> CheckOutcome {
                     std::mt19937_64 rng(seed ^ (std::uint64_t(g) * 0x9E3779B97F4A7C15ull));
                     for (int i = 0; i < points; ++i) {
                       const GroupElement G = random_group_element(A.lie(), rng);
                       const auto xi = random_point(A.lie(), rng);
                       if (!A.equivariance_check(A.generator(g), G, xi))
                         return {RelationStatus::Fails, "pair " + std::to_string(i) + " breaks equivariance"};
                     }
                     return {RelationStatus::Holds, std::to_string(points) + " random pairs"};
                   }});
  }
  return out;
}

bool matches_filter(std::string_view id, const std::vector<std::string> &filter) {
  for (const auto &f : filter) {
    if (f == "all" || id == f)
      return true;
    if (id.size() > f.size() && id.substr(0, f.size()) == f && id[f.size()] == '.')
      return true;
  }
  return false;
}

RelationReport run_checks(const FamilyAlgebra &A, std::vector<RelationCheck> checks,
                          const SuiteOptions &options) {
  std::erase_if(checks, [&](const RelationCheck &c) { return !matches_filter(c.id, options.filter); });
  std::sort(checks.begin(), checks.end(),
            [](const RelationCheck &a, const RelationCheck &b) { return a.id < b.id; });

  RelationReport report;
  report.n = A.n();
  report.results.resize(checks.size());
  std::vector<bool> done(checks.size(), false);
  std::size_t emitted = 0;
  std::mutex mutex;
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size())
        return;
      RelationResult r;
      r.id = checks[i].id;
      r.n = A.n();
      r.degree = checks[i].degree;
      const auto start = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = checks[i].run(A);
        r.status = o.status;
        r.detail = std::move(o.detail);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure)
          failure = std::current_exception();
        next.store(checks.size());
        return;
      }
      if (options.timing)
        r.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::lock_guard lock(mutex);
      report.results[i] = std::move(r);
      done[i] = true;
      while (emitted < checks.size() && done[emitted]) {
        if (options.on_result && !failure)
          options.on_result(report.results[emitted]);
        ++emitted;
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, unsigned(checks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);
  return report;
}

RelationReport check_relations(const FamilyAlgebra &A, const SuiteOptions &options) {
  return run_checks(A, relation_checks(A.n()), options);
}

RelationReport check_natural_relations(const FamilyAlgebra &A, const SuiteOptions &options) {
  return run_checks(A, natural_relation_checks(A.n()), options);
}

unsigned default_thread_count() {
  if (const char *env = std::getenv("FAMALG_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024)
      return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace famalg
