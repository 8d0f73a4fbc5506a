// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "famalg/exponents.hpp"
#include "famalg/independence.hpp"
#include "famalg/relations.hpp"

using namespace famalg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;
std::vector<std::string> notes;

void report(int id, const std::string &title, const std::function<Verdict()> &body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception &e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << v.detail << "; "
       << seconds_since(t0) << " s]";
  std::cout << line.str() << std::endl;
  for (const auto &note : notes)
    std::cout << "  info: " << note << std::endl;
  notes.clear();
  failures += v.pass ? 0 : 1;
}

void info(const std::string &text) { notes.push_back(text); }

std::string failing_ids(const RelationReport &r) {
  std::string s;
  for (const auto &x : r.results)
    if (x.status == RelationStatus::Fails)
      s += (s.empty() ? "" : ",") + x.id;
  return s.empty() ? "none" : s;
}

const FamilyAlgebra &algebra(int n) {
  static const FamilyAlgebra a2(2), a3(3), a4(4);
  static std::unique_ptr<FamilyAlgebra> a5;
  if (n == 5) {
    if (!a5)
      a5 = std::make_unique<FamilyAlgebra>(5);
    return *a5;
  }
  return n == 2 ? a2 : n == 3 ? a3 : a4;
}

} // namespace

int main(int argc, char **argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i)
    extended = extended || std::strcmp(argv[i], "--extended") == 0;
  SuiteOptions suite;
  suite.threads = default_thread_count();

  report(1, "exact relation suite at n = 4", [&] {
    const auto t0 = Clock::now();
    const RelationReport r = check_relations(algebra(4), suite);
    const double secs = seconds_since(t0);
    std::size_t structural = 0;
    for (const auto &x : r.results)
      structural += x.id.rfind("trace_form.", 0) != 0 && x.id.rfind("transpose.", 0) != 0;
    return Verdict{r.all_hold() && r.count(RelationStatus::Holds) == r.results.size() && secs < 120.0,
                   std::to_string(r.count(RelationStatus::Holds)) + "/" + std::to_string(r.results.size()) +
                       " hold (" + std::to_string(structural) + " defining relations), failing: " + failing_ids(r)};
  });

  report(2, "n = 4 closed forms (d_k, sandwiches, L_k, N_k, cubic N identity)", [&] {
    const RelationReport r = run_checks(algebra(4), n4_identities(), suite);
    for (const auto &x : r.results)
      if (x.id == "n4.cubic.binomial")
        info("4N^3+4NM^2 = c2*N + c3/3 (binomial relation at n = 4): " + std::string(to_string(x.status)));
    return Verdict{r.all_hold(), std::to_string(r.count(RelationStatus::Holds)) + "/" +
                                     std::to_string(r.results.size()) + " hold, failing: " + failing_ids(r)};
  });

  report(3, "L_k and R_k equal their trace forms for k <= n+1", [&] {
    std::string detail;
    bool ok = true;
    std::vector<int> ns{2, 3, 4};
    if (extended)
      ns.push_back(5);
    const auto t0 = Clock::now();
    for (int n : ns) {
      SuiteOptions o = suite;
      o.filter = {"trace_form"};
      const RelationReport r = check_relations(algebra(n), o);
      ok = ok && r.all_hold() && r.results.size() == std::size_t(2 * (n + 1));
      detail += "n=" + std::to_string(n) + ":" + std::to_string(r.count(RelationStatus::Holds)) + "/" +
                std::to_string(r.results.size()) + " ";
    }
    ok = ok && seconds_since(t0) < 1800.0;
    if (extended) {
      const auto &A = algebra(5);
      const FamilyElement diff = A.trace_form_Lk(6) - A.element_Lk(6, CorrectionRule::AllCompositions);
      const bool predicted = diff == A.S().scaled(A.c(2) * A.c(2) * Rational(-1, 125));
      info(std::string("n=5, k=6 with every composition kept in the S-correction: ") +
           (diff.is_zero() ? "equal" : "differs") +
           (predicted ? " by -c2^2 S/125 (compositions of more than three parts are spurious)" : ""));
    } else {
      detail += "(n=5 skipped, pass --extended)";
    }
    return Verdict{ok, detail};
  });

  report(4, "monomial basis size 2n^2-3n+1 and the n = 4 list", [&] {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 5; ++n) {
      const auto size = monomial_basis(n).size();
      ok = ok && int(size) == expected_basis_size(n) && int(size) == 2 * n * n - 3 * n + 1;
      detail += "n=" + std::to_string(n) + ":" + std::to_string(size) + " ";
    }
    const std::vector<std::string> listed{"1",   "L",    "R",    "L^2",  "LR",    "R^2",    "S",
                                          "L^3", "L^2R", "LR^2", "LS",   "SR",    "L^3R",   "LR^3",
                                          "L^2S", "LSR", "SR^2", "L^3R^2", "L^2SR", "LSR^2", "L^2SR^2"};
    std::vector<std::string> got;
    for (const auto &m : monomial_basis(4))
      got.push_back(m.label());
    const bool list_ok = got == listed;
    return Verdict{ok && list_ok, detail + (list_ok ? "n=4 list verbatim" : "n=4 list differs")};
  });

  report(5, "rank certificate at n = 4", [&] {
    const auto &A = algebra(4);
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed : {1u, 2u, 0xFA417Au}) {
      const RankReport r = rank_certificate(A, monomial_basis(4), 3, seed);
      ok = ok && r.full_rank() && r.rank == 21;
      detail += "seed " + std::to_string(seed) + ": rank " + std::to_string(r.rank) + "; ";
    }
    for (const auto &extra : {MonomialIndex{3, 0, 1}, MonomialIndex{2, 0, 2}}) {
      auto ms = monomial_basis(4);
      ms.push_back(extra);
      const RankReport r = rank_certificate(A, ms, 3, 1);
      ok = ok && r.rank == 21;
      detail += "+" + extra.label() + ": rank " + std::to_string(r.rank) + "/" + std::to_string(ms.size()) +
                (r.exact ? " exact" : " mod p") + "; ";
    }
    info("L^3R already belongs to the n = 4 list, so adding it repeats a row; L^2R^2 is the genuinely new case");
    ok = ok && seconds_since(t0) < 300.0;
    return Verdict{ok, detail + "full rank at a point certifies independence, a deficiency is evidence only"};
  });

  report(6, "generalized exponents against charge Kostka polynomials", [&] {
    auto t0 = Clock::now();
    const ExponentReport r4 = verify_exponent_table(4);
    const double s4 = seconds_since(t0);
    const QPoly q2q4 = QPoly::monomial(2) + QPoly::monomial(4);
    const QPoly expected = q2q4 + q_integer(4).shifted(3);
    const bool explicit_shift = r4.rows[4].computed == q2q4 && r4.rows[5].computed == expected &&
                                expected.to_string() == "q^2+q^3+2q^4+q^5+q^6";
    t0 = Clock::now();
    const ExponentReport r5 = verify_exponent_table(5);
    const double s5 = seconds_since(t0);
    const bool ok = r4.ok() && r4.total_at_one == 21 && explicit_shift && s4 < 10.0 && r5.ok() &&
                    r5.total_at_one == 36 && s5 < 60.0;
    return Verdict{ok, "n=4 rows " + std::string(r4.all_rows_match() ? "match" : "differ") + ", total " +
                           std::to_string(r4.total_at_one) + ", shift law " +
                           (explicit_shift ? "holds" : "fails") + "; n=5 rows " +
                           (r5.all_rows_match() ? "match" : "differ") + ", total " +
                           std::to_string(r5.total_at_one)};
  });

  report(7, "equivariance of generators and basis monomials, 5 pairs each", [&] {
    bool ok = true;
    std::size_t checks = 0, passed = 0;
    std::mt19937_64 rng(0xFA417A);
    for (int n = 2; n <= 4; ++n) {
      const auto &A = algebra(n);
      std::vector<std::string> words{"L", "R", "S", "M", "N"};
      for (const auto &m : monomial_basis(n))
        words.push_back(m.word());
      for (const auto &w : words) {
        const FamilyElement &e = A.word(w);
        for (int p = 0; p < 5; ++p) {
          const GroupElement g = random_group_element(A.lie(), rng);
          const auto xi = random_point(A.lie(), rng);
          const bool good = A.equivariance_check(e, g, xi);
          ++checks;
          passed += good;
          ok = ok && good;
        }
      }
    }
    return Verdict{ok, std::to_string(passed) + "/" + std::to_string(checks) + " exact checks"};
  });

  report(8, "c_5 = (5/6) c_2 c_3 at n = 4", [&] {
    const auto &A = algebra(4);
    const bool ok = A.c(5) == A.c(2) * A.c(3) * Rational(5, 6);
    return Verdict{ok, ok ? "exact identity" : "differs"};
  });

  report(9, "symmetrize((L+R)^m) has a nonzero c_{m+2} coefficient at n = 5, m = 0..2", [&] {
    bool ok = true;
    std::string detail;
    for (int m = 0; m <= 2; ++m) {
      const CasimirWitness w = casimir_witness(algebra(5), m);
      ok = ok && w.nonvanishing();
      detail += "m=" + std::to_string(m) + ": " + w.top_coefficient.to_string() + " ";
    }
    return Verdict{ok, detail};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
