#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "famalg/errors.hpp"
#include "famalg/exponents.hpp"
#include "famalg/relations.hpp"

namespace famalg::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kMaxFamilyN = 5;
constexpr int kMaxExponentsN = 10;

struct ConfigError : std::runtime_error {
  int code;
  ConfigError(int c, const std::string &what) : std::runtime_error(what), code(c) {}
};

std::string hex(std::uint64_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << v;
  return s.str();
}

void require_n(const RunConfig &c, int max_n, const char *what) {
  if (c.n < 2)
    throw ConfigError(kInvalidConfig, "n must be at least 2 (got " + std::to_string(c.n) + ")");
  if (c.n > max_n)
    throw ConfigError(kUnsupported, std::string(what) + " supports n <= " + std::to_string(max_n) +
                                        " (got " + std::to_string(c.n) + ")");
}

json relation_json(const RelationResult &r) {
  json j;
  j["relation_id"] = r.id;
  j["n"] = r.n;
  j["status"] = std::string(to_string(r.status));
  j["degree"] = r.degree;
  j["wall_time_ms"] = r.wall_time_ms ? json(*r.wall_time_ms) : json(nullptr);
  if (!r.detail.empty())
    j["detail"] = r.detail;
  return j;
}

std::string relation_line(const RelationResult &r) {
  std::ostringstream s;
  s << std::left << std::setw(15) << to_string(r.status) << std::setw(30) << r.id << " deg "
    << std::setw(3) << r.degree;
  if (!r.detail.empty())
    s << "  " << r.detail;
  if (r.wall_time_ms)
    s << "  [" << std::fixed << std::setprecision(1) << *r.wall_time_ms << " ms]";
  return s.str();
}

int run_verify(const RunConfig &c, std::ostream &out) {
  require_n(c, kMaxFamilyN, "verify");
  if (c.n == kMaxFamilyN && !c.extended)
    throw ConfigError(kUnsupported, "verify at n = 5 is long-running; pass --extended");
  if (c.points < 1)
    throw ConfigError(kInvalidConfig, "--points must be at least 1");

  std::vector<RelationCheck> checks = relation_checks(c.n);
  for (auto &chk : natural_relation_checks(c.n))
    checks.push_back(std::move(chk));
  for (auto &chk : equivariance_checks(c.seed, c.points))
    checks.push_back(std::move(chk));
  // The n = 4 closed forms (n4.*) are opt-in: "all" means the structural suite.
  const bool wants_n4 = std::any_of(c.relations.begin(), c.relations.end(), [](const std::string &f) {
    return f != "all" && (f == "n4" || f.rfind("n4.", 0) == 0);
  });
  if (wants_n4 && c.n != 4)
    throw ConfigError(kUnsupported, "the n4.* identities exist only for n = 4");
  if (wants_n4)
    for (auto &chk : n4_identities())
      checks.push_back(std::move(chk));
  for (const auto &f : c.relations) {
    const bool used = std::any_of(checks.begin(), checks.end(), [&](const RelationCheck &chk) {
      return matches_filter(chk.id, {f});
    });
    if (!used)
      throw ConfigError(kInvalidConfig, "relation filter '" + f + "' matches no relation");
  }

  const FamilyAlgebra algebra(c.n);
  SuiteOptions options;
  options.filter = c.relations;
  options.threads = c.threads;
  options.timing = c.timing;
  if (c.format == Format::Text) {
    out << "verify n=" << c.n << " seed=" << hex(c.seed) << " points=" << c.points << "\n";
    options.on_result = [&out](const RelationResult &r) { out << relation_line(r) << "\n" << std::flush; };
  }
  const RelationReport report = run_checks(algebra, std::move(checks), options);

  if (c.format == Format::Json) {
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["n"] = c.n;
    j["seed"] = c.seed;
    j["points"] = c.points;
    j["relations"] = json::array();
    for (const auto &r : report.results)
      j["relations"].push_back(relation_json(r));
    j["summary"] = {{"holds", report.count(RelationStatus::Holds)},
                    {"fails", report.count(RelationStatus::Fails)},
                    {"not_applicable", report.count(RelationStatus::NotApplicable)}};
    out << j.dump(2) << "\n";
  } else {
    out << report.results.size() << " relations: " << report.count(RelationStatus::Holds)
        << " hold, " << report.count(RelationStatus::Fails) << " fail, "
        << report.count(RelationStatus::NotApplicable) << " not applicable\n";
  }
  return report.all_hold() ? kOk : kCheckFailed;
}

int run_independence(const RunConfig &c, std::ostream &out) {
  require_n(c, kMaxFamilyN, "independence");
  if (c.points < 1)
    throw ConfigError(kInvalidConfig, "--points must be at least 1");
  Transversal rule;
  if (c.transversal == "standard")
    rule = Transversal::Standard;
  else if (c.transversal == "leading")
    rule = Transversal::LeadingL;
  else
    throw ConfigError(kInvalidConfig, "unknown transversal '" + c.transversal + "'");

  std::vector<MonomialIndex> monomials = monomial_basis(c.n, rule);
  const std::size_t basis_size = monomials.size();
  for (const auto &text : c.extra_monomials) {
    const auto m = parse_monomial(text);
    if (!m)
      throw ConfigError(kInvalidConfig, "cannot parse monomial '" + text + "'");
    monomials.push_back(*m);
  }

  const FamilyAlgebra algebra(c.n);
  const RankReport r = rank_certificate(algebra, monomials, c.points, c.seed);
  const bool ok = c.extra_monomials.empty() ? r.full_rank() && int(basis_size) == expected_basis_size(c.n)
                                            : r.rank == basis_size;

  if (c.format == Format::Json) {
    json j;
    j["schema"] = 1;
    j["command"] = "independence";
    j["n"] = c.n;
    j["expected"] = r.expected;
    j["rank"] = r.rank;
    j["points"] = r.points;
    j["seed"] = r.seed;
    j["exact"] = r.exact;
    j["prime"] = r.prime;
    j["per_point_rank"] = r.per_point;
    j["basis_size"] = basis_size;
    j["formula_size"] = expected_basis_size(c.n);
    json labels = json::array();
    for (const auto &m : monomials)
      labels.push_back(m.label());
    j["monomials"] = labels;
    j["full_rank"] = r.full_rank();
    j["certificate"] = "full rank at a point proves independence over I(g); a deficiency at "
                       "sampled points is evidence, not proof, of dependence";
    out << j.dump(2) << "\n";
  } else {
    out << "independence n=" << c.n << " seed=" << hex(c.seed) << " points=" << c.points << "\n";
    out << "monomials (" << monomials.size() << "):";
    for (const auto &m : monomials)
      out << " " << m.label();
    out << "\n";
    out << "basis size " << basis_size << ", formula 2n^2-3n+1 = " << expected_basis_size(c.n) << "\n";
    out << "rank per point:";
    for (auto p : r.per_point)
      out << " " << p;
    out << "\nrank " << r.rank << " of " << r.expected << (r.exact ? " (exact elimination)" : " (mod p)")
        << ", prime " << r.prime << "\n";
    out << (r.full_rank() ? "independent" : "dependent at all sampled points") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

json qpoly_json(const QPoly &p) {
  json coeffs = json::array();
  for (int d = 0; d <= p.degree(); ++d)
    coeffs.push_back(p.coefficient(d));
  return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

int run_exponents(const RunConfig &c, std::ostream &out) {
  require_n(c, kMaxExponentsN, "exponents");
  const ExponentReport report = verify_exponent_table(c.n);
  if (c.format == Format::Json) {
    json j;
    j["schema"] = 1;
    j["command"] = "exponents";
    j["n"] = c.n;
    j["rows"] = json::array();
    for (const auto &row : report.rows) {
      json jr;
      jr["weight"] = row.row.label;
      jr["fundamental_coefficients"] = row.row.weight.a;
      jr["closed_form"] = qpoly_json(row.row.closed_form);
      jr["kostka"] = qpoly_json(row.computed);
      jr["match"] = row.matches;
      j["rows"].push_back(jr);
    }
    j["shift_law"] = report.shift_law;
    j["total_at_one"] = report.total_at_one;
    j["family_dimension"] = report.family_dimension;
    out << j.dump(2) << "\n";
  } else {
    out << "generalized exponents, n=" << c.n << "\n";
    for (const auto &row : report.rows)
      out << std::left << std::setw(12) << row.row.label << std::setw(40) << row.row.closed_form.to_string()
          << (row.matches ? "matches charge" : "MISMATCH charge=" + row.computed.to_string()) << "\n";
    out << "shift law " << (report.shift_law ? "holds" : "fails") << "; total at q=1 (adjoint twice) "
        << report.total_at_one << " vs family dimension " << report.family_dimension << "\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

json poly_matrix_json(const LieData &lie, const FamilyElement &e) {
  json entries = json::array();
  for (int a = 0; a < e.dim(); ++a)
    for (int b = 0; b < e.dim(); ++b)
      if (!e(a, b).is_zero())
        entries.push_back({{"row", lie.basis()[std::size_t(a)].name()},
                           {"col", lie.basis()[std::size_t(b)].name()},
                           {"poly", e(a, b).to_string()}});
  return entries;
}

int run_dump(const RunConfig &c, std::ostream &out) {
  require_n(c, kMaxFamilyN, "dump");
  const FamilyAlgebra algebra(c.n);
  const LieData &lie = algebra.lie();
  json j;
  j["schema"] = 1;
  j["command"] = "dump";
  j["n"] = c.n;
  j["target"] = c.dump_target;
  json basis = json::array();
  for (int a = 0; a < lie.dim(); ++a)
    basis.push_back("x" + std::to_string(a + 1) + "=" + lie.basis()[std::size_t(a)].name());
  j["variables"] = basis;

  std::ostringstream text;
  if (c.dump_target == "F") {
    const auto &F = algebra.casimirs().F().entries;
    json rows = json::array();
    for (int r = 0; r < c.n; ++r) {
      json row = json::array();
      for (int s = 0; s < c.n; ++s) {
        row.push_back(F(r, s).to_string());
        text << "F[" << r + 1 << "][" << s + 1 << "] = " << F(r, s).to_string() << "\n";
      }
      rows.push_back(row);
    }
    j["entries"] = rows;
  } else if (c.dump_target == "casimir" && c.casimir_k) {
    const int k = *c.casimir_k;
    if (k < 1 || k > 3 * c.n)
      throw ConfigError(kInvalidConfig, "--k must lie in 1.." + std::to_string(3 * c.n));
    const Poly &p = algebra.c(k);
    json terms = json::array();
    for (const auto &t : p.terms()) {
      json exps = json::array();
      for (int v = 0; v < p.nvars(); ++v)
        exps.push_back(t.monomial.exponent(v));
      terms.push_back({{"coefficient", t.coeff.to_string()}, {"exponents", exps}});
    }
    j["k"] = k;
    j["text"] = p.to_string();
    j["terms"] = terms;
    text << "c" << k << " = " << p.to_string() << "\n";
  } else if (c.dump_target == "casimir") {
    json cs = json::object(), ds = json::object();
    for (int k = 2; k <= c.n; ++k) {
      cs["c" + std::to_string(k)] = algebra.c(k).to_string();
      text << "c" << k << " = " << algebra.c(k).to_string() << "\n";
    }
    for (int k = 2; k <= c.n; ++k) {
      ds["d" + std::to_string(k)] = algebra.d(k).to_string();
      text << "d" << k << " = " << algebra.d(k).to_string() << "\n";
    }
    j["casimirs"] = cs;
    j["cayley_hamilton"] = ds;
  } else if (c.dump_target == "generator") {
    if (c.generator.size() != 1 || std::string("LRSMN").find(c.generator[0]) == std::string::npos)
      throw ConfigError(kInvalidConfig, "dump generator expects one of L, R, S, M, N");
    const FamilyElement &e = algebra.generator(c.generator[0]);
    j["generator"] = c.generator;
    j["entries"] = poly_matrix_json(lie, e);
    for (const auto &entry : j["entries"])
      text << c.generator << "[" << entry["row"].get<std::string>() << "][" << entry["col"].get<std::string>()
           << "] = " << entry["poly"].get<std::string>() << "\n";
  } else {
    throw ConfigError(kInvalidConfig, "dump target must be F, casimir or generator");
  }

  if (c.format == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    out << "variables:";
    for (const auto &v : j["variables"])
      out << " " << v.get<std::string>();
    out << "\n" << text.str();
  }
  return kOk;
}

} // namespace

std::optional<std::uint64_t> parse_seed(const std::string &text) {
  if (text.empty())
    return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size())
      return std::nullopt;
    return std::uint64_t(v);
  } catch (const std::exception &) {
    return std::nullopt;
  }
}

std::optional<MonomialIndex> parse_monomial(const std::string &text) {
  if (text == "1")
    return MonomialIndex{};
  MonomialIndex m;
  int stage = 0; // 0: L, 1: after S, 2: R
  std::size_t i = 0;
  while (i < text.size()) {
    const char g = text[i++];
    int power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        return std::nullopt;
      power = std::stoi(text.substr(start, i - start));
    }
    if (g == 'L' && stage == 0) {
      m.k += power;
    } else if (g == 'S' && stage == 0 && power == 1) {
      m.m = 1;
      stage = 1;
    } else if (g == 'R') {
      m.l += power;
      stage = 2;
    } else {
      return std::nullopt;
    }
  }
  return text.empty() ? std::nullopt : std::optional<MonomialIndex>(m);
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    switch (config.command) {
    case Command::Verify:
      return run_verify(config, out);
    case Command::Independence:
      return run_independence(config, out);
    case Command::Exponents:
      return run_exponents(config, out);
    case Command::Dump:
      return run_dump(config, out);
    }
  } catch (const ConfigError &e) {
    err << "famalg: " << e.what() << "\n";
    return e.code;
  } catch (const UnsupportedRegime &e) {
    err << "famalg: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidDimension &e) {
    err << "famalg: " << e.what() << "\n";
    return kInvalidConfig;
  }
  return kInvalidConfig;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact computations in the family algebra of the adjoint representation of sl(n)"};
  app.name("famalg");
  app.require_subcommand(1);

  RunConfig config;
  config.threads = default_thread_count();
  std::string seed_text = hex(kDefaultSeed);
  std::string format = "text";
  std::optional<int> n;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--n", n, "rank parameter of sl(n)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "table"}));
  };
  auto independence_options = [&](CLI::App *sub) {
    common(sub);
    sub->add_option("--points", config.points, "number of random points");
    sub->add_option("--seed", seed_text, "random seed (decimal or 0x hex)");
    sub->add_option("--transversal", config.transversal, "standard or leading");
    sub->add_option("--add", config.extra_monomials, "extra monomial such as L^3R (repeatable)");
  };

  auto *verify = app.add_subcommand("verify", "check the relation suite exactly");
  common(verify);
  verify->require_subcommand(0, 1);
  verify->add_option("--relations", config.relations, "relation ids or dotted prefixes, or 'all'")
      ->delimiter(',');
  verify->add_option("--seed", seed_text, "seed for random equivariance checks (decimal or 0x hex)");
  verify->add_option("--points", config.points, "random (G, xi) pairs per equivariance check");
  verify->add_flag("--extended", config.extended, "allow long-running n = 5");
  verify->add_flag("--timing", config.timing, "report wall time per relation");
  auto *verify_indep = verify->add_subcommand("independence", "same as the independence command");
  independence_options(verify_indep);

  auto *indep = app.add_subcommand("independence", "rank certificate for the monomial basis");
  independence_options(indep);

  auto *expo = app.add_subcommand("exponents", "generalized exponents table");
  common(expo);

  auto *dump = app.add_subcommand("dump", "print F, the Casimirs or a generator");
  common(dump);
  std::vector<std::string> target;
  dump->add_option("target", target, "F | casimir | generator X")->required()->expected(1, 2);
  dump->add_option("--k", config.casimir_k, "with 'casimir': only c_k, including a term list");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
      args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kInvalidConfig;
  }

  if (!n) {
    err << "famalg: --n is required\n";
    return kInvalidConfig;
  }
  config.n = *n;
  const auto seed = parse_seed(seed_text);
  if (!seed) {
    err << "famalg: invalid seed '" << seed_text << "'\n";
    return kInvalidConfig;
  }
  config.seed = *seed;
  config.format = format == "json" ? Format::Json : Format::Text;

  if (verify_indep->parsed() || indep->parsed()) {
    config.command = Command::Independence;
  } else if (verify->parsed()) {
    config.command = Command::Verify;
  } else if (expo->parsed()) {
    config.command = Command::Exponents;
  } else {
    config.command = Command::Dump;
    config.dump_target = target.at(0);
    if (target.size() == 2)
      config.generator = target[1];
    else if (config.dump_target == "generator") {
      err << "famalg: dump generator needs a generator name\n";
      return kInvalidConfig;
    }
    if (config.casimir_k && config.dump_target != "casimir") {
      err << "famalg: --k applies only to 'dump casimir'\n";
      return kInvalidConfig;
    }
  }
  return run(config, out, err);
}

} // namespace famalg::cli
