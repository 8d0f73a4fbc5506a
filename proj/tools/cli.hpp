#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "famalg/independence.hpp"

namespace famalg::cli {

enum class Command { Verify, Independence, Exponents, Dump };
enum class Format { Text, Json };

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidConfig = 2,
  kUnsupported = 3,
};

inline constexpr std::uint64_t kDefaultSeed = 0xFA417A;

struct RunConfig {
  Command command = Command::Verify;
  int n = 4;
  std::uint64_t seed = kDefaultSeed;
  int points = 3;
  Format format = Format::Text;
  std::vector<std::string> relations{"all"};
  bool extended = false;
  bool timing = false;
  std::string dump_target;          ///< F | casimir | generator
  std::string generator;            ///< L | R | S | M | N for "dump generator"
  std::optional<int> casimir_k;     ///< "dump casimir --k K": only c_K, with a term list
  std::string transversal = "standard"; ///< standard | leading
  std::vector<std::string> extra_monomials; ///< appended to the basis, e.g. "L^3R"
  unsigned threads = 1;
};

/// Executes one command; reports go to `out`, diagnostics to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name) and runs.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Decimal or 0x-prefixed hexadecimal.
std::optional<std::uint64_t> parse_seed(const std::string &text);

/// "1", "L^2SR", "LLSR", "S", ...: L-powers, optional S, then R-powers.
std::optional<MonomialIndex> parse_monomial(const std::string &text);

} // namespace famalg::cli
