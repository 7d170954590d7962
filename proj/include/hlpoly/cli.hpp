#pragma once

#include <iosfwd>
#include <cstdint>
#include <string>
#include <vector>

#include "hlpoly/audit.hpp"

namespace hlpoly::cli {

inline constexpr const char* kVersion = "1.0.0";

// Stable exit-code contract.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUndefined = 2;  // HOLDS/UNDEFINED mix, no FAILS
inline constexpr int kExitUsage = 64;

/// Everything a subcommand reads. Filled from flags, then from the optional
/// JSON config file for flags that were not given.
struct RunConfig {
  std::string command;

  std::string family;
  int stirling = 0;  // 1 or 2 when a Stirling table is requested
  std::string identity = "all";
  std::string kernel;
  std::string apply = "none";

  long k = 1;
  std::string alpha = "1";
  std::string a = "1";

  std::vector<long> ks;
  std::vector<std::string> points;  // "alpha,a"
  std::vector<std::uint32_t> primes;

  // -1 means "not given"; each command applies its own default.
  int n_max = -1;
  int max_n = -1;
  int order = -1;
  int cong_n_max = 3;
  int stirling_n_max = 20;

  std::string method = "formula";
  std::string format;
  bool egf = false;
  std::string variant;
  std::string config_path;
};

/// Exit code for a set of audit reports: 0 all HOLDS, 1 any FAILS,
/// 2 otherwise.
int exit_code_for(const std::vector<AuditReport>& reports);

/// Identities selected by an `--identity` value (thm8 and all expand).
/// Throws ParseError for unknown names.
std::vector<IdentityId> parse_identity_selector(const std::string& name);

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlpoly::cli
