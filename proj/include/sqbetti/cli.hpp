#pragma once

// Command-line front end. run() never prints; the caller writes RunResult.out
// to stdout and RunResult.err to stderr.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqbetti/localization.hpp"

namespace sqbetti {

enum class Command { kPoincare, kGenus1, kLoci, kBracelets, kDivisors, kFanoScan };
enum class Format { kJson, kCsv, kTable };

struct RunConfig {
  Command command = Command::kPoincare;
  std::optional<std::uint32_t> n;
  std::optional<std::uint32_t> d;
  Format format = Format::kJson;
  ExclusionRule exclusion = ExclusionRule::kSuccessor;
  std::optional<std::uint64_t> weightSeedK;
  bool check = false;
};

struct RunResult {
  int exitCode = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

RunResult run(const RunConfig& cfg);

/// Parses argv-style arguments (without the program name) and runs them.
RunResult runArgs(const std::vector<std::string>& args);

}  // namespace sqbetti
