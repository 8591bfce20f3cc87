#include "sqbetti/cli.hpp"

#include "sqbetti/divisors.hpp"
#include "sqbetti/genus1.hpp"
#include "sqbetti/invariants.hpp"
#include "sqbetti/polya.hpp"
#include "sqbetti/report.hpp"

#include <CLI11.hpp>

#include <map>
#include <sstream>

namespace sqbetti {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint32_t need(const std::optional<std::uint32_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option --") + flag);
  if (*v == 0) throw UsageError(std::string("--") + flag + " must be positive");
  return *v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunResult errorResult(int code, const std::string& kind, const std::string& message,
                      Json extra = Json::object()) {
  Json j{{"error", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  return {code, "", dump(j)};
}

std::string checksText(const std::vector<InvariantCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
  }
  return out;
}

std::string checksCsv(const std::vector<InvariantCheck>& checks) {
  std::string out = "check,passed\n";
  for (const auto& c : checks) out += c.name + "," + (c.passed ? "true" : "false") + "\n";
  return out;
}

RunResult withChecks(RunResult r, const std::vector<InvariantCheck>& checks) {
  if (!allPassed(checks)) {
    Json failed = Json::array();
    for (const auto& c : checks) {
      if (!c.passed) failed.push_back({{"invariant", c.name}, {"detail", c.detail}});
    }
    r.exitCode = kExitInvariant;
    r.err = dump(Json{{"error", "invariant_violation"}, {"failed", failed}});
  }
  return r;
}

AssemblyOptions optionsFor(const RunConfig& cfg) {
  AssemblyOptions opts;
  opts.rule = cfg.exclusion;
  if (cfg.weightSeedK) opts.baseK = BigInt(*cfg.weightSeedK);
  return opts;
}

RunResult runPoincare(const RunConfig& cfg) {
  const std::uint32_t n = need(cfg.n, "n"), d = need(cfg.d, "d");
  const Assembly a = assemblePoincare(n, d, optionsFor(cfg));
  const std::size_t top = 2 * static_cast<std::size_t>(n) * d;
  std::vector<InvariantCheck> checks;
  if (cfg.check) checks = checkStructuralInvariants(a);

  RunResult r;
  switch (cfg.format) {
    case Format::kJson: {
      Json j{{"n", n},
             {"d", d},
             {"exclusion", toString(a.rule)},
             {"weights", toJson(a.weights)},
             {"poincare", toJson(a.poincare)}};
      if (cfg.check) j["checks"] = toJson(checks);
      r.out = dump(j);
      break;
    }
    case Format::kCsv:
      r.out = polynomialCsv(a.poincare, top);
      if (cfg.check) r.out += checksCsv(checks);
      break;
    case Format::kTable:
      r.out = "P(t) = " + a.poincare.toString() + "\n" + bettiTable(a.poincare, top);
      if (cfg.check) r.out += checksText(checks);
      break;
  }
  return cfg.check ? withChecks(std::move(r), checks) : r;
}

RunResult runLoci(const RunConfig& cfg) {
  const std::uint32_t n = need(cfg.n, "n"), d = need(cfg.d, "d");
  const Assembly a = assemblePoincare(n, d, optionsFor(cfg));
  std::vector<InvariantCheck> checks;
  if (cfg.check) checks = checkStructuralInvariants(a);

  RunResult r;
  switch (cfg.format) {
    case Format::kJson: {
      Json j = toJson(a);
      if (cfg.check) j["checks"] = toJson(checks);
      r.out = dump(j);
      break;
    }
    case Format::kCsv: {
      std::ostringstream os;
      os << "kind,ell,m,nu,s,delta,positive_weights,shift\n";
      auto join = [](const std::vector<std::uint32_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
      };
      for (const auto& rec : a.records) {
        if (const auto* t = std::get_if<TypeALocus>(&rec.kind)) {
          os << "A," << t->ell << ",,,,,";
        } else {
          const auto& g = std::get<TypeBLocus>(rec.kind).graph;
          os << "B,," << g.m() << "," << join(g.nu) << "," << join(g.s) << "," << join(g.delta)
             << ",";
        }
        os << rec.positiveWeightCount << "," << rec.shift() << "\n";
      }
      r.out = os.str();
      if (cfg.check) r.out += checksCsv(checks);
      break;
    }
    case Format::kTable: {
      std::ostringstream os;
      for (const auto& rec : a.records) {
        if (const auto* t = std::get_if<TypeALocus>(&rec.kind)) {
          os << "A ell=" << t->ell;
        } else {
          os << "B " << describeGraph(std::get<TypeBLocus>(rec.kind).graph);
        }
        os << "  d+=" << rec.positiveWeightCount << "  " << rec.poincare.toString() << "\n";
      }
      os << "P(t) = " << a.poincare.toString() << "\n";
      r.out = os.str();
      if (cfg.check) r.out += checksText(checks);
      break;
    }
  }
  return cfg.check ? withChecks(std::move(r), checks) : r;
}

std::vector<InvariantCheck> genus1Checks(const Genus1Result& g, bool closedOk,
                                         const std::string& closedError) {
  std::vector<InvariantCheck> out;
  auto compare = [&](const char* name, const IntPolynomial& other) {
    const long k = firstDifference(g.viaStrata, other);
    std::string detail;
    if (k >= 0) {
      detail = "degree " + std::to_string(k) + ": " + g.viaStrata.coeff(k).str() + " vs " +
               other.coeff(k).str();
    }
    out.push_back({name, k < 0, detail});
  };
  if (closedOk) {
    compare("strata=closed-formula", g.viaClosedFormula);
  } else {
    out.push_back({"strata=closed-formula", false, closedError});
  }
  compare("strata=simple-form", g.viaSimpleForm);

  const auto top = static_cast<std::size_t>(2 * g.d);
  bool palindrome = g.viaStrata == reverse(g.viaStrata, top);
  out.push_back({"palindrome", palindrome, ""});
  bool oddZero = true;
  for (std::size_t i = 1; i <= top; i += 2) oddZero = oddZero && g.viaStrata.coeff(i) == 0;
  out.push_back({"odd-vanishing", oddZero, ""});
  return out;
}

RunResult runGenus1(const RunConfig& cfg) {
  const std::uint32_t d = need(cfg.d, "d");
  Genus1Result g;
  g.d = d;
  g.viaStrata = poincareViaStrata(d);
  std::vector<InvariantCheck> checks;
  if (cfg.check) {
    bool closedOk = true;
    std::string closedError;
    try {
      g.viaClosedFormula = poincareViaClosedFormula(d);
    } catch (const std::domain_error& e) {
      closedOk = false;
      closedError = e.what();
    }
    g.viaSimpleForm = poincareSimple(d);
    checks = genus1Checks(g, closedOk, closedError);
  }

  const std::size_t top = 2 * static_cast<std::size_t>(d);
  RunResult r;
  switch (cfg.format) {
    case Format::kJson: {
      Json j{{"d", d}, {"poincare", toJson(g.viaStrata)}};
      if (cfg.check) j["checks"] = toJson(checks);
      r.out = dump(j);
      break;
    }
    case Format::kCsv:
      r.out = polynomialCsv(g.viaStrata, top);
      if (cfg.check) r.out += checksCsv(checks);
      break;
    case Format::kTable:
      r.out = "P(t) = " + g.viaStrata.toString() + "\n" + bettiTable(g.viaStrata, top);
      if (cfg.check) r.out += checksText(checks);
      break;
  }
  return cfg.check ? withChecks(std::move(r), checks) : r;
}

RunResult runBracelets(const RunConfig& cfg) {
  const std::uint32_t d = need(cfg.d, "d");
  std::vector<BigInt> counts;
  for (std::uint32_t i = 0; i <= d; ++i) counts.push_back(braceletCount({d, i}));
  const BigInt total = braceletTotal(d);

  RunResult r;
  switch (cfg.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& c : counts) arr.push_back(c.str());
      r.out = dump(Json{{"d", d}, {"counts", arr}, {"total", total.str()}});
      break;
    }
    case Format::kCsv: {
      std::ostringstream os;
      os << "black,count\n";
      for (std::uint32_t i = 0; i <= d; ++i) os << i << "," << counts[i] << "\n";
      r.out = os.str();
      break;
    }
    case Format::kTable: {
      std::ostringstream os;
      os << "black  count\n";
      for (std::uint32_t i = 0; i <= d; ++i) os << i << "      " << counts[i] << "\n";
      os << "total  " << total << "\n";
      r.out = os.str();
      break;
    }
  }
  return r;
}

RunResult runDivisors(const RunConfig& cfg) {
  const SpaceIndex s{need(cfg.n, "n"), need(cfg.d, "d")};
  const Json j = divisorsReport(s);
  RunResult r;
  switch (cfg.format) {
    case Format::kJson:
      r.out = dump(j);
      break;
    case Format::kCsv: {
      std::ostringstream os;
      os << "divisor,gamma_j,gamma_t\n";
      for (const char* row : {"D_b", "D_j", "D_fd"}) {
        const auto& t = j["intersection_table"][row];
        os << row << "," << t["gamma_j"].get<std::string>() << ","
           << t["gamma_t"].get<std::string>() << "\n";
      }
      r.out = os.str();
      break;
    }
    case Format::kTable: {
      std::ostringstream os;
      os << "K = " << j["K"]["cj"].get<std::string>() << " D_j + "
         << j["K"]["cb"].get<std::string>() << " D_b\n";
      os << "-K = " << j["antiK_nef_basis"][0].get<std::string>() << " D_j + "
         << j["antiK_nef_basis"][1].get<std::string>() << " D_fd\n";
      os << "fano: " << (j["fano"].get<bool>() ? "yes" : "no") << "\n";
      os << "        gamma_j  gamma_t\n";
      for (const char* row : {"D_b", "D_j", "D_fd"}) {
        const auto& t = j["intersection_table"][row];
        std::string name = row;
        name.resize(8, ' ');
        std::string a = t["gamma_j"].get<std::string>();
        a.resize(std::max<std::size_t>(a.size() + 1, 9), ' ');
        os << name << a << t["gamma_t"].get<std::string>() << "\n";
      }
      r.out = os.str();
      break;
    }
  }
  return r;
}

RunResult runFanoScan(const RunConfig& cfg) {
  const auto spaces = fanoScan();
  RunResult r;
  switch (cfg.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& s : spaces) arr.push_back({{"n", s.n}, {"d", s.d}});
      r.out = dump(arr);
      break;
    }
    case Format::kCsv:
      r.out = "n,d\n";
      for (const auto& s : spaces) r.out += std::to_string(s.n) + "," + std::to_string(s.d) + "\n";
      break;
    case Format::kTable:
      for (const auto& s : spaces) {
        r.out += "(" + std::to_string(s.n) + "," + std::to_string(s.d) + ")\n";
      }
      break;
  }
  return r;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::kPoincare: return runPoincare(cfg);
      case Command::kGenus1: return runGenus1(cfg);
      case Command::kLoci: return runLoci(cfg);
      case Command::kBracelets: return runBracelets(cfg);
      case Command::kDivisors: return runDivisors(cfg);
      case Command::kFanoScan: return runFanoScan(cfg);
    }
    return errorResult(kExitUsage, "usage", "unknown command");
  } catch (const UsageError& e) {
    return errorResult(kExitUsage, "usage", e.what());
  } catch (const ZeroWeightError& e) {
    return errorResult(kExitInvariant, "zero_weight", e.what(),
                       Json{{"graph", toJson(e.graph())}});
  } catch (const CardinalityMismatch& e) {
    return errorResult(kExitInvariant, "cardinality", e.what(),
                       Json{{"invariant", "cardinality"}, {"graph", toJson(e.graph())}});
  } catch (const std::invalid_argument& e) {
    return errorResult(kExitUsage, "usage", e.what());
  } catch (const std::exception& e) {
    return errorResult(kExitInvariant, "computation", e.what());
  }
}

RunResult runArgs(const std::vector<std::string>& args) {
  CLI::App app{"Betti numbers and divisor invariants of genus-1 stable quotient spaces", "sqbetti"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json", exclusion = "successor";
  std::uint32_t n = 0, d = 0;
  std::uint64_t k = 0;

  auto addFormat = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };
  auto addND = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of sections")->required()->check(CLI::PositiveNumber);
    sub->add_option("--d", d, "degree")->required()->check(CLI::PositiveNumber);
  };
  auto addAssembly = [&](CLI::App* sub) {
    sub->add_option("--exclusion", exclusion, "successor or predecessor")
        ->check(CLI::IsMember({"successor", "predecessor"}));
    sub->add_option("--weight-k", k, "base K of the weight vector (K^0, K^1, ...)")
        ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    sub->add_flag("--check", cfg.check, "run the structural invariant suite");
  };

  std::map<CLI::App*, Command> commands;
  auto* poincare = app.add_subcommand("poincare", "assembled Poincare polynomial");
  addND(poincare);
  addFormat(poincare);
  addAssembly(poincare);
  commands[poincare] = Command::kPoincare;

  auto* loci = app.add_subcommand("loci", "fixed loci with their shifts");
  addND(loci);
  addFormat(loci);
  addAssembly(loci);
  commands[loci] = Command::kLoci;

  auto* genus1 = app.add_subcommand("genus1", "Poincare polynomial for n = 1");
  genus1->add_option("--d", d, "degree")->required()->check(CLI::PositiveNumber);
  genus1->add_flag("--check", cfg.check, "compare the three genus-1 forms");
  addFormat(genus1);
  commands[genus1] = Command::kGenus1;

  auto* bracelets = app.add_subcommand("bracelets", "two-color bracelet counts");
  bracelets->add_option("--d", d, "number of beads")->required()->check(CLI::PositiveNumber);
  addFormat(bracelets);
  commands[bracelets] = Command::kBracelets;

  auto* divisors = app.add_subcommand("divisors", "canonical class and intersection table");
  addND(divisors);
  addFormat(divisors);
  commands[divisors] = Command::kDivisors;

  auto* fano = app.add_subcommand("fano-scan", "every Fano (n, d) with d >= 2");
  addFormat(fano);
  commands[fano] = Command::kFanoScan;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) return {0, out.str(), err.str()};
    return errorResult(kExitUsage, "usage", e.what());
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  if (n) cfg.n = n;
  if (d) cfg.d = d;
  if (k) cfg.weightSeedK = k;
  cfg.format = format == "csv" ? Format::kCsv : format == "table" ? Format::kTable : Format::kJson;
  cfg.exclusion = parseExclusionRule(exclusion);
  return run(cfg);
}

}  // namespace sqbetti
