#include "sqbetti/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace sqbetti {

namespace {

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::vector<InvariantCheck> checkStructuralInvariants(const Assembly& a) {
  std::vector<InvariantCheck> out;
  const IntPolynomial& p = a.poincare;
  const std::size_t top = 2 * static_cast<std::size_t>(a.n) * a.d;

  {
    long bad = -1;
    for (std::size_t i = 1; i < p.coeffs().size(); i += 2) {
      if (p.coeffs()[i] != 0) {
        bad = static_cast<long>(i);
        break;
      }
    }
    out.push_back({"odd-vanishing", bad < 0,
                   bad < 0 ? "all odd coefficients zero" : "nonzero t^" + std::to_string(bad)});
  }
  {
    const bool exceptional = a.n == 1 && a.d == 1;
    const BigInt want = exceptional ? 1 : 2;
    const BigInt got = p.coeff(2);
    out.push_back({"h2", got == want,
                   "h^2 = " + str(got) + ", expected " + str(want) +
                       (exceptional ? " (rank-2 claim excluded at n = d = 1)" : "")});
  }
  out.push_back({"constant-term", p.coeff(0) == 1, "h^0 = " + str(p.coeff(0))});
  out.push_back({"top-coefficient", p.coeff(top) == 1, "h^" + std::to_string(top) + " = " +
                                                           str(p.coeff(top))});
  out.push_back({"degree", p.degree() == static_cast<long>(top),
                 "degree " + std::to_string(p.degree()) + ", expected " + std::to_string(top)});
  {
    bool ok = p.degree() <= static_cast<long>(top) && reverse(p, top) == p;
    out.push_back({"palindrome", ok, ok ? "symmetric about degree " + std::to_string(top)
                                        : "not symmetric about degree " + std::to_string(top)});
  }
  {
    BigInt sum = 0;
    for (const auto& r : a.records) sum += evalAtOne(r.poincare);
    const BigInt total = evalAtOne(p);
    out.push_back({"euler", sum == total,
                   "P(1) = " + str(total) + ", sum over loci = " + str(sum)});
  }
  {
    std::string detail = "every Type B locus has at least 2 positive weights";
    bool ok = true;
    std::size_t minPos = 0;
    bool any = false;
    for (const auto& r : a.records) {
      if (r.isTypeA()) continue;
      minPos = any ? std::min(minPos, r.positiveWeightCount) : r.positiveWeightCount;
      any = true;
      if (r.positiveWeightCount < 2) ok = false;
    }
    if (!any) detail = "no Type B loci";
    if (!ok) detail = "a Type B locus has only " + std::to_string(minPos) + " positive weights";
    out.push_back({"typeB-positive-weights", ok, detail});
  }
  {
    bool ok = true;
    std::string detail = "weight counts equal n*d - sum(s_i - 1)";
    for (const auto& r : a.records) {
      if (r.isTypeA()) continue;
      const auto& g = std::get<TypeBLocus>(r.kind).graph;
      const std::size_t want = expectedWeightCount(g, a.n);
      if (r.weights.size() != want) {
        ok = false;
        detail = "graph with m=" + std::to_string(g.m()) + " has " +
                 std::to_string(r.weights.size()) + " weights, expected " + std::to_string(want);
        break;
      }
    }
    out.push_back({"cardinality", ok, detail});
  }
  return out;
}

bool allPassed(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

}  // namespace sqbetti
