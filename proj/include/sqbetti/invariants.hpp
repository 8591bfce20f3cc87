#pragma once

#include "sqbetti/localization.hpp"

#include <string>
#include <vector>

namespace sqbetti {

struct InvariantCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural checks on an assembled Poincare polynomial and its loci:
/// odd-vanishing, h2, constant-term, top-coefficient, degree, palindrome,
/// euler, typeB-positive-weights and cardinality.
///
/// h2 expects 2 unless (n, d) = (1, 1), where the space is the moduli of
/// elliptic curves and h2 = 1.
std::vector<InvariantCheck> checkStructuralInvariants(const Assembly& a);

bool allPassed(const std::vector<InvariantCheck>& checks);

}  // namespace sqbetti
