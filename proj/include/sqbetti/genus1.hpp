#pragma once

// Poincare polynomial of the n = 1 space (pairs of a genus-1 curve and an
// effective degree-d divisor), computed three ways.

#include "sqbetti/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqbetti {

struct Genus1Result {
  std::uint32_t d = 1;
  IntPolynomial viaStrata;
  IntPolynomial viaClosedFormula;
  IntPolynomial viaSimpleForm;
};

/// Raised by genus1Certified when two of the three forms disagree.
class Genus1Mismatch : public std::runtime_error {
 public:
  Genus1Mismatch(std::string lhs, std::string rhs, std::uint32_t d, long degree,
                 BigInt lhsCoeff, BigInt rhsCoeff);

  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }
  std::uint32_t d() const { return d_; }
  long degree() const { return degree_; }
  const BigInt& lhsCoeff() const { return lhsCoeff_; }
  const BigInt& rhsCoeff() const { return rhsCoeff_; }

 private:
  std::string lhs_, rhs_;
  std::uint32_t d_;
  long degree_;
  BigInt lhsCoeff_, rhsCoeff_;
};

/// Smooth-curve stratum (t^2 + ... + t^{2d}) plus one t^{2(d-i)} per
/// bracelet of i black and d-i white beads, 1 <= i <= d.
IntPolynomial poincareViaStrata(std::uint32_t d);

/// Dihedral cycle-index closed formula, expanded and divided by 2d exactly.
/// Throws std::domain_error if the division leaves a remainder.
IntPolynomial poincareViaClosedFormula(std::uint32_t d);

/// 1 + 2t^2 + ... + 2t^{2d-2} + t^{2d}.
IntPolynomial poincareSimple(std::uint32_t d);

/// Runs all three forms and throws Genus1Mismatch at the first differing
/// coefficient (strata vs closed formula first, then strata vs simple form).
Genus1Result genus1Certified(std::uint32_t d);

/// Same three computations without the equality requirement.
Genus1Result genus1AllForms(std::uint32_t d);

}  // namespace sqbetti
