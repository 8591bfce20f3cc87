#include "sqbetti/genus1.hpp"

#include "sqbetti/polya.hpp"

#include <sstream>

namespace sqbetti {

namespace {

std::string mismatchMessage(const std::string& lhs, const std::string& rhs, std::uint32_t d,
                            long degree, const BigInt& a, const BigInt& b) {
  std::ostringstream os;
  os << "genus-1 forms disagree at d=" << d << ": " << lhs << " has " << a << " t^" << degree
     << ", " << rhs << " has " << b;
  return os.str();
}

void requirePositive(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("degree d must be positive");
}

// 1 + t^{2c}
IntPolynomial onePlusT(std::size_t exponent) {
  return IntPolynomial{1} + IntPolynomial::monomial(1, exponent);
}

}  // namespace

Genus1Mismatch::Genus1Mismatch(std::string lhs, std::string rhs, std::uint32_t d, long degree,
                               BigInt lhsCoeff, BigInt rhsCoeff)
    : std::runtime_error(mismatchMessage(lhs, rhs, d, degree, lhsCoeff, rhsCoeff)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      d_(d),
      degree_(degree),
      lhsCoeff_(std::move(lhsCoeff)),
      rhsCoeff_(std::move(rhsCoeff)) {}

IntPolynomial poincareViaStrata(std::uint32_t d) {
  requirePositive(d);
  IntPolynomial p = shift(geometricSum(d), 2);  // t^2 + ... + t^{2d}
  for (std::uint32_t i = 1; i <= d; ++i) {
    p += IntPolynomial::monomial(braceletCount({d, i}), 2 * static_cast<std::size_t>(d - i));
  }
  return p;
}

IntPolynomial poincareViaClosedFormula(std::uint32_t d) {
  requirePositive(d);
  const std::size_t dd = d;

  // Rotations: a rotation by a divisor k of cycles gives (1 + t^{2d/k})^k with
  // multiplicity phi(d/k).
  IntPolynomial bracket;
  for (std::size_t k = 1; k <= dd; ++k) {
    if (dd % k != 0) continue;
    bracket += onePlusT(2 * dd / k).pow(static_cast<unsigned>(k)) * BigInt(totient(dd / k));
  }

  // Reflections.
  const IntPolynomial a = onePlusT(2);
  const IntPolynomial b = onePlusT(4);
  if (d % 2 == 1) {
    bracket += a * b.pow((d - 1) / 2) * BigInt(d);
  } else {
    const BigInt half = d / 2;
    bracket += a.pow(2) * b.pow(d / 2 - 1) * half;
    bracket += b.pow(d / 2) * half;
  }

  IntPolynomial p = bracket.divideExact(2 * BigInt(d));
  if (d >= 2) p += shift(geometricSum(d - 1), 2);  // t^2 + ... + t^{2d-2}
  return p;
}

IntPolynomial poincareSimple(std::uint32_t d) {
  requirePositive(d);
  std::vector<BigInt> c(2 * static_cast<std::size_t>(d) + 1);
  c.front() = 1;
  c.back() = 1;
  for (std::size_t j = 1; j < d; ++j) c[2 * j] = 2;
  return IntPolynomial(std::move(c));
}

Genus1Result genus1AllForms(std::uint32_t d) {
  return {d, poincareViaStrata(d), poincareViaClosedFormula(d), poincareSimple(d)};
}

Genus1Result genus1Certified(std::uint32_t d) {
  Genus1Result r = genus1AllForms(d);
  auto check = [&](const IntPolynomial& x, const char* xn, const IntPolynomial& y, const char* yn) {
    const long k = firstDifference(x, y);
    if (k >= 0) {
      throw Genus1Mismatch(xn, yn, d, k, x.coeff(static_cast<std::size_t>(k)),
                           y.coeff(static_cast<std::size_t>(k)));
    }
  };
  check(r.viaStrata, "strata sum", r.viaClosedFormula, "closed formula");
  check(r.viaStrata, "strata sum", r.viaSimpleForm, "simple form");
  return r;
}

}  // namespace sqbetti
