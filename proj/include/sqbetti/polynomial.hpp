#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sqbetti {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of t^i; trailing zeros are
/// never stored, so the zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t exponent);

  bool isZero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero past the degree.
  BigInt coeff(std::size_t i) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned exponent) const;

  /// Divides every coefficient by `divisor`; throws std::domain_error if any
  /// coefficient leaves a remainder.
  IntPolynomial divideExact(const BigInt& divisor) const;

  /// Human-readable form such as "1 + 2t^2 + t^4".
  std::string toString() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);

/// Multiplication by t^k.
IntPolynomial shift(const IntPolynomial& a, std::size_t k);

/// Reverses the coefficient window [0, topDegree]. Throws std::invalid_argument
/// when degree(a) > topDegree.
IntPolynomial reverse(const IntPolynomial& a, std::size_t topDegree);

BigInt evalAtOne(const IntPolynomial& a);

/// 1 + t^step + t^{2 step} + ... + t^{count-1 step}.
IntPolynomial geometricSum(std::size_t count, std::size_t step = 2);

/// Index of the first coefficient where a and b differ, or -1 if equal.
long firstDifference(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace sqbetti
