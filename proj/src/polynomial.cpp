#include "sqbetti/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqbetti {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  return IntPolynomial(std::vector<BigInt>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::divideExact(const BigInt& divisor) const {
  if (divisor == 0) throw std::domain_error("division of polynomial by zero");
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(coeffs_[i], divisor, q, r);
    if (r != 0) {
      std::ostringstream msg;
      msg << "coefficient of t^" << i << " (" << coeffs_[i] << ") is not divisible by " << divisor;
      throw std::domain_error(msg.str());
    }
    out[i] = std::move(q);
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial shift(const IntPolynomial& a, std::size_t k) {
  if (a.isZero() || k == 0) return a;
  std::vector<BigInt> v(k);
  v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
  return IntPolynomial(std::move(v));
}

IntPolynomial reverse(const IntPolynomial& a, std::size_t topDegree) {
  if (a.degree() > static_cast<long>(topDegree)) {
    throw std::invalid_argument("reverse: degree " + std::to_string(a.degree()) +
                                " exceeds window " + std::to_string(topDegree));
  }
  std::vector<BigInt> v(topDegree + 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[topDegree - i] = a.coeffs()[i];
  return IntPolynomial(std::move(v));
}

BigInt evalAtOne(const IntPolynomial& a) {
  BigInt sum = 0;
  for (const auto& c : a.coeffs()) sum += c;
  return sum;
}

IntPolynomial geometricSum(std::size_t count, std::size_t step) {
  if (count == 0) return {};
  std::vector<BigInt> v((count - 1) * step + 1);
  for (std::size_t i = 0; i < count; ++i) v[i * step] = 1;
  return IntPolynomial(std::move(v));
}

long firstDifference(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(i) != b.coeff(i)) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace sqbetti
