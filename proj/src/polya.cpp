#include "sqbetti/polya.hpp"

#include <stdexcept>

namespace sqbetti {

std::uint64_t totient(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("totient: argument must be positive");
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt braceletCount(BraceletQuery q) {
  const std::uint64_t d = q.total;
  const std::uint64_t i = q.black;
  if (d == 0) throw std::invalid_argument("braceletCount: total must be positive");
  if (i > d) throw std::invalid_argument("braceletCount: black exceeds total");

  // Rotations: a rotation with cycle length c (phi(c) of them, c | d) fixes a
  // coloring iff it is constant on each of its d/c cycles.
  BigInt sum = 0;
  for (std::uint64_t c = 1; c <= d; ++c) {
    if (d % c != 0 || i % c != 0) continue;
    sum += BigInt(totient(c)) * binomial(d / c, i / c);
  }

  // Reflections.
  if (d % 2 == 1) {
    // d reflections, each with one fixed bead and (d-1)/2 two-cycles.
    sum += BigInt(d) * binomial((d - 1) / 2, i / 2);
  } else {
    const std::uint64_t half = d / 2;
    // d/2 reflections through two beads: two fixed points, half-1 two-cycles.
    // d/2 reflections through edge midpoints: half two-cycles.
    if (i % 2 == 0) {
      sum += BigInt(half) * binomial(half, i / 2);  // C(h-1,i/2) + C(h-1,i/2-1)
      sum += BigInt(half) * binomial(half, i / 2);
    } else {
      sum += BigInt(half) * 2 * binomial(half - 1, (i - 1) / 2);
    }
  }

  BigInt q2, r;
  boost::multiprecision::divide_qr(sum, BigInt(2 * d), q2, r);
  if (r != 0) throw std::logic_error("braceletCount: Burnside sum not divisible by group order");
  return q2;
}

BigInt braceletTotal(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("braceletTotal: length must be positive");
  BigInt sum = 0;
  for (std::uint64_t c = 1; c <= d; ++c) {
    if (d % c == 0) sum += BigInt(totient(c)) * (BigInt(1) << (d / c));
  }
  if (d % 2 == 1) {
    sum += BigInt(d) * (BigInt(1) << ((d + 1) / 2));
  } else {
    sum += BigInt(3 * (d / 2)) * (BigInt(1) << (d / 2));
  }
  return sum / (2 * BigInt(d));
}

IntPolynomial braceletGeneratingPolynomial(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("braceletGeneratingPolynomial: d must be positive");
  std::vector<BigInt> coeffs(2 * static_cast<std::size_t>(d) + 1);
  for (std::uint32_t i = 0; i <= d; ++i) {
    coeffs[2 * static_cast<std::size_t>(d - i)] = braceletCount({d, i});
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace sqbetti
