#pragma once

#include "sqbetti/polynomial.hpp"

#include <cstdint>

namespace sqbetti {

/// Binary colorings of a `total`-cycle with exactly `black` black beads.
struct BraceletQuery {
  std::uint32_t total = 1;
  std::uint32_t black = 0;
};

/// Euler's totient. Throws std::invalid_argument for k == 0.
std::uint64_t totient(std::uint64_t k);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Number of orbits of two-colorings of a d-cycle with `black` ones under the
/// dihedral group of order 2d, read off the two-color dihedral cycle index.
/// Throws std::invalid_argument when black > total or total == 0.
BigInt braceletCount(BraceletQuery q);

/// Total number of binary bracelets of length d (cycle index evaluated at 2).
BigInt braceletTotal(std::uint32_t d);

/// sum_{i=0}^{d} N(d,i) t^{2(d-i)}.
IntPolynomial braceletGeneratingPolynomial(std::uint32_t d);

}  // namespace sqbetti
