#pragma once

// Intersection calculus on the rank-2 Picard group.
//
// Divisors are stored in the basis (D_j, D_b), the boundary rays of the
// effective cone. D_fd = d(d-1) D_j + 24 D_b; (D_j, D_fd) bound the nef cone.
// Curves are stored in the basis (gamma_j, gamma_t). All arithmetic is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace sqbetti {

using Rational = boost::multiprecision::cpp_rational;

/// The pair (n, d) naming the space.
struct SpaceIndex {
  std::uint32_t n = 1;
  std::uint32_t d = 1;
  friend bool operator==(const SpaceIndex&, const SpaceIndex&) = default;
  friend auto operator<=>(const SpaceIndex&, const SpaceIndex&) = default;
};

struct DivisorClass {
  Rational cj;  // coefficient of D_j
  Rational cb;  // coefficient of D_b
  SpaceIndex space;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Rational& k, const DivisorClass& a);
  DivisorClass operator-() const { return {-cj, -cb, space}; }
};

struct CurveClass {
  Rational gj;  // coefficient of gamma_j
  Rational gt;  // coefficient of gamma_t
  SpaceIndex space;
};

DivisorClass divisorJ(SpaceIndex s);
DivisorClass divisorB(SpaceIndex s);
CurveClass curveJ(SpaceIndex s);
CurveClass curveT(SpaceIndex s);

/// Bilinear extension of the intersection table. Throws std::invalid_argument
/// when the two classes live on different spaces.
Rational pairing(const DivisorClass& D, const CurveClass& C);

/// D_fd = d(d-1) D_j + 24 D_b.
DivisorClass dfdInBasis(SpaceIndex s);

/// Coordinates (a, b) with D = a D_j + b D_fd.
std::pair<Rational, Rational> toNefBasis(const DivisorClass& D);
DivisorClass fromNefBasis(const Rational& a, const Rational& b, SpaceIndex s);

/// K = ((d - 11 + (d-1)(n-1)) / 12) D_j - n D_b.
DivisorClass canonicalClass(SpaceIndex s);

bool isNef(const DivisorClass& D);
bool isEffectiveCone(const DivisorClass& D);
bool isAmple(const DivisorClass& D);

/// n(d+2)(d-1) < 20.
bool isFano(SpaceIndex s);

/// -K in the nef basis: (-(n(d+2)(d-1) - 20)/24, n/24).
std::pair<Rational, Rational> antiCanonicalNefBasis(SpaceIndex s);

/// Rows D_b, D_j, D_fd against columns gamma_j, gamma_t.
struct IntersectionTable {
  std::array<Rational, 2> db;
  std::array<Rational, 2> dj;
  std::array<Rational, 2> dfd;
};
IntersectionTable intersectionTable(SpaceIndex s);

/// Every Fano space with d >= 2, ordered by (d, n). Finite because
/// (d+2)(d-1) >= 4 for d >= 2.
std::vector<SpaceIndex> fanoScan();

/// Picard rank 2 is asserted for n >= 2 or d >= 2; (1, 1) is flagged.
bool picardRankTwoAsserted(SpaceIndex s);

}  // namespace sqbetti
