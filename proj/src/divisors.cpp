#include "sqbetti/divisors.hpp"

#include <stdexcept>

namespace sqbetti {

namespace {

Rational dd(SpaceIndex s) { return Rational(s.d); }

void requireSameSpace(SpaceIndex a, SpaceIndex b) {
  if (a != b) {
    throw std::invalid_argument("classes on different spaces: (n,d)=(" + std::to_string(a.n) +
                                "," + std::to_string(a.d) + ") vs (" + std::to_string(b.n) +
                                "," + std::to_string(b.d) + ")");
  }
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  requireSameSpace(a.space, b.space);
  return {a.cj + b.cj, a.cb + b.cb, a.space};
}

DivisorClass operator*(const Rational& k, const DivisorClass& a) {
  return {k * a.cj, k * a.cb, a.space};
}

DivisorClass divisorJ(SpaceIndex s) { return {1, 0, s}; }
DivisorClass divisorB(SpaceIndex s) { return {0, 1, s}; }
CurveClass curveJ(SpaceIndex s) { return {1, 0, s}; }
CurveClass curveT(SpaceIndex s) { return {0, 1, s}; }

Rational pairing(const DivisorClass& D, const CurveClass& C) {
  requireSameSpace(D.space, C.space);
  const Rational d = dd(D.space);
  // D_j . gamma_j = 0, D_j . gamma_t = 12,
  // D_b . gamma_j = d - 1, D_b . gamma_t = -d(d-1)/2.
  const Rational jj = 0, jt = 12;
  const Rational bj = d - 1, bt = -d * (d - 1) / 2;
  return D.cj * (C.gj * jj + C.gt * jt) + D.cb * (C.gj * bj + C.gt * bt);
}

DivisorClass dfdInBasis(SpaceIndex s) {
  const Rational d = dd(s);
  return {d * (d - 1), 24, s};
}

std::pair<Rational, Rational> toNefBasis(const DivisorClass& D) {
  const Rational d = dd(D.space);
  const Rational b = D.cb / 24;
  return {D.cj - b * d * (d - 1), b};
}

DivisorClass fromNefBasis(const Rational& a, const Rational& b, SpaceIndex s) {
  return a * divisorJ(s) + b * dfdInBasis(s);
}

DivisorClass canonicalClass(SpaceIndex s) {
  const Rational n = s.n, d = s.d;
  return {(d - 11 + (d - 1) * (n - 1)) / 12, -n, s};
}

bool isNef(const DivisorClass& D) {
  return pairing(D, curveJ(D.space)) >= 0 && pairing(D, curveT(D.space)) >= 0;
}

bool isEffectiveCone(const DivisorClass& D) { return D.cj >= 0 && D.cb >= 0; }

bool isAmple(const DivisorClass& D) {
  return pairing(D, curveJ(D.space)) > 0 && pairing(D, curveT(D.space)) > 0;
}

bool isFano(SpaceIndex s) {
  const long long n = s.n, d = s.d;
  return n * (d + 2) * (d - 1) < 20;
}

std::pair<Rational, Rational> antiCanonicalNefBasis(SpaceIndex s) {
  const Rational n = s.n, d = s.d;
  return {-(n * (d + 2) * (d - 1) - 20) / 24, n / 24};
}

IntersectionTable intersectionTable(SpaceIndex s) {
  auto row = [&](const DivisorClass& D) {
    return std::array<Rational, 2>{pairing(D, curveJ(s)), pairing(D, curveT(s))};
  };
  return {row(divisorB(s)), row(divisorJ(s)), row(dfdInBasis(s))};
}

std::vector<SpaceIndex> fanoScan() {
  std::vector<SpaceIndex> out;
  for (std::uint32_t d = 2; isFano({1, d}); ++d) {
    for (std::uint32_t n = 1; isFano({n, d}); ++n) out.push_back({n, d});
  }
  return out;
}

bool picardRankTwoAsserted(SpaceIndex s) { return s.n >= 2 || s.d >= 2; }

}  // namespace sqbetti
