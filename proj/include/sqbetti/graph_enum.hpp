#pragma once

// Decorated m-cycles indexing the non-trivial (Type B) torus fixed loci.
//
// Vertex i carries a fixed-point label nu[i] in [0, n) and a torsion weight
// s[i] >= 0; edge i joins vertex i to vertex (i+1) mod m and carries a
// covering degree delta[i] >= 1. Adjacent labels differ and
// sum(s) + sum(delta) = d.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sqbetti {

struct DecoratedGraph {
  std::vector<std::uint32_t> nu;
  std::vector<std::uint32_t> s;
  std::vector<std::uint32_t> delta;

  std::size_t m() const { return nu.size(); }
  std::uint32_t degree() const;

  /// Orders by cycle length, then lexicographically along the interleaved
  /// word (nu_1, s_1, delta_1), (nu_2, s_2, delta_2), ...
  friend std::strong_ordering operator<=>(const DecoratedGraph& a, const DecoratedGraph& b);
  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;
};

struct DecoratedGraphHash {
  std::size_t operator()(const DecoratedGraph& g) const noexcept;
};

struct EnumerationParams {
  std::uint32_t n = 1;
  std::uint32_t d = 1;
};

/// "m=2 nu=[0,1] s=[0,0] delta=[1,1]".
std::string describeGraph(const DecoratedGraph& g);

/// Throws std::invalid_argument unless g has m >= 2, equal-length fields,
/// adjacent labels distinct and every delta >= 1. When n > 0, labels must also
/// lie in [0, n).
void validateGraph(const DecoratedGraph& g, std::uint32_t n = 0);

/// Lexicographically smallest word over the 2m rotations and reflections of
/// the cycle. Throws std::invalid_argument on an invalid tuple.
DecoratedGraph canonicalize(const DecoratedGraph& g);

/// One canonical representative per isomorphism class, sorted. Work is split
/// across OpenMP threads; the result does not depend on the thread count.
std::vector<DecoratedGraph> enumerate(EnumerationParams p);

/// Single-threaded version of enumerate.
std::vector<DecoratedGraph> enumerateSerial(EnumerationParams p);

/// Independent oracle: walks every raw tuple, expands each unseen tuple's full
/// orbit through explicit vertex maps of the cycle and keeps the orbit
/// minimum. Exponential; intended for n * d <= 20 or so.
std::vector<DecoratedGraph> bruteForceEnumerate(EnumerationParams p);

}  // namespace sqbetti
