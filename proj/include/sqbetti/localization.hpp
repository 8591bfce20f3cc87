#pragma once

// Torus weights on the normal bundles of the fixed loci and the
// Bialynicki-Birula assembly of the Poincare polynomial.
//
// The torus acts on the target through a strictly increasing integer weight
// vector w_0 < ... < w_{n-1}. A fixed locus contributes its own Poincare
// polynomial shifted by t^{2 d+}, where d+ counts the positive weights on its
// normal bundle.

#include "sqbetti/graph_enum.hpp"
#include "sqbetti/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <stdexcept>
#include <variant>
#include <vector>

namespace sqbetti {

using Rational = boost::multiprecision::cpp_rational;

struct WeightVector {
  std::vector<BigInt> w;

  std::size_t size() const { return w.size(); }
  const BigInt& operator[](std::size_t j) const { return w[j]; }
};

/// Which neighbour's label is dropped, besides nu_i, from the second family of
/// edge weights.
enum class ExclusionRule { kSuccessor, kPredecessor };

const char* toString(ExclusionRule rule);
/// Parses "successor" / "predecessor"; throws std::invalid_argument otherwise.
ExclusionRule parseExclusionRule(std::string_view text);

struct TypeALocus {
  std::uint32_t ell = 0;
};
struct TypeBLocus {
  DecoratedGraph graph;
};

struct FixedLocusRecord {
  std::variant<TypeALocus, TypeBLocus> kind;
  IntPolynomial poincare;
  std::size_t positiveWeightCount = 0;
  std::vector<Rational> weights;  // Type B only

  bool isTypeA() const { return std::holds_alternative<TypeALocus>(kind); }
  /// Exponent of t by which `poincare` is shifted in the assembly.
  std::size_t shift() const { return 2 * positiveWeightCount; }
};

class ZeroWeightError : public std::runtime_error {
 public:
  ZeroWeightError(const DecoratedGraph& g, const std::string& what)
      : std::runtime_error(what), graph_(g) {}
  const DecoratedGraph& graph() const { return graph_; }

 private:
  DecoratedGraph graph_;
};

class CardinalityMismatch : public std::runtime_error {
 public:
  CardinalityMismatch(const DecoratedGraph& g, std::size_t expected, std::size_t actual);
  const DecoratedGraph& graph() const { return graph_; }

 private:
  DecoratedGraph graph_;
};

/// Edge i: (2 delta_i - 1) weights along the covered line and (n-2) delta_i
/// weights in the transverse directions.
std::vector<Rational> weightsN1(const DecoratedGraph& g, std::size_t i, const WeightVector& w,
                                ExclusionRule rule = ExclusionRule::kSuccessor);

/// Vertex i: node smoothing. One weight if s_i == 0, two otherwise.
std::vector<Rational> weightsN2(const DecoratedGraph& g, std::size_t i, const WeightVector& w);

/// Vertex i: w_j - w_{nu_i} for every j != nu_i, each s_i times.
std::vector<Rational> weightsN3(const DecoratedGraph& g, std::size_t i, const WeightVector& w);

/// Union of the three families over all vertices and edges.
std::vector<Rational> normalWeights(const DecoratedGraph& g, const WeightVector& w,
                                    ExclusionRule rule = ExclusionRule::kSuccessor);

/// n*d - sum over s_i > 0 of (s_i - 1).
std::size_t expectedWeightCount(const DecoratedGraph& g, std::uint32_t n);

/// prod over s_i > 0 of (1 + t^2)^{s_i - 1}.
IntPolynomial typeBPoincare(const DecoratedGraph& g);

/// Throws ZeroWeightError or CardinalityMismatch.
FixedLocusRecord typeBRecord(const DecoratedGraph& g, const WeightVector& w,
                             ExclusionRule rule = ExclusionRule::kSuccessor);

std::vector<FixedLocusRecord> typeARecords(std::uint32_t n, std::uint32_t d);

/// w_j = K^j.
WeightVector powerWeights(std::uint32_t n, const BigInt& base);

/// True if no weight of any graph vanishes under w.
bool verifyNoZeroWeights(std::span<const DecoratedGraph> graphs, const WeightVector& w,
                         ExclusionRule rule = ExclusionRule::kSuccessor);

/// Tries w_j = K^j starting at K = baseK (default d + 2), doubling K until
/// every weight of every graph is nonzero. Throws ZeroWeightError after
/// maxAttempts candidates.
WeightVector chooseGenericWeights(std::uint32_t n, std::uint32_t d,
                                  std::span<const DecoratedGraph> graphs,
                                  std::optional<BigInt> baseK = std::nullopt,
                                  ExclusionRule rule = ExclusionRule::kSuccessor,
                                  int maxAttempts = 32);

struct AssemblyOptions {
  ExclusionRule rule = ExclusionRule::kSuccessor;
  std::optional<BigInt> baseK;
  /// Use this weight vector as is instead of choosing one.
  std::optional<WeightVector> weights;
};

struct Assembly {
  std::uint32_t n = 1;
  std::uint32_t d = 1;
  ExclusionRule rule = ExclusionRule::kSuccessor;
  WeightVector weights;
  IntPolynomial poincare;
  /// Type A loci by ell, then Type B loci in canonical graph order.
  std::vector<FixedLocusRecord> records;
};

/// Full Poincare polynomial of the degree-d genus-1 stable quotient space with
/// target P^{n-1}. Type B records are computed across OpenMP threads; the
/// output is identical for any thread count.
Assembly assemblePoincare(std::uint32_t n, std::uint32_t d, const AssemblyOptions& opts = {});

/// Single-threaded reference for assemblePoincare.
Assembly assemblePoincareSerial(std::uint32_t n, std::uint32_t d,
                                const AssemblyOptions& opts = {});

}  // namespace sqbetti
