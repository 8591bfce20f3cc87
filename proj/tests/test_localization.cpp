#include "sqbetti/localization.hpp"

#include "oracles.hpp"
#include "sqbetti/genus1.hpp"
#include "sqbetti/invariants.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using namespace sqbetti;

namespace {

WeightVector weights(std::initializer_list<long long> w) {
  WeightVector v;
  for (auto x : w) v.w.emplace_back(x);
  return v;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Rational> rationals(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

IntPolynomial fromEven(std::initializer_list<long long> c) {
  const auto v = oracle::evenDegrees(c);
  return IntPolynomial(std::vector<BigInt>(v.begin(), v.end()));
}

const DecoratedGraph kLine{{0, 1}, {0, 0}, {1, 1}};

}  // namespace

TEST_CASE("node-smoothing weights") {
  CHECK(weightsN2(kLine, 0, weights({0, 1})) == rationals({2}));
  CHECK(weightsN2(kLine, 1, weights({0, 1})) == rationals({-2}));
  const DecoratedGraph g{{0, 1, 2}, {1, 0, 0}, {1, 1, 1}};
  CHECK(sorted(weightsN2(g, 0, weights({0, 1, 5}))) == rationals({1, 5}));
}

TEST_CASE("torsion weights") {
  CHECK(weightsN3(kLine, 0, weights({0, 1})).empty());
  const DecoratedGraph g{{0, 1}, {0, 2}, {1, 1}};
  CHECK(sorted(weightsN3(g, 1, weights({0, 1, 5}))) == rationals({-1, -1, 4, 4}));
}

TEST_CASE("edge weight counts and values") {
  const DecoratedGraph g{{0, 1}, {0, 0}, {2, 1}};
  CHECK(weightsN1(g, 0, weights({1, 4, 16})).size() == 5);
  CHECK(weightsN1(g, 1, weights({1, 4, 16})).size() == 2);
  // delta = 2 along w_0 = 1, w_1 = 4: (c/2)(1 - 4) for c in {-2, -1, 1}, then
  // 16 - ((2 - c)/2 * 1 + c/2 * 4) for c in {0, 1}.
  const std::vector<Rational> want{Rational(-3, 2), Rational(3), Rational(3, 2), Rational(15),
                                   Rational(27, 2)};
  CHECK(sorted(weightsN1(g, 0, weights({1, 4, 16}))) == sorted(want));
}

TEST_CASE("exclusion rule changes only the transverse family") {
  const DecoratedGraph g{{0, 1, 2}, {0, 0, 0}, {1, 1, 1}};
  const auto w = weights({1, 5, 25});
  const auto succ = weightsN1(g, 0, w, ExclusionRule::kSuccessor);
  const auto pred = weightsN1(g, 0, w, ExclusionRule::kPredecessor);
  CHECK(succ.size() == pred.size());
  CHECK(succ.front() == pred.front());
  CHECK(succ != pred);
  CHECK((parseExclusionRule("predecessor") == ExclusionRule::kPredecessor));
  CHECK_THROWS_AS(parseExclusionRule("left"), std::invalid_argument);
}

TEST_CASE("single Type B locus of the (2,2) space") {
  const auto rec = typeBRecord(kLine, weights({1, 4}));
  CHECK(rec.weights.size() == 4);
  CHECK(sorted(rec.weights) == rationals({-6, -3, 3, 6}));
  CHECK(rec.positiveWeightCount == 2);
  CHECK(rec.poincare == IntPolynomial{1});
}

TEST_CASE("cardinality and Poincare polynomial of a torsion vertex") {
  const DecoratedGraph g{{0, 1}, {1, 0}, {1, 1}};
  CHECK(expectedWeightCount(g, 2) == 6);
  const auto rec = typeBRecord(g, weights({1, 5}));
  CHECK(rec.weights.size() == 6);
  CHECK(rec.poincare == IntPolynomial{1});
  CHECK(typeBPoincare({{0, 1}, {3, 0}, {1, 1}}) == IntPolynomial{1, 0, 2, 0, 1});
}

TEST_CASE("Type A records") {
  const auto one = typeARecords(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].shift() == 0);
  const auto two = typeARecords(2, 2);
  CHECK(two[0].shift() == 0);
  CHECK(two[1].shift() == 4);
  const auto three = typeARecords(3, 1);
  for (std::size_t l = 0; l < 3; ++l) {
    CHECK(three[l].shift() == 2 * l);
    CHECK(three[l].poincare == IntPolynomial{1, 0, 1});
  }
}

TEST_CASE("generic weight selection") {
  const auto graphs = enumerate({2, 2});
  CHECK(chooseGenericWeights(2, 2, graphs).w == weights({1, 4}).w);
  CHECK(chooseGenericWeights(1, 9, {}).w == weights({1}).w);
  CHECK_THROWS_AS(chooseGenericWeights(2, 2, graphs, BigInt(1)), std::invalid_argument);
  const auto g33 = enumerate({3, 3});
  CHECK_FALSE(verifyNoZeroWeights(g33, weights({0, 1, 2})));
  CHECK(verifyNoZeroWeights(g33, chooseGenericWeights(3, 3, g33)));
}

TEST_CASE("a degenerate weight vector is reported with its graph") {
  AssemblyOptions opts;
  opts.weights = weights({0, 1, 2});
  try {
    assemblePoincare(3, 3, opts);
    FAIL("expected a zero weight");
  } catch (const ZeroWeightError& e) {
    CHECK(verifyNoZeroWeights(std::vector{e.graph()}, *opts.weights) == false);
  }
  opts.weights = weights({2, 1, 0});
  CHECK_THROWS_AS(assemblePoincare(3, 3, opts), std::invalid_argument);
}

TEST_CASE("published Betti tables") {
  CHECK(assemblePoincare(2, 2).poincare == fromEven({1, 2, 3, 2, 1}));
  CHECK(assemblePoincare(3, 3).poincare == fromEven({1, 2, 3, 4, 4, 4, 4, 3, 2, 1}));
  CHECK(assemblePoincare(4, 4).poincare ==
        fromEven({1, 2, 4, 5, 9, 10, 14, 14, 17, 14, 14, 10, 9, 5, 4, 2, 1}));
}

TEST_CASE("the space is a product when d = 1") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    CHECK(assemblePoincare(n, 1).poincare == IntPolynomial{1, 0, 1} * geometricSum(n));
  }
}

TEST_CASE("n = 1 reduces to the genus-1 polynomial") {
  for (std::uint32_t d = 1; d <= 12; ++d) {
    const auto a = assemblePoincare(1, d);
    CHECK(a.records.size() == 1);
    CHECK(a.poincare == poincareViaStrata(d));
  }
}

TEST_CASE("structural invariants hold on every small space") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t d = 1; d <= 5; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const auto checks = checkStructuralInvariants(assemblePoincare(n, d));
      for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("invariant checks catch a corrupted polynomial") {
  auto a = assemblePoincare(2, 2);
  a.poincare += IntPolynomial::monomial(1, 3);
  const auto checks = checkStructuralInvariants(a);
  CHECK_FALSE(allPassed(checks));
  auto failed = [&](const std::string& name) {
    return std::any_of(checks.begin(), checks.end(),
                       [&](const InvariantCheck& c) { return c.name == name && !c.passed; });
  };
  CHECK(failed("odd-vanishing"));
  CHECK(failed("palindrome"));
  CHECK(failed("euler"));
}

TEST_CASE("positive-weight counts do not depend on the weight vector") {
  for (auto [n, d] : {std::pair{3u, 3u}, std::pair{4u, 4u}, std::pair{3u, 5u}}) {
    AssemblyOptions a, b;
    a.baseK = BigInt(d + 2);
    b.baseK = BigInt(97);
    const auto x = assemblePoincare(n, d, a);
    const auto y = assemblePoincare(n, d, b);
    REQUIRE(x.weights.w != y.weights.w);
    REQUIRE(x.records.size() == y.records.size());
    for (std::size_t i = 0; i < x.records.size(); ++i) {
      CHECK(x.records[i].positiveWeightCount == y.records[i].positiveWeightCount);
    }
    CHECK(x.poincare == y.poincare);
  }
}

TEST_CASE("parallel assembly matches serial for every thread count") {
  for (const char* threads : {"1", "2", "5"}) {
    setenv("SQBETTI_THREADS", threads, 1);
    const auto p = assemblePoincare(4, 5);
    const auto s = assemblePoincareSerial(4, 5);
    CHECK(p.poincare == s.poincare);
    CHECK(p.weights.w == s.weights.w);
    REQUIRE(p.records.size() == s.records.size());
    for (std::size_t i = 0; i < p.records.size(); ++i) {
      CHECK(p.records[i].positiveWeightCount == s.records[i].positiveWeightCount);
      CHECK(p.records[i].weights == s.records[i].weights);
    }
  }
  unsetenv("SQBETTI_THREADS");
}

TEST_CASE("predecessor reading of the transverse weights") {
  AssemblyOptions opts;
  opts.rule = ExclusionRule::kPredecessor;
  CHECK(assemblePoincare(2, 2, opts).poincare == fromEven({1, 2, 3, 2, 1}));
  CHECK(assemblePoincare(3, 3, opts).poincare == fromEven({1, 2, 3, 4, 4, 3, 5, 3, 2, 1}));
  CHECK(assemblePoincare(4, 4, opts).poincare ==
        fromEven({1, 2, 4, 5, 9, 10, 12, 12, 18, 15, 12, 12, 10, 6, 4, 2, 1}));
}
