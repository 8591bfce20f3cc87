#include "sqbetti/graph_enum.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>

using sqbetti::DecoratedGraph;
using sqbetti::canonicalize;

namespace {

std::set<DecoratedGraph> asSet(const std::vector<DecoratedGraph>& v) { return {v.begin(), v.end()}; }

// Rotate by k then optionally reverse the orientation, written directly on the
// tuple: reversing keeps vertex 0, sends vertex i to m - i and edge i to the
// edge between the images of its endpoints.
DecoratedGraph transform(const DecoratedGraph& g, std::size_t k, bool flip) {
  const std::size_t m = g.m();
  DecoratedGraph r = g;
  for (std::size_t i = 0; i < m; ++i) {
    r.nu[i] = g.nu[(i + k) % m];
    r.s[i] = g.s[(i + k) % m];
    r.delta[i] = g.delta[(i + k) % m];
  }
  if (!flip) return r;
  DecoratedGraph f = r;
  for (std::size_t i = 0; i < m; ++i) {
    f.nu[i] = r.nu[(m - i) % m];
    f.s[i] = r.s[(m - i) % m];
    f.delta[i] = r.delta[(2 * m - i - 1) % m];
  }
  return f;
}

bool proper(const DecoratedGraph& g) {
  for (std::size_t i = 0; i < g.m(); ++i) {
    if (g.nu[i] == g.nu[(i + 1) % g.m()]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(sqbetti::validateGraph({{0, 1}, {0, 0}, {1, 1}}));
  CHECK_THROWS_AS(sqbetti::validateGraph({{0}, {0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(sqbetti::validateGraph({{0, 0}, {0, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(sqbetti::validateGraph({{0, 1}, {0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(sqbetti::validateGraph({{0, 1}, {0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(sqbetti::validateGraph({{0, 2}, {0, 0}, {1, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({{0, 1, 0}, {0, 0, 0}, {1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("canonical form of small cycles") {
  CHECK(canonicalize({{1, 0}, {0, 0}, {1, 1}}) == DecoratedGraph{{0, 1}, {0, 0}, {1, 1}});
  CHECK(canonicalize({{1, 0}, {2, 0}, {3, 1}}) == DecoratedGraph{{0, 1}, {0, 2}, {1, 3}});
  CHECK(canonicalize({{0, 1, 2}, {0, 0, 0}, {2, 1, 1}}) ==
        DecoratedGraph{{0, 2, 1}, {0, 0, 0}, {1, 1, 2}});
  CHECK(canonicalize({{0, 1, 2}, {0, 0, 0}, {2, 1, 1}}) ==
        canonicalize({{0, 2, 1}, {0, 0, 0}, {1, 1, 2}}));
}

TEST_CASE("canonicalize is constant on dihedral orbits") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + trial % 6;
    DecoratedGraph g;
    do {
      g = {};
      for (std::size_t i = 0; i < m; ++i) {
        g.nu.push_back(rng() % 4);
        g.s.push_back(rng() % 3);
        g.delta.push_back(1 + rng() % 3);
      }
    } while (!proper(g));
    const DecoratedGraph c = canonicalize(g);
    CHECK(canonicalize(c) == c);
    CHECK(c <= g);
    for (std::size_t k = 0; k < m; ++k) {
      for (bool flip : {false, true}) CHECK(canonicalize(transform(g, k, flip)) == c);
    }
  }
}

TEST_CASE("enumerate equals the brute-force orbit oracle for n <= 4, d <= 5") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t d = 1; d <= 5; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const auto fast = sqbetti::enumerate({n, d});
      CHECK(asSet(fast) == asSet(sqbetti::bruteForceEnumerate({n, d})));
      CHECK(asSet(fast).size() == fast.size());
    }
  }
}

TEST_CASE("known graph counts") {
  CHECK(sqbetti::enumerate({1, 7}).empty());
  CHECK(sqbetti::enumerate({5, 1}).empty());
  const auto two = sqbetti::enumerate({2, 2});
  REQUIRE(two.size() == 1);
  CHECK(two[0] == DecoratedGraph{{0, 1}, {0, 0}, {1, 1}});
  CHECK(sqbetti::enumerate({3, 3}).size() == 10);
  CHECK(sqbetti::enumerate({4, 4}).size() == 87);
}

TEST_CASE("graph counts grow with n and d") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t d = 1; d <= 5; ++d) {
      const auto here = sqbetti::enumerate({n, d}).size();
      CHECK(sqbetti::enumerate({n + 1, d}).size() >= here);
      CHECK(sqbetti::enumerate({n, d + 1}).size() >= here);
    }
  }
}

TEST_CASE("every enumerated graph is canonical and sums to d") {
  for (std::uint32_t d = 2; d <= 6; ++d) {
    const auto graphs = sqbetti::enumerate({3, d});
    CHECK(std::is_sorted(graphs.begin(), graphs.end()));
    for (const auto& g : graphs) {
      CHECK(canonicalize(g) == g);
      CHECK(g.degree() == d);
    }
  }
}

TEST_CASE("parallel enumeration matches serial for every thread count") {
  for (const char* threads : {"1", "2", "3", "8"}) {
    setenv("SQBETTI_THREADS", threads, 1);
    CHECK(sqbetti::enumerate({4, 5}) == sqbetti::enumerateSerial({4, 5}));
    CHECK(sqbetti::enumerate({5, 4}) == sqbetti::enumerateSerial({5, 4}));
  }
  unsetenv("SQBETTI_THREADS");
}

TEST_CASE("zero parameters are rejected") {
  CHECK_THROWS_AS(sqbetti::enumerate({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(sqbetti::enumerateSerial({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sqbetti::bruteForceEnumerate({0, 0}), std::invalid_argument);
}
