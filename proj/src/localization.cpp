#include "sqbetti/localization.hpp"

#include "sqbetti/genus1.hpp"
#include "sqbetti/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace sqbetti {

namespace {

void requireParams(std::uint32_t n, std::uint32_t d) {
  if (n == 0 || d == 0) throw std::invalid_argument("n and d must both be positive");
}

}  // namespace

const char* toString(ExclusionRule rule) {
  return rule == ExclusionRule::kSuccessor ? "successor" : "predecessor";
}

ExclusionRule parseExclusionRule(std::string_view text) {
  if (text == "successor") return ExclusionRule::kSuccessor;
  if (text == "predecessor") return ExclusionRule::kPredecessor;
  throw std::invalid_argument("unknown exclusion rule '" + std::string(text) + "'");
}

CardinalityMismatch::CardinalityMismatch(const DecoratedGraph& g, std::size_t expected,
                                         std::size_t actual)
    : std::runtime_error("weight multiset of graph " + describeGraph(g) + " has " +
                         std::to_string(actual) + " entries, expected " +
                         std::to_string(expected)),
      graph_(g) {}

std::vector<Rational> weightsN1(const DecoratedGraph& g, std::size_t i, const WeightVector& w,
                                ExclusionRule rule) {
  const std::size_t m = g.m();
  const std::uint32_t here = g.nu[i];
  const std::uint32_t next = g.nu[(i + 1) % m];
  const std::uint32_t prev = g.nu[(i + m - 1) % m];
  const std::uint32_t excluded = rule == ExclusionRule::kSuccessor ? next : prev;
  const long delta = g.delta[i];
  const BigInt span = w[here] - w[next];

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(2 * delta - 1) + (w.size() - 2) * delta);
  for (long c = -delta; c <= delta - 1; ++c) {
    if (c == 0) continue;
    out.emplace_back(Rational(c, delta) * span);
  }
  for (std::uint32_t j = 0; j < w.size(); ++j) {
    if (j == here || j == excluded) continue;
    for (long c = 0; c < delta; ++c) {
      out.emplace_back(Rational(w[j]) - Rational(delta - c, delta) * w[here] -
                       Rational(c, delta) * w[next]);
    }
  }
  return out;
}

std::vector<Rational> weightsN2(const DecoratedGraph& g, std::size_t i, const WeightVector& w) {
  const std::size_t m = g.m();
  const BigInt& here = w[g.nu[i]];
  const BigInt& next = w[g.nu[(i + 1) % m]];
  const BigInt& prev = w[g.nu[(i + m - 1) % m]];
  if (g.s[i] == 0) return {Rational(next + prev - 2 * here)};
  return {Rational(next - here), Rational(prev - here)};
}

std::vector<Rational> weightsN3(const DecoratedGraph& g, std::size_t i, const WeightVector& w) {
  std::vector<Rational> out;
  const std::uint32_t here = g.nu[i];
  out.reserve((w.size() - 1) * g.s[i]);
  for (std::uint32_t j = 0; j < w.size(); ++j) {
    if (j == here) continue;
    for (std::uint32_t k = 0; k < g.s[i]; ++k) out.emplace_back(w[j] - w[here]);
  }
  return out;
}

std::vector<Rational> normalWeights(const DecoratedGraph& g, const WeightVector& w,
                                    ExclusionRule rule) {
  std::vector<Rational> all;
  for (std::size_t i = 0; i < g.m(); ++i) {
    for (auto* family : {&weightsN2, &weightsN3}) {
      auto part = (*family)(g, i, w);
      all.insert(all.end(), part.begin(), part.end());
    }
    auto edge = weightsN1(g, i, w, rule);
    all.insert(all.end(), edge.begin(), edge.end());
  }
  return all;
}

std::size_t expectedWeightCount(const DecoratedGraph& g, std::uint32_t n) {
  std::size_t fixedDim = 0;
  for (auto s : g.s) {
    if (s > 0) fixedDim += s - 1;
  }
  return static_cast<std::size_t>(n) * g.degree() - fixedDim;
}

IntPolynomial typeBPoincare(const DecoratedGraph& g) {
  unsigned exponent = 0;
  for (auto s : g.s) {
    if (s > 0) exponent += s - 1;
  }
  return IntPolynomial{1, 0, 1}.pow(exponent);
}

FixedLocusRecord typeBRecord(const DecoratedGraph& g, const WeightVector& w, ExclusionRule rule) {
  validateGraph(g, static_cast<std::uint32_t>(w.size()));
  FixedLocusRecord rec;
  rec.kind = TypeBLocus{g};
  rec.weights = normalWeights(g, w, rule);
  const std::size_t expected = expectedWeightCount(g, static_cast<std::uint32_t>(w.size()));
  if (rec.weights.size() != expected) throw CardinalityMismatch(g, expected, rec.weights.size());
  for (const auto& x : rec.weights) {
    if (x == 0) throw ZeroWeightError(g, "zero torus weight on graph " + describeGraph(g));
    if (x > 0) ++rec.positiveWeightCount;
  }
  rec.poincare = typeBPoincare(g);
  return rec;
}

std::vector<FixedLocusRecord> typeARecords(std::uint32_t n, std::uint32_t d) {
  requireParams(n, d);
  const IntPolynomial genus1 = poincareViaStrata(d);
  std::vector<FixedLocusRecord> out;
  out.reserve(n);
  for (std::uint32_t ell = 0; ell < n; ++ell) {
    FixedLocusRecord rec;
    rec.kind = TypeALocus{ell};
    rec.poincare = genus1;
    rec.positiveWeightCount = static_cast<std::size_t>(d) * ell;
    out.push_back(std::move(rec));
  }
  return out;
}

WeightVector powerWeights(std::uint32_t n, const BigInt& base) {
  WeightVector v;
  v.w.reserve(n);
  BigInt p = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    v.w.push_back(p);
    p *= base;
  }
  return v;
}

bool verifyNoZeroWeights(std::span<const DecoratedGraph> graphs, const WeightVector& w,
                         ExclusionRule rule) {
  for (const auto& g : graphs) {
    for (const auto& x : normalWeights(g, w, rule)) {
      if (x == 0) return false;
    }
  }
  return true;
}

WeightVector chooseGenericWeights(std::uint32_t n, std::uint32_t d,
                                  std::span<const DecoratedGraph> graphs,
                                  std::optional<BigInt> baseK, ExclusionRule rule,
                                  int maxAttempts) {
  requireParams(n, d);
  BigInt k = baseK.value_or(BigInt(d + 2));
  if (k < 2) throw std::invalid_argument("weight base K must be at least 2");
  for (int attempt = 0; attempt < maxAttempts; ++attempt, k *= 2) {
    WeightVector w = powerWeights(n, k);
    if (verifyNoZeroWeights(graphs, w, rule)) return w;
  }
  throw ZeroWeightError(graphs.empty() ? DecoratedGraph{} : graphs.front(),
                        "no zero-free weight vector found after " + std::to_string(maxAttempts) +
                            " escalations");
}

namespace {

void checkWeightVector(const WeightVector& w, std::uint32_t n) {
  if (w.size() != n) throw std::invalid_argument("weight vector length must equal n");
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (!(w[j - 1] < w[j])) throw std::invalid_argument("weights must be strictly increasing");
  }
}

Assembly assemble(std::uint32_t n, std::uint32_t d, const AssemblyOptions& opts, bool parallel) {
  requireParams(n, d);
  const auto graphs = parallel ? enumerate({n, d}) : enumerateSerial({n, d});

  Assembly out;
  out.n = n;
  out.d = d;
  out.rule = opts.rule;
  if (opts.weights) {
    checkWeightVector(*opts.weights, n);
    out.weights = *opts.weights;
  } else {
    out.weights = chooseGenericWeights(n, d, graphs, opts.baseK, opts.rule);
  }

  out.records = typeARecords(n, d);
  const std::size_t offset = out.records.size();
  out.records.resize(offset + graphs.size());

  const long count = static_cast<long>(graphs.size());
  if (parallel) {
    // Exceptions cannot leave an OpenMP region; keep the first by graph order.
    std::vector<std::exception_ptr> errors(graphs.size());
#pragma omp parallel for schedule(dynamic) num_threads(workerCount())
    for (long i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        out.records[offset + k] = typeBRecord(graphs[k], out.weights, opts.rule);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      out.records[offset + k] = typeBRecord(graphs[k], out.weights, opts.rule);
    }
  }

  for (const auto& rec : out.records) out.poincare += shift(rec.poincare, rec.shift());
  return out;
}

}  // namespace

Assembly assemblePoincare(std::uint32_t n, std::uint32_t d, const AssemblyOptions& opts) {
  return assemble(n, d, opts, true);
}

Assembly assemblePoincareSerial(std::uint32_t n, std::uint32_t d, const AssemblyOptions& opts) {
  return assemble(n, d, opts, false);
}

}  // namespace sqbetti
