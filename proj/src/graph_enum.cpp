#include "sqbetti/graph_enum.hpp"

#include "sqbetti/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sqbetti {

std::uint32_t DecoratedGraph::degree() const {
  return std::accumulate(s.begin(), s.end(), 0U) + std::accumulate(delta.begin(), delta.end(), 0U);
}

std::strong_ordering operator<=>(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (auto c = a.m() <=> b.m(); c != 0) return c;
  for (std::size_t i = 0; i < a.m(); ++i) {
    if (auto c = a.nu[i] <=> b.nu[i]; c != 0) return c;
    if (auto c = a.s[i] <=> b.s[i]; c != 0) return c;
    if (auto c = a.delta[i] <=> b.delta[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t DecoratedGraphHash::operator()(const DecoratedGraph& g) const noexcept {
  std::size_t h = g.m();
  auto mix = [&h](std::uint32_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (std::size_t i = 0; i < g.m(); ++i) {
    mix(g.nu[i]);
    mix(g.s[i]);
    mix(g.delta[i]);
  }
  return h;
}

std::string describeGraph(const DecoratedGraph& g) {
  std::string out = "m=" + std::to_string(g.m());
  auto list = [&out](const char* name, const std::vector<std::uint32_t>& v) {
    out += std::string(" ") + name + "=[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    out += "]";
  };
  list("nu", g.nu);
  list("s", g.s);
  list("delta", g.delta);
  return out;
}

void validateGraph(const DecoratedGraph& g, std::uint32_t n) {
  const std::size_t m = g.m();
  if (g.s.size() != m || g.delta.size() != m) {
    throw std::invalid_argument("decorated graph: nu, s and delta must have equal length");
  }
  if (m < 2) throw std::invalid_argument("decorated graph: cycle length must be at least 2");
  for (std::size_t i = 0; i < m; ++i) {
    if (g.nu[i] == g.nu[(i + 1) % m]) {
      throw std::invalid_argument("decorated graph: adjacent vertices " + std::to_string(i) +
                                  " and " + std::to_string((i + 1) % m) + " share label " +
                                  std::to_string(g.nu[i]));
    }
    if (g.delta[i] == 0) {
      throw std::invalid_argument("decorated graph: edge " + std::to_string(i) +
                                  " has degree 0");
    }
    if (n > 0 && g.nu[i] >= n) {
      throw std::invalid_argument("decorated graph: label " + std::to_string(g.nu[i]) +
                                  " out of range for n=" + std::to_string(n));
    }
  }
}

namespace {

// Candidate word: position j reads vertex v(j) and the edge that follows it in
// the reading direction. Forward: v = start + j, edge v. Reflected:
// v = start - j, edge v - 1, so each edge stays between its two endpoints.
struct Reading {
  std::size_t start;
  bool reflected;

  std::size_t vertex(std::size_t j, std::size_t m) const {
    return reflected ? (start + m - j % m) % m : (start + j) % m;
  }
  std::size_t edge(std::size_t j, std::size_t m) const {
    const std::size_t v = vertex(j, m);
    return reflected ? (v + m - 1) % m : v;
  }
};

std::strong_ordering compareReadings(const DecoratedGraph& g, Reading a, Reading b) {
  const std::size_t m = g.m();
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t va = a.vertex(j, m), vb = b.vertex(j, m);
    if (auto c = g.nu[va] <=> g.nu[vb]; c != 0) return c;
    if (auto c = g.s[va] <=> g.s[vb]; c != 0) return c;
    if (auto c = g.delta[a.edge(j, m)] <=> g.delta[b.edge(j, m)]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

DecoratedGraph canonicalizeUnchecked(const DecoratedGraph& g) {
  const std::size_t m = g.m();
  Reading best{0, false};
  for (int r = 0; r < 2; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      Reading cand{k, r == 1};
      // Only starts at a minimal label can win.
      if (g.nu[k] > g.nu[best.start]) continue;
      if (compareReadings(g, cand, best) < 0) best = cand;
    }
  }
  DecoratedGraph out;
  out.nu.resize(m);
  out.s.resize(m);
  out.delta.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t v = best.vertex(j, m);
    out.nu[j] = g.nu[v];
    out.s[j] = g.s[v];
    out.delta[j] = g.delta[best.edge(j, m)];
  }
  return out;
}

// Proper colorings of the m-cycle whose first vertex carries the smallest
// label; every rotation class has such a member.
void collectColorings(std::uint32_t n, std::size_t m, std::vector<std::uint32_t>& cur,
                      std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == m) {
    if (cur.back() != cur.front()) out.push_back(cur);
    return;
  }
  const std::uint32_t lo = cur.empty() ? 0 : cur.front();
  for (std::uint32_t c = lo; c < n; ++c) {
    if (!cur.empty() && c == cur.back()) continue;
    cur.push_back(c);
    collectColorings(n, m, cur, out);
    cur.pop_back();
  }
}

// Weak compositions of `remaining` into cells.size() cells.
template <typename Visit>
void forEachComposition(std::vector<std::uint32_t>& cells, std::size_t pos,
                        std::uint32_t remaining, Visit&& visit) {
  if (pos + 1 == cells.size()) {
    cells[pos] = remaining;
    visit(cells);
    return;
  }
  for (std::uint32_t v = 0; v <= remaining; ++v) {
    cells[pos] = v;
    forEachComposition(cells, pos + 1, remaining - v, visit);
  }
}

using GraphSet = std::unordered_set<DecoratedGraph, DecoratedGraphHash>;

void expandColoring(const std::vector<std::uint32_t>& nu, std::uint32_t d, GraphSet& sink) {
  const std::size_t m = nu.size();
  // Cells [0, m) are s-values, [m, 2m) are delta excesses over the baseline 1.
  std::vector<std::uint32_t> cells(2 * m);
  DecoratedGraph g;
  g.nu = nu;
  g.s.resize(m);
  g.delta.resize(m);
  forEachComposition(cells, 0, d - static_cast<std::uint32_t>(m), [&](const auto& c) {
    for (std::size_t i = 0; i < m; ++i) {
      g.s[i] = c[i];
      g.delta[i] = c[m + i] + 1;
    }
    sink.insert(canonicalizeUnchecked(g));
  });
}

std::vector<std::vector<std::uint32_t>> allColorings(EnumerationParams p) {
  std::vector<std::vector<std::uint32_t>> work;
  for (std::size_t m = 2; m <= p.d; ++m) {
    std::vector<std::uint32_t> cur;
    collectColorings(p.n, m, cur, work);
  }
  return work;
}

void requireParams(EnumerationParams p) {
  if (p.n == 0 || p.d == 0) throw std::invalid_argument("enumeration needs n >= 1 and d >= 1");
}

std::vector<DecoratedGraph> sorted(const GraphSet& set) {
  std::vector<DecoratedGraph> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DecoratedGraph canonicalize(const DecoratedGraph& g) {
  validateGraph(g);
  return canonicalizeUnchecked(g);
}

std::vector<DecoratedGraph> enumerateSerial(EnumerationParams p) {
  requireParams(p);
  GraphSet set;
  for (const auto& nu : allColorings(p)) expandColoring(nu, p.d, set);
  return sorted(set);
}

std::vector<DecoratedGraph> enumerate(EnumerationParams p) {
  requireParams(p);
  const auto work = allColorings(p);
  GraphSet merged;
  const long count = static_cast<long>(work.size());
#pragma omp parallel num_threads(workerCount())
  {
    GraphSet local;
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i) expandColoring(work[static_cast<std::size_t>(i)], p.d, local);
#pragma omp critical(sqbetti_enumerate_merge)
    merged.insert(local.begin(), local.end());
  }
  return sorted(merged);
}

namespace {

// Image of g under the cycle symmetry i -> start + dir * i.
DecoratedGraph applySymmetry(const DecoratedGraph& g, std::size_t start, bool reflect) {
  const std::size_t m = g.m();
  DecoratedGraph h;
  h.nu.resize(m);
  h.s.resize(m);
  h.delta.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t img = reflect ? (start + m - i) % m : (start + i) % m;
    h.nu[img] = g.nu[i];
    h.s[img] = g.s[i];
    // Edge {i, i+1} lands on {img, img+1} or, reflected, on {img-1, img}.
    h.delta[reflect ? (img + m - 1) % m : img] = g.delta[i];
  }
  return h;
}

template <typename Visit>
void forEachBounded(std::vector<std::uint32_t>& vals, std::size_t pos, std::uint32_t lo,
                    std::uint32_t hi, Visit&& visit) {
  if (pos == vals.size()) {
    visit(vals);
    return;
  }
  for (std::uint32_t v = lo; v <= hi; ++v) {
    vals[pos] = v;
    forEachBounded(vals, pos + 1, lo, hi, visit);
  }
}

}  // namespace

std::vector<DecoratedGraph> bruteForceEnumerate(EnumerationParams p) {
  requireParams(p);
  std::set<DecoratedGraph> reps;
  for (std::size_t m = 1; m <= p.d; ++m) {
    GraphSet seen;
    std::vector<std::uint32_t> nu(m), s(m), delta(m);
    forEachBounded(nu, 0, 0, p.n - 1, [&](const auto& labels) {
      for (std::size_t i = 0; i < m; ++i) {
        if (labels[i] == labels[(i + 1) % m]) return;
      }
      forEachBounded(s, 0, 0, p.d, [&](const auto& sv) {
        const auto ssum = std::accumulate(sv.begin(), sv.end(), 0U);
        if (ssum + m > p.d) return;
        forEachBounded(delta, 0, 1, p.d, [&](const auto& dv) {
          if (ssum + std::accumulate(dv.begin(), dv.end(), 0U) != p.d) return;
          DecoratedGraph g{labels, sv, dv};
          if (seen.contains(g)) return;
          DecoratedGraph best = g;
          for (std::size_t k = 0; k < m; ++k) {
            for (bool refl : {false, true}) {
              DecoratedGraph h = applySymmetry(g, k, refl);
              if (h < best) best = h;
              seen.insert(std::move(h));
            }
          }
          reps.insert(std::move(best));
        });
      });
    });
  }
  return {reps.begin(), reps.end()};
}

}  // namespace sqbetti
