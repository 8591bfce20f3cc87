#include "sqbetti/report.hpp"

#include <sstream>
#include <stdexcept>

namespace sqbetti {

Json toJson(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

IntPolynomial polynomialFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    try {
      coeffs.emplace_back(c.get<std::string>());
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("bad coefficient '" + c.get<std::string>() + "'");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

Json toJson(const DecoratedGraph& g) {
  return Json{{"m", g.m()}, {"nu", g.nu}, {"s", g.s}, {"delta", g.delta}};
}

DecoratedGraph graphFromJson(const Json& j) {
  try {
    DecoratedGraph g{j.at("nu").get<std::vector<std::uint32_t>>(),
                     j.at("s").get<std::vector<std::uint32_t>>(),
                     j.at("delta").get<std::vector<std::uint32_t>>()};
    if (j.at("m").get<std::size_t>() != g.m()) {
      throw std::invalid_argument("graph JSON: m does not match the length of nu");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

std::string rationalToString(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Json toJson(const WeightVector& w) {
  Json arr = Json::array();
  for (const auto& x : w.w) arr.push_back(x.str());
  return arr;
}

Json toJson(const FixedLocusRecord& r) {
  Json j;
  if (const auto* a = std::get_if<TypeALocus>(&r.kind)) {
    j["kind"] = "A";
    j["ell"] = a->ell;
  } else {
    j["kind"] = "B";
  }
  j["positive_weights"] = r.positiveWeightCount;
  j["shift"] = r.shift();
  j["poincare"] = toJson(r.poincare);
  if (const auto* b = std::get_if<TypeBLocus>(&r.kind)) j["graph"] = toJson(b->graph);
  return j;
}

Json toJson(const std::vector<InvariantCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return arr;
}

Json toJson(const Assembly& a) {
  Json loci = Json::array();
  for (const auto& r : a.records) loci.push_back(toJson(r));
  return Json{{"n", a.n},
              {"d", a.d},
              {"exclusion", toString(a.rule)},
              {"weights", toJson(a.weights)},
              {"poincare", toJson(a.poincare)},
              {"loci", std::move(loci)}};
}

Json divisorsReport(SpaceIndex s) {
  const DivisorClass k = canonicalClass(s);
  const auto [a, b] = antiCanonicalNefBasis(s);
  const IntersectionTable t = intersectionTable(s);
  auto row = [](const std::array<Rational, 2>& r) {
    return Json{{"gamma_j", rationalToString(r[0])}, {"gamma_t", rationalToString(r[1])}};
  };
  return Json{
      {"n", s.n},
      {"d", s.d},
      {"K", {{"cj", rationalToString(k.cj)}, {"cb", rationalToString(k.cb)}}},
      {"antiK_nef_basis", {rationalToString(a), rationalToString(b)}},
      {"fano", isFano(s)},
      {"anti_canonical_ample", isAmple(-k)},
      {"picard_rank_two_asserted", picardRankTwoAsserted(s)},
      {"intersection_table", {{"D_b", row(t.db)}, {"D_j", row(t.dj)}, {"D_fd", row(t.dfd)}}},
      {"D_fd", {{"cj", rationalToString(dfdInBasis(s).cj)},
                {"cb", rationalToString(dfdInBasis(s).cb)}}}};
}

std::string polynomialCsv(const IntPolynomial& p, std::size_t top) {
  std::ostringstream os;
  os << "degree,value\n";
  for (std::size_t i = 0; i <= top; ++i) os << i << "," << p.coeff(i) << "\n";
  return os.str();
}

std::string bettiTable(const IntPolynomial& p, std::size_t top) {
  std::ostringstream os;
  os << "degree  betti\n";
  for (std::size_t i = 0; i <= top; ++i) {
    std::string deg = std::to_string(i);
    os << deg << std::string(deg.size() < 8 ? 8 - deg.size() : 1, ' ') << p.coeff(i) << "\n";
  }
  return os.str();
}

}  // namespace sqbetti
