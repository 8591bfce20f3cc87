#pragma once

// JSON and text renderings of the computed objects.
//
// Polynomials serialize as arrays of decimal coefficient strings indexed by
// exponent; rationals as "p" or "p/q" strings; graphs as
// {"m":..,"nu":[..],"s":[..],"delta":[..]}.

#include "sqbetti/divisors.hpp"
#include "sqbetti/genus1.hpp"
#include "sqbetti/graph_enum.hpp"
#include "sqbetti/invariants.hpp"
#include "sqbetti/localization.hpp"
#include "sqbetti/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sqbetti {

using Json = nlohmann::ordered_json;

Json toJson(const IntPolynomial& p);
/// Throws std::invalid_argument on malformed input.
IntPolynomial polynomialFromJson(const Json& j);

Json toJson(const DecoratedGraph& g);
DecoratedGraph graphFromJson(const Json& j);

std::string rationalToString(const Rational& r);
Json toJson(const WeightVector& w);
Json toJson(const FixedLocusRecord& r);
Json toJson(const std::vector<InvariantCheck>& checks);

/// {"n","d","exclusion","weights","poincare","loci"}.
Json toJson(const Assembly& a);

/// {K, antiK_nef_basis, fano, intersection_table, ...}.
Json divisorsReport(SpaceIndex s);

/// One "degree,value" row per coefficient from t^0 to t^top.
std::string polynomialCsv(const IntPolynomial& p, std::size_t top);

/// "degree betti" rows, even and odd degrees alike.
std::string bettiTable(const IntPolynomial& p, std::size_t top);

}  // namespace sqbetti
