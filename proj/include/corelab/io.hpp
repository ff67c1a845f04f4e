#pragma once

#include "corelab/ehrhart.hpp"
#include "corelab/genfun.hpp"
#include "corelab/stats.hpp"

#include "json.hpp"

namespace corelab {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json to_json(const Rational& r);
Json to_json(const BigInt& z);
Json to_json(const VectorQ& v);
Json to_json(const VectorZ& v);
Json to_json(const Partition& p);
Json to_json(const Word& w);
Json to_json(const Verdict& v);
Json to_json(const PolynomialQ& p);  // [[numer, denom], ...] from the constant term up
Json to_json(const QuasiPolynomial& q);
Json to_json(const IntPolynomial& p);
Json to_json(const IntSeries& s);

Json to_json(const MomentReport& r);
Json to_json(const MaxReport& r);
Json to_json(const FloorIdentityReport& r);
Json to_json(const FitResult& r);
Json to_json(const ReciprocityReport& r);
Json to_json(const ExpectedSizeReport& r);
Json to_json(const LeadingCoefficientReport& r);
Json to_json(const WeakOrderReport& r);
Json to_json(const FussReport& r);
Json to_json(const WeightingCase& r);
Json to_json(const WeightingReport& r);

QuasiPolynomial quasi_from_json(const Json& j);

Json envelope(const Json& config, const Json& results, const std::string& grade, const std::string& verdict);

}  // namespace corelab
