#pragma once

#include <json.hpp>

#include "heunfg/curve.hpp"
#include "heunfg/flows.hpp"
#include "heunfg/numerics.hpp"

namespace heunfg {

/// JSON forms: rationals as strings "p/q"; polynomials in `a` as ascending
/// arrays of rational strings; elements of Q(a) as {num, den}; complex
/// numbers as {re, im}; multivariate polynomials in canonical text.
/// Every emitter has a matching parser and parse(emit(x)) == x.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UPoly& p);
UPoly upoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AField& f);
AField afield_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::complex<double>& z);
std::complex<double> complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Characteristics& m);
Characteristics characteristics_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PsiPolynomial& psi);
PsiPolynomial psi_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectralCurve& curve);
SpectralCurve curve_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignClass& c);
SignClass sign_class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BranchPointRecord& r);
BranchPointRecord branch_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HeunEigenSystem& s);
HeunEigenSystem eigen_system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NovikovData& d);
NovikovData novikov_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolutionValue& v);
SolutionValue solution_value_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MonodromyData& d);
MonodromyData monodromy_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LabeledRoots& r);
nlohmann::json to_json(const StieltjesReport& r);

}  // namespace heunfg
