#include "heunfg/json_io.hpp"

namespace heunfg {

namespace {

using nlohmann::json;

json modulus_to_json(const std::optional<Rational>& a) {
    return a ? json(a->str()) : json("symbolic");
}

std::optional<Rational> modulus_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "symbolic") return std::nullopt;
    return Rational::parse(s);
}

json complex_vec_to_json(const std::vector<std::complex<double>>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
}

std::vector<std::complex<double>> complex_vec_from_json(const json& j) {
    std::vector<std::complex<double>> out;
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

json afield_vec_to_json(const std::vector<AField>& v) {
    json out = json::array();
    for (const auto& f : v) out.push_back(to_json(f));
    return out;
}

std::vector<AField> afield_vec_from_json(const json& j) {
    std::vector<AField> out;
    for (const auto& e : j) out.push_back(afield_from_json(e));
    return out;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

json to_json(const UPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

UPoly upoly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(Rational::parse(e.get<std::string>()));
    return UPoly(std::move(c));
}

json to_json(const AField& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

AField afield_from_json(const json& j) {
    return AField(upoly_from_json(j.at("num")), upoly_from_json(j.at("den")));
}

json to_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

json to_json(const Characteristics& m) { return json{m.m0, m.m1, m.m2, m.m3}; }

Characteristics characteristics_from_json(const json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>()};
}

json to_json(const PsiPolynomial& psi) {
    json coeffs = json::array();
    for (int j = 0; j <= psi.g; ++j) coeffs.push_back(psi.coeff(j).str());
    return json{{"characteristics", to_json(psi.m)},
                {"modulus", modulus_to_json(psi.a)},
                {"genus", psi.g},
                {"psi", coeffs}};
}

PsiPolynomial psi_from_json(const json& j) {
    PsiPolynomial out;
    out.m = characteristics_from_json(j.at("characteristics"));
    out.a = modulus_from_json(j.at("modulus"));
    out.g = j.at("genus").get<int>();
    MultiPoly psi;
    const json& coeffs = j.at("psi");
    for (int k = 0; k <= out.g; ++k)
        psi += MultiPoly::parse(coeffs.at(static_cast<size_t>(k)).get<std::string>()) *
               MultiPoly::l().pow(out.g - k);
    out.psi = psi;
    return out;
}

json to_json(const SpectralCurve& curve) {
    json coeffs = json::array();
    for (int k = 0; k <= curve.nu2.deg_l(); ++k) coeffs.push_back(curve.nu2.coeff_l(k).str());
    json bp = json::object();
    for (const auto& [a, pts] : curve.cache) bp[a.str()] = complex_vec_to_json(pts);
    return json{{"characteristics", to_json(curve.m)},
                {"modulus", modulus_to_json(curve.a)},
                {"genus", curve.g},
                {"nu2", coeffs},
                {"branch_points", bp}};
}

SpectralCurve curve_from_json(const json& j) {
    SpectralCurve out;
    out.m = characteristics_from_json(j.at("characteristics"));
    out.a = modulus_from_json(j.at("modulus"));
    out.g = j.at("genus").get<int>();
    MultiPoly nu2;
    const json& coeffs = j.at("nu2");
    for (size_t k = 0; k < coeffs.size(); ++k)
        nu2 += MultiPoly::parse(coeffs.at(k).get<std::string>()) *
               MultiPoly::l().pow(static_cast<int>(k));
    out.nu2 = nu2;
    for (const auto& [key, pts] : j.at("branch_points").items())
        out.cache[Rational::parse(key)] = complex_vec_from_json(pts);
    return out;
}

json to_json(const SignClass& c) {
    return json{{"pattern", c.pattern},
                {"reduced", to_json(c.reduced)},
                {"count", c.count},
                {"deg_f", c.deg_f}};
}

SignClass sign_class_from_json(const json& j) {
    SignClass out;
    out.pattern = j.at("pattern").get<std::array<int, 4>>();
    out.reduced = characteristics_from_json(j.at("reduced"));
    out.count = j.at("count").get<int>();
    out.deg_f = j.at("deg_f").get<int>();
    return out;
}

json to_json(const BranchPointRecord& r) {
    json out{{"lambda", to_json(r.lambda)},
             {"multiplicities", r.M},
             {"reduced", to_json(r.reduced)},
             {"deg_f", r.deg_f},
             {"f_monic", afield_vec_to_json(r.f_monic)},
             {"scale", to_json(r.scale)},
             {"f_numeric", complex_vec_to_json(r.f_numeric)},
             {"lambda_tilde", to_json(r.lambda_tilde)}};
    out["lambda_exact"] = r.lambda_exact ? to_json(*r.lambda_exact) : json();
    out["lambda_tilde_exact"] = r.lambda_tilde_exact ? to_json(*r.lambda_tilde_exact) : json();
    return out;
}

BranchPointRecord branch_record_from_json(const json& j) {
    BranchPointRecord out;
    if (!j.at("lambda_exact").is_null()) out.lambda_exact = afield_from_json(j.at("lambda_exact"));
    out.lambda = complex_from_json(j.at("lambda"));
    out.M = j.at("multiplicities").get<std::array<int, 4>>();
    out.reduced = characteristics_from_json(j.at("reduced"));
    out.deg_f = j.at("deg_f").get<int>();
    out.f_monic = afield_vec_from_json(j.at("f_monic"));
    out.scale = afield_from_json(j.at("scale"));
    out.f_numeric = complex_vec_from_json(j.at("f_numeric"));
    if (!j.at("lambda_tilde_exact").is_null())
        out.lambda_tilde_exact = afield_from_json(j.at("lambda_tilde_exact"));
    out.lambda_tilde = complex_from_json(j.at("lambda_tilde"));
    return out;
}

json to_json(const HeunEigenSystem& s) {
    json charpoly = json::array();
    for (const auto& p : s.charpoly_a) charpoly.push_back(to_json(p));
    json values = json::array();
    for (const auto& v : s.values) {
        json e{{"lambda", to_json(v.lambda)}, {"f", complex_vec_to_json(v.f)}};
        e["lambda_exact"] = v.lambda_exact ? to_json(*v.lambda_exact) : json();
        values.push_back(std::move(e));
    }
    return json{{"reduced", to_json(s.reduced)},
                {"degree", s.degree},
                {"charpoly", charpoly},
                {"values", values}};
}

HeunEigenSystem eigen_system_from_json(const json& j) {
    HeunEigenSystem out;
    out.reduced = characteristics_from_json(j.at("reduced"));
    out.degree = j.at("degree").get<int>();
    for (const auto& p : j.at("charpoly")) out.charpoly_a.push_back(upoly_from_json(p));
    for (const auto& e : j.at("values")) {
        HeunEigenpair v;
        if (!e.at("lambda_exact").is_null()) v.lambda_exact = afield_from_json(e.at("lambda_exact"));
        v.lambda = complex_from_json(e.at("lambda"));
        v.f = complex_vec_from_json(e.at("f"));
        out.values.push_back(std::move(v));
    }
    return out;
}

json to_json(const NovikovData& d) {
    return json{{"order", d.order},
                {"constants", afield_vec_to_json(d.constants)},
                {"affine_constant", to_json(d.affine_constant)}};
}

NovikovData novikov_from_json(const json& j) {
    NovikovData out;
    out.order = j.at("order").get<int>();
    out.constants = afield_vec_from_json(j.at("constants"));
    out.affine_constant = afield_from_json(j.at("affine_constant"));
    return out;
}

json to_json(const SolutionValue& v) {
    return json{{"y1", to_json(v.y1)},
                {"y2", to_json(v.y2)},
                {"lambda", to_json(v.lambda)},
                {"z", to_json(v.z)}};
}

SolutionValue solution_value_from_json(const json& j) {
    SolutionValue out;
    out.y1 = complex_from_json(j.at("y1"));
    out.y2 = complex_from_json(j.at("y2"));
    out.lambda = complex_from_json(j.at("lambda"));
    out.z = complex_from_json(j.at("z"));
    return out;
}

namespace {
json mat_to_json(const Mat2& m) {
    return json{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
}
Mat2 mat_from_json(const json& j) {
    return {{{j.at(0).at(0).get<double>(), j.at(0).at(1).get<double>()},
             {j.at(1).at(0).get<double>(), j.at(1).at(1).get<double>()}}};
}
}  // namespace

json to_json(const MonodromyData& d) {
    return json{{"phi", d.phi},
                {"psi", d.psi_angle},
                {"M0", mat_to_json(d.M0)},
                {"M1", mat_to_json(d.M1)},
                {"M2", mat_to_json(d.M2)}};
}

MonodromyData monodromy_from_json(const json& j) {
    MonodromyData out;
    out.phi = j.at("phi").get<double>();
    out.psi_angle = j.at("psi").get<double>();
    out.M0 = mat_from_json(j.at("M0"));
    out.M1 = mat_from_json(j.at("M1"));
    out.M2 = mat_from_json(j.at("M2"));
    return out;
}

json to_json(const LabeledRoots& r) {
    return json{{"label", r.label}, {"roots", complex_vec_to_json(r.roots)}};
}

json to_json(const StieltjesReport& r) {
    return json{{"residuals", r.residuals}, {"max_residual", r.max_residual}};
}

}  // namespace heunfg
