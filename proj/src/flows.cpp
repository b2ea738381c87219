#include "heunfg/flows.hpp"

#include <algorithm>
#include <optional>

#include "heunfg/linsolve.hpp"

namespace heunfg {

SingularRational potential_U(const Characteristics& m, AField a_value) {
    auto quarter = [](int mi) {
        return AField(Rational(static_cast<long>(mi) * (mi + 1), 4));
    };
    const AField a = a_value;
    SingularRational r(a_value);

    // polynomial part: m0(m0+1)/4 z + m2(m2+1)/4 + m3(m3+1)/4 a
    std::vector<AField> poly{quarter(m.m2) + quarter(m.m3) * a, quarter(m.m0)};
    SingularRational u = SingularRational::from_poly(std::move(poly), a_value);

    // principal parts: m1(m1+1)/4 a / z  +  m2(m2+1)/4 (1-a)/(z-1)
    //                +  m3(m3+1)/4 a(a-1)/(z-a)
    SingularRational pp = SingularRational::from_quotient({quarter(m.m1) * a}, 1, 0, 0, a_value);
    pp += SingularRational::from_quotient({quarter(m.m2) * (AField(1) - a)}, 0, 1, 0, a_value);
    pp += SingularRational::from_quotient({quarter(m.m3) * a * (a - AField(1))}, 0, 0, 1, a_value);
    return u + pp;
}

SingularRational apply_flow_operator(const SingularRational& f, const SingularRational& U) {
    const AField& a = f.a_value();
    // cubic z(z-1)(z-a) = z^3 - (a+1)z^2 + a z
    SingularRational cubic = SingularRational::from_poly(
        {AField(0), a, -(a + AField(1)), AField(1)}, a);
    // (3z^2 - 2(a+1)z + a)/2
    SingularRational quad = SingularRational::from_poly(
        {a / AField(2), -(a + AField(1)), AField(Rational(3, 2))}, a);

    SingularRational fp = f.derivative();
    SingularRational fpp = fp.derivative();
    SingularRational integrand = (U * fp).scaled(AField(4)) + (f * U.derivative()).scaled(AField(2));
    return cubic * fpp + quad * fp - integrand.integrate();
}

FlowSequence::FlowSequence(Characteristics m, AField a_value)
    : m_(std::move(m)), aval_(std::move(a_value)) {}

const SingularRational& FlowSequence::get(int n) {
    if (flows_.empty()) flows_.push_back(potential_U(m_, aval_));
    while (static_cast<int>(flows_.size()) <= n)
        flows_.push_back(apply_flow_operator(flows_.back(), flows_.front()));
    return flows_[static_cast<size_t>(n)];
}

namespace {

// coordinates of f in the joint partial-fraction basis
std::vector<AField> coordinates(const SingularRational& f, int poly_deg, const std::array<int, 3>& ords) {
    std::vector<AField> v;
    v.reserve(static_cast<size_t>(poly_deg + 1 + ords[0] + ords[1] + ords[2]));
    for (int i = 0; i <= poly_deg; ++i)
        v.push_back(i < static_cast<int>(f.poly().size()) ? f.poly()[static_cast<size_t>(i)]
                                                          : AField(0));
    for (int p = 0; p < 3; ++p) {
        const auto& pp = f.principal(p);
        for (int j = 0; j < ords[static_cast<size_t>(p)]; ++j)
            v.push_back(j < static_cast<int>(pp.size()) ? pp[static_cast<size_t>(j)] : AField(0));
    }
    return v;
}

}  // namespace

std::optional<std::vector<AField>> affine_span_solve(
    const std::vector<SingularRational>& basis, const SingularRational& target) {
    int poly_deg = target.poly_degree();
    std::array<int, 3> ords{target.pole_order(0), target.pole_order(1), target.pole_order(2)};
    for (const auto& f : basis) {
        poly_deg = std::max(poly_deg, f.poly_degree());
        for (int p = 0; p < 3; ++p)
            ords[static_cast<size_t>(p)] = std::max(ords[static_cast<size_t>(p)], f.pole_order(p));
    }
    poly_deg = std::max(poly_deg, 0);

    const size_t cols = basis.size() + 1;
    std::vector<std::vector<AField>> columns;
    columns.reserve(cols);
    for (const auto& f : basis) columns.push_back(coordinates(f, poly_deg, ords));
    {
        SingularRational one = SingularRational::from_poly({AField(1)}, target.a_value());
        columns.push_back(coordinates(one, poly_deg, ords));
    }
    std::vector<AField> rhs = coordinates(target, poly_deg, ords);

    const size_t coord_rows = rhs.size();
    const size_t rows = std::max(coord_rows, cols);
    ExactMatrix A(rows, cols);
    std::vector<UPoly> b(rows);
    for (size_t i = 0; i < coord_rows; ++i) {
        UPoly den{Rational(1)};
        for (size_t j = 0; j < cols; ++j) den = den * columns[j][i].den();
        den = den * rhs[i].den();
        for (size_t j = 0; j < cols; ++j) {
            const AField& e = columns[j][i];
            A.at(i, j) = e.num() * den.divide_exact(e.den());
        }
        b[i] = rhs[i].num() * den.divide_exact(rhs[i].den());
    }
    try {
        return exact_linear_solve(A, b);
    } catch (const LinSolveError&) {
        return std::nullopt;
    }
}

NovikovData novikov_order(FlowSequence& flows) {
    const Characteristics& m = flows.characteristics();
    // The flows are invariant under m_i -> -m_i-1, so the search bound must
    // be computed from the equivalent nonnegative characteristics.
    int bound = 0;
    for (int i = 0; i < 4; ++i) bound += std::max(m.at(i), -m.at(i) - 1);

    if (flows.get(0).is_constant()) {
        NovikovData d;
        d.order = 0;
        d.affine_constant =
            flows.get(0).poly().empty() ? AField(0) : flows.get(0).poly()[0];
        return d;
    }

    for (int n = 1; n <= bound; ++n) {
        std::vector<SingularRational> basis;
        for (int k = n - 1; k >= 0; --k) basis.push_back(flows.get(k));
        if (auto x = affine_span_solve(basis, flows.get(n))) {
            NovikovData d;
            d.order = n;
            d.constants.reserve(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) d.constants.push_back(-(*x)[static_cast<size_t>(j)]);
            d.affine_constant = (*x)[static_cast<size_t>(n)];
            return d;
        }
    }
    throw BoundExceeded();
}

NovikovData novikov_order(const Characteristics& m, AField a_value) {
    FlowSequence fs(m, std::move(a_value));
    return novikov_order(fs);
}

}  // namespace heunfg
