#include "heunfg/psi.hpp"

#include <map>

#include "heunfg/linsolve.hpp"

namespace heunfg {

// z(z-1)(z-a)
MultiPoly singular_cubic() {
    auto z = MultiPoly::z();
    return z * (z - MultiPoly(1)) * (z - MultiPoly::a());
}

MultiPoly odd_coefficient(const Characteristics& m) {
    auto z = MultiPoly::z();
    auto a = MultiPoly::a();
    MultiPoly p = ((z - MultiPoly(1)) * (z - a)).scaled(Rational(1 - 2 * m.m1));
    p += (z * (z - a)).scaled(Rational(1 - 2 * m.m2));
    p += (z * (z - MultiPoly(1))).scaled(Rational(1 - 2 * m.m3));
    return p;
}

MultiPoly even_coefficient(const Characteristics& m) {
    long n = m.N();
    return MultiPoly::z().scaled(Rational(n * (n - 2 * m.m0 - 1))) + MultiPoly::l();
}

namespace {

MultiPoly a0_leading(const Characteristics& m) {
    auto z = MultiPoly::z();
    return z.pow(m.m1) * (z - MultiPoly(1)).pow(m.m2) * (z - MultiPoly::a()).pow(m.m3);
}

}  // namespace

MultiPoly product_equation_residual(const Characteristics& m, const MultiPoly& psi) {
    MultiPoly d1 = singular_cubic();
    MultiPoly p = odd_coefficient(m);
    MultiPoly q = even_coefficient(m);
    MultiPoly d1p = d1.dz(), pp = p.dz(), qp = q.dz();

    MultiPoly f1 = psi.dz();
    MultiPoly f2 = f1.dz();
    MultiPoly f3 = f2.dz();

    MultiPoly r = (d1 * d1 * f3).scaled(Rational(4));
    r += (d1 * p * f2).scaled(Rational(6));
    r += ((pp * d1 - p * d1p + p * p).scaled(Rational(2)) + (d1 * q).scaled(Rational(4))) * f1;
    r += (qp * d1 - q * d1p + p * q).scaled(Rational(2)) * psi;
    return r;
}

PsiPolynomial build_psi(const Characteristics& m, std::optional<Rational> a) {
    if (!m.all_nonnegative()) throw NegativeCharacteristic();
    if (a && (a->is_zero() || *a == Rational(1))) throw InvalidModulus();

    PsiPolynomial out;
    out.m = m;
    out.a = a;
    out.g = genus(m);
    const int n = m.N();
    const int g = out.g;

    auto specialize = [&](MultiPoly r) { return a ? r.subst_a(*a) : std::move(r); };

    MultiPoly fixed = a0_leading(m) * MultiPoly::monomial({0, g, 0}, Rational(1));
    if (g == 0) {
        out.psi = a ? fixed.subst_a(*a) : fixed;
        if (!specialize(product_equation_residual(m, out.psi)).is_zero())
            throw std::logic_error("build_psi: residual is nonzero");
        return out;
    }
    MultiPoly rhs_image = specialize(product_equation_residual(m, fixed));

    // unknown u_{j,i}: coefficient of z^i in a_j, i.e. the monomial z^i l^{g-j}
    const size_t cols = static_cast<size_t>(g) * static_cast<size_t>(n + 1);
    std::vector<MultiPoly> images;
    images.reserve(cols);
    for (int j = 1; j <= g; ++j)
        for (int i = 0; i <= n; ++i)
            images.push_back(specialize(
                product_equation_residual(m, MultiPoly::monomial({i, g - j, 0}, Rational(1)))));

    // one equation per z^p l^q monomial present anywhere
    std::map<std::pair<int, int>, size_t> row_of;
    auto note = [&](const MultiPoly& im) {
        for (const auto& [e, c] : im.terms()) {
            (void)c;
            row_of.emplace(std::make_pair(e.z, e.l), row_of.size());
        }
    };
    note(rhs_image);
    for (const auto& im : images) note(im);

    const size_t rows = std::max(row_of.size(), cols);
    ExactMatrix A(rows, cols);
    std::vector<UPoly> b(rows);
    for (size_t jc = 0; jc < cols; ++jc)
        for (const auto& [pq, r] : row_of)
            A.at(r, jc) = images[jc].coeff_zl(pq.first, pq.second);
    for (const auto& [pq, r] : row_of)
        b[r] = -rhs_image.coeff_zl(pq.first, pq.second);

    std::vector<AField> x = exact_linear_solve(A, b);  // failure here is a bug

    out.psi = fixed;
    size_t k = 0;
    for (int j = 1; j <= g; ++j)
        for (int i = 0; i <= n; ++i, ++k) {
            if (x[k].is_zero()) continue;
            if (!x[k].is_polynomial())
                throw std::logic_error("build_psi: non-polynomial coefficient in a");
            out.psi += MultiPoly::from_upoly_in_a(x[k].as_polynomial()) *
                       MultiPoly::monomial({i, g - j, 0}, Rational(1));
        }
    if (a) out.psi = out.psi.subst_a(*a);

    if (!specialize(product_equation_residual(m, out.psi)).is_zero())
        throw std::logic_error("build_psi: residual is nonzero");
    return out;
}

SingularRational coeff_ratio(const PsiPolynomial& p, int j) {
    AField aval = p.a ? AField(*p.a) : AField::var();
    MultiPoly num = p.coeff(j);
    std::vector<AField> coeffs;
    for (int i = 0; i <= num.deg_z(); ++i)
        coeffs.emplace_back(num.coeff_z(i).as_upoly_in_a());
    return SingularRational::from_quotient(std::move(coeffs), p.m.m1, p.m.m2, p.m.m3, aval);
}

}  // namespace heunfg
