#include "heunfg/resultant.hpp"

namespace heunfg {

namespace {

// z-coefficients of p as univariate polynomials in l
std::vector<UPoly> z_coeffs_in_l(const MultiPoly& p) {
    if (p.deg_a() != 0) throw std::invalid_argument("resultant_z: specialize `a` first");
    int d = p.deg_z();
    std::vector<UPoly> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = p.coeff_z(i).as_upoly_in_l();
    return c;
}

}  // namespace

UPoly resultant_z(const MultiPoly& p, const MultiPoly& q) {
    auto pc = z_coeffs_in_l(p);
    auto qc = z_coeffs_in_l(q);
    int n = static_cast<int>(pc.size()) - 1;
    int m = static_cast<int>(qc.size()) - 1;
    if (n < 0 || m < 0) return UPoly();
    if (n == 0 && m == 0) return UPoly(Rational(1));
    ExactMatrix S(static_cast<size_t>(n + m), static_cast<size_t>(n + m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S.at(static_cast<size_t>(i), static_cast<size_t>(i + j)) = pc[static_cast<size_t>(n - j)];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S.at(static_cast<size_t>(m + i), static_cast<size_t>(i + j)) = qc[static_cast<size_t>(m - j)];
    return bareiss_determinant(S);
}

UPoly discriminant_z(const MultiPoly& p) {
    int n = p.deg_z();
    if (n < 2) throw DegreeTooLow();
    UPoly res = resultant_z(p, p.dz());
    UPoly lc = p.coeff_z(n).as_upoly_in_l();
    UPoly d = res.divide_exact(lc);
    int e = (n * (n - 1)) / 2;
    return (e % 2 == 0) ? d : -d;
}

}  // namespace heunfg
